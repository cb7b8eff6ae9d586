#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigcontain/groups/group.hpp"

namespace eigc {

GroupPtr make_symmetric(std::uint32_t n, std::size_t max_order = kDefaultMaxGroupOrder);
GroupPtr make_alternating(std::uint32_t n, std::size_t max_order = kDefaultMaxGroupOrder);
GroupPtr make_cyclic(std::uint32_t n, std::size_t max_order = kDefaultMaxGroupOrder);
/// Dihedral group of order 2n acting on n points.
GroupPtr make_dihedral(std::uint32_t n, std::size_t max_order = kDefaultMaxGroupOrder);
/// Quaternion group of order 8 in its regular permutation representation.
GroupPtr make_quaternion();

GroupPtr make_gl2(std::uint32_t q, std::size_t max_order = kDefaultMaxGroupOrder);
GroupPtr make_sl2(std::uint32_t q, std::size_t max_order = kDefaultMaxGroupOrder);
/// PGL2(F_q) as permutations of the projective line: point x < q is the
/// field element with encoding x, point q is infinity.
GroupPtr make_pgl2(std::uint32_t q, std::size_t max_order = kDefaultMaxGroupOrder);

/// Generators from a file of cycle-notation words, one per line; '#' starts
/// a comment. Points are 0-based and the degree is the largest point plus one.
GroupPtr load_permutation_group(const std::string& path,
                                std::size_t max_order = kDefaultMaxGroupOrder);

/// Descriptor forms: sym:N, alt:N, cyclic:N, dih:N, q8, gl2:Q, sl2:Q, pgl2:Q,
/// perm:<file>. Throws DomainError on an unknown form.
GroupPtr make_group(const std::string& descriptor, std::size_t max_order = kDefaultMaxGroupOrder);

/// Distinguished subgroups of a GL2(F_q) model, as sorted element indices.
struct Gl2Subgroups {
  std::vector<std::uint32_t> split_torus;     // T: diagonal
  std::vector<std::uint32_t> nonsplit_torus;  // S: F_q[M]^x for the companion matrix M
  std::vector<std::uint32_t> unipotent;       // U: upper unitriangular
  std::vector<std::uint32_t> center;          // Z: scalars
  /// x^2 + a x + b, the first irreducible monic quadratic in (a, b) order.
  FiniteField::Elem quad_a = 0;
  FiniteField::Elem quad_b = 0;
  /// Smallest element of S (in element order) of order q^2 - 1.
  std::uint32_t nonsplit_generator = 0;
};

Gl2Subgroups gl2_subgroups(const GroupModel& g);

/// The 2x2 matrix [[a, b], [c, d]] inside a GL2/SL2 model (npos if absent).
std::size_t gl2_index(const GroupModel& g, FiniteField::Elem a, FiniteField::Elem b,
                      FiniteField::Elem c, FiniteField::Elem d);

}  // namespace eigc
