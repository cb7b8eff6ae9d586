#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eigcontain/chartab/character_table.hpp"
#include "eigcontain/chartab/class_function.hpp"

namespace eigc {

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_tensor(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_scale(const ClassFunction& a, const Rational& s);

/// psi^k(chi)(c) = chi(power_map(c, k)).
ClassFunction adams(const ClassFunction& chi, std::int64_t k);
/// Newton: k L^k = sum_{i=1..k} (-1)^(i-1) L^(k-i) psi^i.
ClassFunction exterior_power(const ClassFunction& chi, std::uint32_t k);
/// Newton: k S^k = sum_{i=1..k} S^(k-i) psi^i.
ClassFunction symmetric_power(const ClassFunction& chi, std::uint32_t k);
/// Top exterior power of a character with integer degree d >= 0.
ClassFunction determinant(const ClassFunction& chi);

/// Eigenvalues zeta_m^j with multiplicity mults[j], m the order of the class representative.
struct EigenMultiset {
  std::uint32_t order = 1;
  std::vector<std::int64_t> mults;

  std::int64_t total() const;
  /// Sum of the eigenvalues, conductor order.
  CycNum sum() const;
  /// Product of the eigenvalues.
  CycNum product() const;
  /// Multiplicity of zeta_n^k for any n (0 when it is not an m-th root of unity).
  std::int64_t multiplicity(std::uint32_t n, std::int64_t k) const;
  /// (exponent of zeta_m, multiplicity) for every present eigenvalue.
  std::vector<std::pair<std::uint32_t, std::int64_t>> entries() const;
};

/// Multiplicities by exact discrete Fourier inversion along <g>. Throws
/// NotGenuine when a multiplicity is negative or fractional; with verify,
/// also checks the total and the sum of eigenvalues against chi.
EigenMultiset eigen_multiset(const ClassFunction& chi, std::size_t c, bool verify = true);

/// (row index, multiplicity) for every irreducible with nonzero multiplicity.
std::vector<std::pair<std::size_t, std::int64_t>> decompose(const ClassFunction& chi,
                                                            const CharacterTable& table);

/// a is a summand of b: every multiplicity of a is at most that of b.
bool is_subrepresentation(const ClassFunction& a, const ClassFunction& b,
                          const CharacterTable& table);

}  // namespace eigc
