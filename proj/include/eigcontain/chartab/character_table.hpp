#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigcontain/chartab/class_function.hpp"

namespace eigc {

inline constexpr std::size_t kDefaultMaxClasses = 64;

/// Row label. Closed-form GL2 rows use the families U(a), St(a), P(a,b),
/// C(j); generic rows have an empty family and are named by position.
struct IrrLabel {
  std::string family;
  std::vector<std::int64_t> params;

  std::string str(std::size_t index) const;
};

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::vector<IrrLabel> labels;
  std::string method;  // "generic" or "closed-form"
  std::optional<std::uint32_t> dixon_prime;
  std::optional<std::uint32_t> primitive_root;
  /// Closed-form GL2 only: a with central character x -> zeta_{q-1}^{a k} at x = xi^k.
  std::vector<std::int64_t> central_character;

  std::size_t size() const noexcept { return irreducibles.size(); }
  std::int64_t dim(std::size_t i) const { return *irreducibles[i].degree(); }
  std::string label(std::size_t i) const { return labels[i].str(i); }
  /// Index of the row whose label text is name ("#3", "C(2)", ...), or npos.
  std::size_t find(const std::string& name) const;
};

struct TableOptions {
  std::size_t max_classes = kDefaultMaxClasses;
  /// Largest prime the modular eigenvector search may use.
  std::uint32_t max_prime = 1u << 26;
};

/// Dixon-Schneider over F_p, exact values recovered by discrete Fourier
/// inversion along cyclic subgroups. Rows sorted by (dim, values).
CharacterTable character_table_generic(const GroupPtr& g, const TableOptions& opts = {});

/// Closed-form table of a GL2(F_q) model built by make_gl2.
CharacterTable character_table_gl2(const GroupPtr& g);
CharacterTable character_table_gl2_closed_form(std::uint32_t q);

/// closed-form for GL2 groups when method is "auto", generic otherwise.
CharacterTable character_table(const GroupPtr& g, const std::string& method = "auto",
                               const TableOptions& opts = {});

struct TableCheck {
  bool ok = true;
  std::string message;
};

/// Row and column orthogonality, count of rows, sum of squared degrees.
TableCheck validate_table(const CharacterTable& t);

/// Same multiset of rows (tables on the same group object).
bool tables_agree(const CharacterTable& a, const CharacterTable& b);

/// The regular character and the trivial character.
ClassFunction regular_character(const GroupPtr& g);
ClassFunction trivial_character(const GroupPtr& g);

}  // namespace eigc
