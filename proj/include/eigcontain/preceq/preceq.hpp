#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eigcontain/chartab/character_table.hpp"
#include "eigcontain/lambda/lambda.hpp"

namespace eigc {

/// Outcome of chi1 <= chi2 (eigenvalue multisets contained class by class).
struct PreceqReport {
  bool holds = true;
  /// Least failing class; the eigenvalue there is zeta_order^exponent, the
  /// least exponent whose multiplicity in chi1 exceeds that in chi2.
  std::size_t witness_class = 0;
  std::uint32_t order = 1;
  std::uint32_t exponent = 0;
  std::int64_t small_multiplicity = 0;
  std::int64_t big_multiplicity = 0;

  std::int64_t deficit() const noexcept { return small_multiplicity - big_multiplicity; }
};

/// Both arguments must be genuine characters of the same group.
PreceqReport preceq_check(const ClassFunction& chi1, const ClassFunction& chi2);

/// Compare two precomputed eigen multisets of the same class.
std::optional<std::uint32_t> first_excess(const EigenMultiset& small, const EigenMultiset& big);

/// Eigen multisets of every (row, class), filled on construction.
class EigenTable {
 public:
  EigenTable(const std::vector<ClassFunction>& rows, unsigned threads = 1);
  const EigenMultiset& at(std::size_t row, std::size_t c) const { return data_[row][c]; }
  std::size_t rows() const noexcept { return data_.size(); }

 private:
  std::vector<std::vector<EigenMultiset>> data_;
};

struct SearchOptions {
  /// Required dim(chi_j) - dim(chi_i); nullopt searches every gap.
  std::optional<std::int64_t> gap;
  unsigned threads = 1;
};

/// Ordered pairs (i, j), i != j, of table rows with chi_i <= chi_j, sorted.
std::vector<std::pair<std::size_t, std::size_t>> preceq_search(const CharacterTable& table,
                                                              const SearchOptions& opts = {});

/// Pairs (s, j) with sources[s] <= chi_j, for sources that are not table rows
/// (reducible or constructed characters). Sorted.
std::vector<std::pair<std::size_t, std::size_t>> preceq_search_sources(
    const CharacterTable& table, const std::vector<ClassFunction>& sources,
    const SearchOptions& opts = {});

}  // namespace eigc
