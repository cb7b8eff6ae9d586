#pragma once

#include <complex>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace eigc {

using SatakeTuple = std::vector<std::complex<double>>;

struct SatakeRecord {
  std::uint64_t p = 0;
  SatakeTuple params;
};

/// One JSON object per line: {"p": int, "params": [[re, im], ...]} or the unitary GL2
/// shorthand {"p": int, "ap": [re, im], "unitary": true} for the roots of x^2 - a_p x + 1.
/// Blank lines are skipped. Records come back sorted by p.
std::vector<SatakeRecord> load_satake(const std::string& path);
std::vector<SatakeRecord> parse_satake(std::istream& in);

/// Products over all size-k multisets of indices, in lexicographic index order.
SatakeTuple sym_power_tuple(const SatakeTuple& params, std::uint32_t k);
std::vector<SatakeRecord> sym_power_records(const std::vector<SatakeRecord>& recs,
                                            std::uint32_t k);

struct PrimeVerdict {
  std::uint64_t p = 0;
  bool contained = false;
  /// Smallest t admitting an injection small -> big moving no entry farther than t
  /// (infinity when small is longer than big).
  double residual = 0;
};

struct ContainmentResult {
  bool verdict = false;
  std::vector<PrimeVerdict> primes;  // primes present in both inputs, ascending
  std::vector<std::uint64_t> failing;
  double max_residual = 0;
};

/// Bottleneck distance of the best injection of small into big.
double injection_residual(const SatakeTuple& small, const SatakeTuple& big);

/// Per-prime injection test within tol. Throws DomainError on tol <= 0 or when the two
/// inputs share no prime.
ContainmentResult check_containment(const std::vector<SatakeRecord>& small,
                                    const std::vector<SatakeRecord>& big, double tol = 1e-9);

}  // namespace eigc
