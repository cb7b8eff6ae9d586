#include "eigcontain/satake/satake.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <json.hpp>
#include <sstream>

#include "eigcontain/errors.hpp"
#include "eigcontain/exact/finite_field.hpp"
#include "eigcontain/simd/kernels.hpp"

namespace eigc {

namespace {

std::complex<double> parse_complex(const nlohmann::json& j, std::size_t line) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("expected a number or a [re, im] pair", line);
}

}  // namespace

std::vector<SatakeRecord> parse_satake(std::istream& in) {
  std::map<std::uint64_t, SatakeRecord> by_prime;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line);
    }
    if (!j.is_object()) throw ParseError("expected a JSON object", line);
    if (!j.contains("p") || !j["p"].is_number_integer() || j["p"].get<std::int64_t>() <= 0) {
      throw ParseError("missing or invalid \"p\"", line);
    }
    SatakeRecord rec;
    rec.p = j["p"].get<std::uint64_t>();
    if (!is_prime(rec.p)) throw ParseError(std::to_string(rec.p) + " is not prime", line);
    if (j.contains("params")) {
      if (!j["params"].is_array()) throw ParseError("\"params\" must be an array", line);
      for (const auto& v : j["params"]) rec.params.push_back(parse_complex(v, line));
    } else if (j.contains("ap")) {
      if (!j.value("unitary", false)) {
        throw ParseError("\"ap\" needs \"unitary\": true", line);
      }
      const auto a = parse_complex(j["ap"], line);
      const auto disc = std::sqrt(a * a - 4.0);
      rec.params = {(a + disc) / 2.0, (a - disc) / 2.0};
    } else {
      throw ParseError("record needs \"params\" or \"ap\"", line);
    }
    if (rec.params.empty()) throw ParseError("empty parameter tuple", line);
    for (const auto& z : rec.params) {
      if (z == std::complex<double>(0.0, 0.0)) throw ParseError("zero parameter", line);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ParseError("non-finite parameter", line);
      }
    }
    if (!by_prime.emplace(rec.p, rec).second) {
      throw ParseError("duplicate prime " + std::to_string(rec.p), line);
    }
  }
  std::vector<SatakeRecord> out;
  for (auto& [p, r] : by_prime) out.push_back(std::move(r));
  return out;
}

std::vector<SatakeRecord> load_satake(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return parse_satake(in);
}

SatakeTuple sym_power_tuple(const SatakeTuple& params, std::uint32_t k) {
  if (params.empty()) throw DomainError("empty parameter tuple");
  SatakeTuple out;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::complex<double> prod = 1.0;
    for (auto i : idx) prod *= params[i];
    out.push_back(prod);
    // Next nondecreasing index sequence.
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == params.size() - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < k; ++i) idx[i] = v;
  }
  return out;
}

std::vector<SatakeRecord> sym_power_records(const std::vector<SatakeRecord>& recs,
                                            std::uint32_t k) {
  std::vector<SatakeRecord> out;
  out.reserve(recs.size());
  for (const auto& r : recs) out.push_back({r.p, sym_power_tuple(r.params, k)});
  return out;
}

namespace {

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<std::size_t>& match_big, std::vector<char>& seen) {
  for (auto v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (match_big[v] == simd::npos || augment(match_big[v], adj, match_big, seen)) {
      match_big[v] = u;
      return true;
    }
  }
  return false;
}

bool has_injection(const std::vector<double>& d2, std::size_t n, std::size_t m, double limit) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (d2[i * m + j] <= limit) adj[i].push_back(j);
    }
    if (adj[i].empty()) return false;
  }
  std::vector<std::size_t> match_big(m, simd::npos);
  std::vector<char> seen(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(i, adj, match_big, seen)) return false;
  }
  return true;
}

}  // namespace

double injection_residual(const SatakeTuple& small, const SatakeTuple& big) {
  const std::size_t n = small.size(), m = big.size();
  if (n == 0) return 0;
  if (n > m) return std::numeric_limits<double>::infinity();
  std::vector<double> d2(n * m);
  simd::pairwise_sqdist(small, big, d2);
  std::vector<double> levels(d2);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  // Feasibility is monotone in the threshold; binary search the sorted distances.
  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (has_injection(d2, n, m, levels[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::sqrt(levels[lo]);
}

ContainmentResult check_containment(const std::vector<SatakeRecord>& small,
                                    const std::vector<SatakeRecord>& big, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  std::map<std::uint64_t, const SatakeTuple*> big_by_prime;
  for (const auto& r : big) big_by_prime[r.p] = &r.params;
  std::map<std::uint64_t, const SatakeTuple*> small_by_prime;
  for (const auto& r : small) small_by_prime[r.p] = &r.params;

  ContainmentResult res;
  for (const auto& [p, s] : small_by_prime) {
    auto it = big_by_prime.find(p);
    if (it == big_by_prime.end()) continue;
    PrimeVerdict v;
    v.p = p;
    v.residual = injection_residual(*s, *it->second);
    v.contained = v.residual <= tol;
    if (!v.contained) res.failing.push_back(p);
    res.max_residual = std::max(res.max_residual, v.residual);
    res.primes.push_back(v);
  }
  if (res.primes.empty()) throw DomainError("the two inputs share no prime");
  res.verdict = res.failing.empty();
  return res;
}

}  // namespace eigc
