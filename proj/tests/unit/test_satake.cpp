#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "eigcontain/errors.hpp"
#include "eigcontain/satake/satake.hpp"

using namespace eigc;
using cplx = std::complex<double>;

namespace {

// Exhaustive search over injections small -> big.
bool brute_injection(const SatakeTuple& small, const SatakeTuple& big, double tol) {
  if (small.size() > big.size()) return false;
  std::vector<std::size_t> perm(big.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < small.size() && ok; ++i) {
      ok = std::abs(small[i] - big[perm[i]]) <= tol;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<SatakeRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_satake(in);
}

std::vector<SatakeRecord> unitary_data(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> ang(0, M_PI);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::vector<SatakeRecord> out;
  for (std::size_t i = 0; i < count; ++i) {
    const cplx a = std::polar(1.0, ang(rng));
    out.push_back({primes[i], {a, 1.0 / a}});
  }
  return out;
}

}  // namespace

TEST(Satake, UnitaryShorthand) {
  const auto recs = parse(R"({"p": 2, "ap": [1.0, 0.0], "unitary": true})");
  ASSERT_EQ(recs.size(), 1u);
  const cplx z6 = std::polar(1.0, M_PI / 3);
  const auto& v = recs[0].params;
  ASSERT_EQ(v.size(), 2u);
  EXPECT_TRUE((std::abs(v[0] - z6) < 1e-12 && std::abs(v[1] - std::conj(z6)) < 1e-12) ||
              (std::abs(v[1] - z6) < 1e-12 && std::abs(v[0] - std::conj(z6)) < 1e-12));
}

TEST(Satake, LoadingRules) {
  EXPECT_TRUE(parse("").empty());
  EXPECT_TRUE(parse("\n  \n").empty());
  const auto recs = parse("{\"p\": 5, \"params\": [[1,0],[2,0]]}\n{\"p\": 3, \"params\": [1]}\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].p, 3u);
  EXPECT_EQ(recs[1].p, 5u);
  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("{\"p\": 2, \"params\": [1]}\n{\"p\": 4, \"params\": [1]}"), 2u);
  EXPECT_EQ(line_of("{\"p\": 2, \"params\": [1]}\n\n{\"p\": 2, \"params\": [3]}"), 3u);
  EXPECT_EQ(line_of("{\"p\": 2, \"params\": [[0, 0]]}"), 1u);
  EXPECT_EQ(line_of("{\"p\": 2, \"params\": []}"), 1u);
  EXPECT_EQ(line_of("{\"p\": 2"), 1u);
  EXPECT_EQ(line_of("{\"p\": 2, \"ap\": [1, 0]}"), 1u);
  EXPECT_THROW(load_satake("/nonexistent/file.jsonl"), DomainError);
}

TEST(Satake, SymPowerTuples) {
  const cplx a = std::polar(1.0, 0.7);
  const SatakeTuple t{a, 1.0 / a};
  const auto s2 = sym_power_tuple(t, 2);
  ASSERT_EQ(s2.size(), 3u);
  EXPECT_LT(std::abs(s2[0] - a * a), 1e-12);
  EXPECT_LT(std::abs(s2[1] - 1.0), 1e-12);
  EXPECT_LT(std::abs(s2[2] - 1.0 / (a * a)), 1e-12);
  const auto s3 = sym_power_tuple(t, 3);
  const SatakeTuple expect3{a * a * a, a, 1.0 / a, 1.0 / (a * a * a)};
  ASSERT_EQ(s3.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(std::abs(s3[i] - expect3[i]), 1e-12);
  EXPECT_EQ(sym_power_tuple({2.0, 3.0, 5.0}, 0), SatakeTuple{1.0});
  EXPECT_EQ(sym_power_tuple({2.0, 3.0, 5.0}, 1), (SatakeTuple{2.0, 3.0, 5.0}));
  EXPECT_EQ(sym_power_tuple({2.0, 3.0, 5.0}, 4).size(), 15u);
}

TEST(Satake, TrivialInsideSymSquare) {
  std::mt19937_64 rng(1);
  const auto data = unitary_data(rng, 12);
  std::vector<SatakeRecord> ones;
  for (const auto& r : data) ones.push_back({r.p, {1.0}});
  for (double tol : {1e-12, 1e-9, 1e-3}) {
    const auto res = check_containment(ones, sym_power_records(data, 2), tol);
    EXPECT_TRUE(res.verdict);
    EXPECT_EQ(res.primes.size(), 12u);
  }
}

TEST(Satake, LaddersNest) {
  std::mt19937_64 rng(2);
  const auto data = unitary_data(rng, 15);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto res = check_containment(sym_power_records(data, n - 1),
                                       sym_power_records(data, n + 1), 1e-9);
    EXPECT_TRUE(res.verdict) << n;
    EXPECT_LT(res.max_residual, 1e-12);
  }
}

TEST(Satake, MinusOneNotInSymSquare) {
  const cplx a = std::polar(1.0, 0.3);
  const std::vector<SatakeRecord> big{{2, sym_power_tuple({a, 1.0 / a}, 2)},
                                      {3, sym_power_tuple({cplx(0, 1), cplx(0, -1)}, 2)}};
  const std::vector<SatakeRecord> small{{2, {-1.0}}, {3, {-1.0}}};
  const auto res = check_containment(small, big, 1e-6);
  EXPECT_FALSE(res.verdict);
  EXPECT_EQ(res.failing, std::vector<std::uint64_t>{2});
  EXPECT_TRUE(res.primes[1].contained);
  EXPECT_NEAR(res.primes[0].residual, std::abs(-1.0 - a * a), 1e-12);
}

TEST(Satake, Errors) {
  const std::vector<SatakeRecord> a{{2, {1.0}}}, b{{3, {1.0}}};
  EXPECT_THROW(check_containment(a, b, 1e-9), DomainError);
  EXPECT_THROW(check_containment(a, a, 0.0), DomainError);
  EXPECT_THROW(check_containment(a, a, -1.0), DomainError);
}

TEST(Satake, MatchingAgreesWithBruteForce) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 6), pick(0, 3);
  std::uniform_real_distribution<double> tol_d(0.05, 0.6);
  // Values on a coarse grid plus jitter produce clustered, ambiguous instances.
  const cplx grid[] = {1.0, cplx(0, 1), -1.0, cplx(0.5, 0.5)};
  std::normal_distribution<double> jitter(0, 0.15);
  for (int trial = 0; trial < 1000; ++trial) {
    SatakeTuple small(size(rng)), big(size(rng));
    for (auto& z : small) z = grid[pick(rng)] + cplx(jitter(rng), jitter(rng));
    for (auto& z : big) z = grid[pick(rng)] + cplx(jitter(rng), jitter(rng));
    const double tol = tol_d(rng);
    const bool expect = brute_injection(small, big, tol);
    const auto res = check_containment({{2, small}}, {{2, big}}, tol);
    EXPECT_EQ(res.verdict, expect) << trial;
    const double r = injection_residual(small, big);
    if (std::isfinite(r)) {
      EXPECT_TRUE(brute_injection(small, big, r * (1 + 1e-12)));
      EXPECT_FALSE(r > 0 && brute_injection(small, big, r * (1 - 1e-9)));
    }
  }
}

TEST(Satake, ScaleEquivariance) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_real_distribution<double> u(-1, 1), ang(0, 2 * M_PI);
  for (int trial = 0; trial < 300; ++trial) {
    SatakeTuple small(size(rng)), big(size(rng));
    for (auto& z : small) z = cplx(u(rng), u(rng));
    for (auto& z : big) z = cplx(u(rng), u(rng));
    if (trial % 2 == 0) big[0] = small[0] + cplx(1e-3, 0);
    const cplx c = std::polar(1.0, ang(rng));
    SatakeTuple s2 = small, b2 = big;
    for (auto& z : s2) z *= c;
    for (auto& z : b2) z *= c;
    const double tol = 0.4;
    EXPECT_EQ(check_containment({{2, small}}, {{2, big}}, tol).verdict,
              check_containment({{2, s2}}, {{2, b2}}, tol).verdict);
  }
}
