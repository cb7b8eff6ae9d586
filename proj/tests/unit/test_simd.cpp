#include <gtest/gtest.h>

#include <complex>
#include <random>
#include <vector>

#include "eigcontain/simd/kernels.hpp"

using namespace eigc::simd;

namespace {

bool have_avx2() { return isa_available(Isa::avx2); }

}  // namespace

TEST(SimdKernels, ConvolveMatchesScalar) {
  if (!have_avx2()) GTEST_SKIP() << "no AVX2 on this host";
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int32_t> coef(-(1 << 23), 1 << 23);
  for (std::size_t na : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 33u, 96u}) {
    for (std::size_t nb : {1u, 3u, 4u, 8u, 17u, 96u}) {
      std::vector<std::int32_t> a(na), b(nb);
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      std::vector<std::int64_t> s(na + nb - 1, 5), v(na + nb - 1, 5);
      scalar::convolve_accumulate(a, b, s);
      avx2::convolve_accumulate(a, b, v);
      ASSERT_EQ(s, v) << na << "x" << nb;
    }
  }
}

TEST(SimdKernels, ModAxpyMatchesScalar) {
  if (!have_avx2()) GTEST_SKIP() << "no AVX2 on this host";
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {3u, 337u, 65537u, 40961u, (1u << 26) - 5u}) {
    std::uniform_int_distribution<std::uint32_t> val(0, p - 1);
    for (std::size_t n : {1u, 4u, 5u, 31u, 64u}) {
      std::vector<std::uint32_t> x(n), y(n);
      for (auto& v : x) v = val(rng);
      for (auto& v : y) v = val(rng);
      const std::uint32_t s = val(rng);
      auto ys = y, yv = y;
      scalar::mod_axpy(ys, x, s, p);
      avx2::mod_axpy(yv, x, s, p);
      ASSERT_EQ(ys, yv) << p;
      for (std::size_t i = 0; i < n; ++i) {
        ASSERT_EQ(ys[i], static_cast<std::uint32_t>((std::uint64_t{y[i]} + std::uint64_t{s} * x[i]) % p));
      }
    }
  }
}

TEST(SimdKernels, FirstExceedingMatchesScalar) {
  if (!have_avx2()) GTEST_SKIP() << "no AVX2 on this host";
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int32_t> val(0, 3);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 40);
    std::vector<std::int32_t> a(n), b(n);
    for (auto& x : a) x = val(rng);
    for (auto& x : b) x = val(rng) + (t % 3 == 0 ? 3 : 0);
    ASSERT_EQ(scalar::first_exceeding(a, b), avx2::first_exceeding(a, b));
  }
}

TEST(SimdKernels, PairwiseSqdistMatchesScalar) {
  if (!have_avx2()) GTEST_SKIP() << "no AVX2 on this host";
  std::mt19937_64 rng(4);
  std::normal_distribution<double> val(0, 1);
  for (std::size_t nx : {1u, 2u, 3u, 7u}) {
    for (std::size_t ny : {1u, 2u, 5u, 8u, 13u}) {
      std::vector<std::complex<double>> xs(nx), ys(ny);
      for (auto& z : xs) z = {val(rng), val(rng)};
      for (auto& z : ys) z = {val(rng), val(rng)};
      std::vector<double> s(nx * ny), v(nx * ny);
      scalar::pairwise_sqdist(xs, ys, s);
      avx2::pairwise_sqdist(xs, ys, v);
      ASSERT_EQ(s, v);
    }
  }
}

TEST(SimdKernels, DispatchCanBeForcedToScalar) {
  const Isa before = active_isa();
  force_isa(Isa::scalar);
  EXPECT_EQ(active_isa(), Isa::scalar);
  std::vector<std::int32_t> a{1, 2}, b{3, 4};
  std::vector<std::int64_t> acc(3, 0);
  convolve_accumulate(a, b, acc);
  EXPECT_EQ(acc, (std::vector<std::int64_t>{3, 10, 8}));
  force_isa(before);
  EXPECT_EQ(active_isa(), before);
}
