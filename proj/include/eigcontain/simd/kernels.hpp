#pragma once
// Data-parallel inner loops shared by the exact-arithmetic modules.
//
// Every kernel has a scalar reference implementation and an AVX2 variant.
// The dispatching entry points pick the best variant supported by the CPU at
// first use; the explicit scalar:: / avx2:: variants are exposed so the
// equivalence tests can run both on the same inputs.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace eigc::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;

/// Variant used by the dispatching entry points. Honors EIGC_SIMD=scalar|avx2.
Isa active_isa() noexcept;

/// Override the dispatch choice (tests, benchmarking). Falls back to scalar
/// when the requested ISA is unavailable. Not meant to race with kernel calls.
void force_isa(Isa isa) noexcept;

/// Largest |coefficient| accepted by convolve_accumulate; keeps every partial
/// sum inside int64 for operand lengths up to kMaxConvolveLength.
inline constexpr std::int64_t kConvolveCoeffBound = std::int64_t{1} << 24;
inline constexpr std::size_t kMaxConvolveLength = std::size_t{1} << 14;

/// Largest modulus accepted by mod_axpy (products stay exact in a double).
inline constexpr std::uint32_t kModAxpyMaxPrime = std::uint32_t{1} << 26;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// acc[i + j] += a[i] * b[j]; acc.size() >= a.size() + b.size() - 1.
void convolve_accumulate(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                         std::span<std::int64_t> acc) noexcept;

/// y[i] = (y[i] + s * x[i]) mod p, for entries already reduced into [0, p).
void mod_axpy(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t s,
              std::uint32_t p) noexcept;

/// Index of the first i with small[i] > big[i], or npos.
std::size_t first_exceeding(std::span<const std::int32_t> small,
                            std::span<const std::int32_t> big) noexcept;

/// out[i * ys.size() + j] = |xs[i] - ys[j]|^2.
void pairwise_sqdist(std::span<const std::complex<double>> xs,
                     std::span<const std::complex<double>> ys, std::span<double> out) noexcept;

namespace scalar {
void convolve_accumulate(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                         std::span<std::int64_t> acc) noexcept;
void mod_axpy(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t s,
              std::uint32_t p) noexcept;
std::size_t first_exceeding(std::span<const std::int32_t> small,
                            std::span<const std::int32_t> big) noexcept;
void pairwise_sqdist(std::span<const std::complex<double>> xs,
                     std::span<const std::complex<double>> ys, std::span<double> out) noexcept;
}  // namespace scalar

namespace avx2 {
// Only callable when isa_available(Isa::avx2).
void convolve_accumulate(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                         std::span<std::int64_t> acc) noexcept;
void mod_axpy(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t s,
              std::uint32_t p) noexcept;
std::size_t first_exceeding(std::span<const std::int32_t> small,
                            std::span<const std::int32_t> big) noexcept;
void pairwise_sqdist(std::span<const std::complex<double>> xs,
                     std::span<const std::complex<double>> ys, std::span<double> out) noexcept;
}  // namespace avx2

}  // namespace eigc::simd
