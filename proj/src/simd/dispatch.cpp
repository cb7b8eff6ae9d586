#include <atomic>
#include <cstdlib>
#include <string_view>

#include "eigcontain/simd/kernels.hpp"

namespace eigc::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(EIGC_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* env = std::getenv("EIGC_SIMD")) {
    if (std::string_view(env) == "scalar") return Isa::scalar;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

bool isa_available(Isa isa) noexcept { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) noexcept {
  current().store(isa_available(isa) ? isa : Isa::scalar, std::memory_order_relaxed);
}

void convolve_accumulate(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                         std::span<std::int64_t> acc) noexcept {
#ifdef EIGC_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::convolve_accumulate(a, b, acc);
#endif
  scalar::convolve_accumulate(a, b, acc);
}

void mod_axpy(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t s,
              std::uint32_t p) noexcept {
#ifdef EIGC_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::mod_axpy(y, x, s, p);
#endif
  scalar::mod_axpy(y, x, s, p);
}

std::size_t first_exceeding(std::span<const std::int32_t> small,
                            std::span<const std::int32_t> big) noexcept {
#ifdef EIGC_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::first_exceeding(small, big);
#endif
  return scalar::first_exceeding(small, big);
}

void pairwise_sqdist(std::span<const std::complex<double>> xs,
                     std::span<const std::complex<double>> ys, std::span<double> out) noexcept {
#ifdef EIGC_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::pairwise_sqdist(xs, ys, out);
#endif
  scalar::pairwise_sqdist(xs, ys, out);
}

}  // namespace eigc::simd
