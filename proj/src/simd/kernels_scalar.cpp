#include "eigcontain/simd/kernels.hpp"

namespace eigc::simd::scalar {

void convolve_accumulate(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                         std::span<std::int64_t> acc) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    std::int64_t* out = acc.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) out[j] += ai * b[j];
  }
}

void mod_axpy(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t s,
              std::uint32_t p) noexcept {
  const std::uint64_t sm = s;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + sm * x[i]) % p);
  }
}

std::size_t first_exceeding(std::span<const std::int32_t> small,
                            std::span<const std::int32_t> big) noexcept {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return i;
  }
  return npos;
}

void pairwise_sqdist(std::span<const std::complex<double>> xs,
                     std::span<const std::complex<double>> ys, std::span<double> out) noexcept {
  const std::size_t ny = ys.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double dr = ys[j].real() - xs[i].real();
      const double di = ys[j].imag() - xs[i].imag();
      const double sr = dr * dr;
      const double si = di * di;
      out[i * ny + j] = sr + si;
    }
  }
}

}  // namespace eigc::simd::scalar
