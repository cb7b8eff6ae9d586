// Compiled with -mavx2 -mfma; only reached through dispatch when the CPU
// reports AVX2 support.
#include <immintrin.h>

#include "eigcontain/simd/kernels.hpp"

namespace eigc::simd::avx2 {

void convolve_accumulate(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                         std::span<std::int64_t> acc) noexcept {
  const std::size_t nb = b.size();
  const std::size_t nb4 = nb & ~std::size_t{3};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int32_t ai = a[i];
    if (ai == 0) continue;
    const __m256i va = _mm256_set1_epi64x(ai);
    std::int64_t* out = acc.data() + i;
    std::size_t j = 0;
    for (; j < nb4; j += 4) {
      const __m128i b32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b.data() + j));
      const __m256i b64 = _mm256_cvtepi32_epi64(b32);
      // signed 32x32 -> 64 on the low half of each lane
      const __m256i prod = _mm256_mul_epi32(va, b64);
      __m256i o = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + j));
      o = _mm256_add_epi64(o, prod);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), o);
    }
    for (; j < nb; ++j) out[j] += static_cast<std::int64_t>(ai) * b[j];
  }
}

void mod_axpy(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t s,
              std::uint32_t p) noexcept {
  const std::size_t n = y.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d vs = _mm256_set1_pd(static_cast<double>(s));
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    const __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x.data() + i));
    const __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y.data() + i));
    // entries < 2^26 so the int32 conversion is exact and s*x + y < 2^53
    const __m256d xd = _mm256_cvtepi32_pd(xi);
    const __m256d yd = _mm256_cvtepi32_pd(yi);
    const __m256d t = _mm256_add_pd(_mm256_mul_pd(xd, vs), yd);
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
    __m256d r = _mm256_sub_pd(t, _mm256_mul_pd(q, vp));
    // the quotient estimate can be off by one either way
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y.data() + i), _mm256_cvtpd_epi32(r));
  }
  const std::uint64_t sm = s;
  for (; i < n; ++i) y[i] = static_cast<std::uint32_t>((y[i] + sm * x[i]) % p);
}

std::size_t first_exceeding(std::span<const std::int32_t> small,
                            std::span<const std::int32_t> big) noexcept {
  const std::size_t n = small.size();
  const std::size_t n8 = n & ~std::size_t{7};
  std::size_t i = 0;
  for (; i < n8; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(small.data() + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(big.data() + i));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(a, b)));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
    if (small[i] > big[i]) return i;
  }
  return npos;
}

void pairwise_sqdist(std::span<const std::complex<double>> xs,
                     std::span<const std::complex<double>> ys, std::span<double> out) noexcept {
  const std::size_t ny = ys.size();
  const std::size_t ny4 = ny & ~std::size_t{3};
  const double* yp = reinterpret_cast<const double*>(ys.data());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const __m256d vx = _mm256_setr_pd(xs[i].real(), xs[i].imag(), xs[i].real(), xs[i].imag());
    double* row = out.data() + i * ny;
    std::size_t j = 0;
    for (; j < ny4; j += 4) {
      const __m256d d01 = _mm256_sub_pd(_mm256_loadu_pd(yp + 2 * j), vx);
      const __m256d d23 = _mm256_sub_pd(_mm256_loadu_pd(yp + 2 * j + 4), vx);
      const __m256d s01 = _mm256_mul_pd(d01, d01);
      const __m256d s23 = _mm256_mul_pd(d23, d23);
      // hadd yields (y0, y2, y1, y3); restore natural order
      const __m256d h = _mm256_hadd_pd(s01, s23);
      _mm256_storeu_pd(row + j, _mm256_permute4x64_pd(h, 0b11011000));
    }
    for (; j < ny; ++j) {
      const double dr = ys[j].real() - xs[i].real();
      const double di = ys[j].imag() - xs[i].imag();
      const double sr = dr * dr;
      const double si = di * di;
      row[j] = sr + si;
    }
  }
}

}  // namespace eigc::simd::avx2
