// Compiled with -mavx2 only (no -mfma), so nothing here fuses.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "slowent/simd.hpp"

namespace slowent::simd::avx2 {

namespace {

inline __m256d horner4(const double* coeffs, std::size_t ncoef, __m256d x) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t k = ncoef; k-- > 0;) {
    acc = _mm256_mul_pd(acc, x);
    acc = _mm256_add_pd(acc, _mm256_set1_pd(coeffs[k]));
  }
  return acc;
}

inline std::size_t block_mismatches(const std::uint16_t* a, const std::uint16_t* b) {
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const unsigned eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(va, vb)));
  return static_cast<std::size_t>(__builtin_popcount(~eq)) / 2;  // two mask bits per lane
}

}  // namespace

void poly_eval(const double* coeffs, std::size_t ncoef, const double* xs, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, horner4(coeffs, ncoef, _mm256_loadu_pd(xs + i)));
  scalar::poly_eval(coeffs, ncoef, xs + i, out + i, n - i);
}

double poly_max_abs(const double* coeffs, std::size_t ncoef, const double* xs, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = horner4(coeffs, ncoef, _mm256_loadu_pd(xs + i));
    best = _mm256_max_pd(best, _mm256_andnot_pd(sign, v));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  const double tail = scalar::poly_max_abs(coeffs, ncoef, xs + i, n - i);
  return std::max({lanes[0], lanes[1], lanes[2], lanes[3], tail});
}

std::size_t mismatches_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t count = 0, i = 0;
  for (; i + 16 <= n; i += 16) count += block_mismatches(a + i, b + i);
  return count + scalar::mismatches_u16(a + i, b + i, n - i);
}

std::size_t mismatches_u16_bounded(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit) {
  std::size_t count = 0, i = 0;
  for (; i + 16 <= n; i += 16) {
    count += block_mismatches(a + i, b + i);
    if (count > limit) return count;
  }
  return count + scalar::mismatches_u16_bounded(a + i, b + i, n - i, limit - count);
}

}  // namespace slowent::simd::avx2
