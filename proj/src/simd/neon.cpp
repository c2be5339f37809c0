#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "slowent/simd.hpp"

namespace slowent::simd::neon {

namespace {

inline float64x2_t horner2(const double* coeffs, std::size_t ncoef, float64x2_t x) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t k = ncoef; k-- > 0;) {
    acc = vmulq_f64(acc, x);
    acc = vaddq_f64(acc, vdupq_n_f64(coeffs[k]));
  }
  return acc;
}

inline std::size_t block_mismatches(const std::uint16_t* a, const std::uint16_t* b) {
  const uint16x8_t eq = vceqq_u16(vld1q_u16(a), vld1q_u16(b));
  return 8 - vaddvq_u16(vshrq_n_u16(eq, 15));
}

}  // namespace

void poly_eval(const double* coeffs, std::size_t ncoef, const double* xs, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, horner2(coeffs, ncoef, vld1q_f64(xs + i)));
  scalar::poly_eval(coeffs, ncoef, xs + i, out + i, n - i);
}

double poly_max_abs(const double* coeffs, std::size_t ncoef, const double* xs, std::size_t n) {
  float64x2_t best = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) best = vmaxq_f64(best, vabsq_f64(horner2(coeffs, ncoef, vld1q_f64(xs + i))));
  return std::max(vmaxvq_f64(best), scalar::poly_max_abs(coeffs, ncoef, xs + i, n - i));
}

std::size_t mismatches_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t count = 0, i = 0;
  for (; i + 8 <= n; i += 8) count += block_mismatches(a + i, b + i);
  return count + scalar::mismatches_u16(a + i, b + i, n - i);
}

std::size_t mismatches_u16_bounded(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit) {
  std::size_t count = 0, i = 0;
  for (; i + 8 <= n; i += 8) {
    count += block_mismatches(a + i, b + i);
    if (count > limit) return count;
  }
  return count + scalar::mismatches_u16_bounded(a + i, b + i, n - i, limit - count);
}

}  // namespace slowent::simd::neon
#endif
