#include <algorithm>
#include <cmath>

#include "slowent/simd.hpp"

namespace slowent::simd::scalar {

void poly_eval(const double* coeffs, std::size_t ncoef, const double* xs, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = ncoef; k-- > 0;) {
      acc = acc * xs[i];
      acc = acc + coeffs[k];
    }
    out[i] = acc;
  }
}

double poly_max_abs(const double* coeffs, std::size_t ncoef, const double* xs, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = ncoef; k-- > 0;) {
      acc = acc * xs[i];
      acc = acc + coeffs[k];
    }
    best = std::max(best, std::fabs(acc));
  }
  return best;
}

std::size_t mismatches_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += a[i] != b[i];
  return count;
}

std::size_t mismatches_u16_bounded(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    count += a[i] != b[i];
    if (count > limit) return count;
  }
  return count;
}

}  // namespace slowent::simd::scalar
