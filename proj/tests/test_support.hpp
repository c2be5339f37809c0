#pragma once

// Random generators shared by the unit tests.

#include <random>

#include "slowent/exact_linalg.hpp"

namespace slowent::testing {

/// Entries p/q with |p| <= 4 and 1 <= q <= 3; roughly a third of the entries are zero.
inline RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng() % 3 == 0) continue;
      m(i, j) = ratio(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    }
  return m;
}

inline RatMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    RatMatrix m = random_matrix(n, n, rng);
    if (inverse(m)) return m;
  }
}

}  // namespace slowent::testing
