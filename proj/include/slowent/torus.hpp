#pragma once

// Symbolic codings of the affine toral map
//   F(x_1, ..., x_d) = (x_1 + alpha, x_2 + x_1, ..., x_d + x_{d-1})
// against the cube partition with q cells per axis, and Hamming-ball
// covering counts built from sampled orbits.
//
// Coordinates are carried in 64-bit fixed point, so iterating F is exact
// arithmetic mod 2^64 and codes do not depend on rounding order.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "slowent/dynamics.hpp"

namespace slowent {

class TorusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CodingConfig {
  std::size_t d = 2;
  double alpha = 0.41421356237309504880;  // sqrt(2) - 1
  std::size_t q = 10;
  std::size_t n = 100;
  double epsilon = 0.1;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  /// Per-axis side lengths of the sampling box [0, w_1) x ... x [0, w_d).
  /// Empty means the whole torus. Counts are divided by the box volume.
  std::vector<double> window;
  unsigned threads = 0;

  /// q >= 2, n >= 10, 0 < epsilon < 1, q^d <= 65536, window entries in (0, 1].
  void validate() const;
  double window_volume() const;
};

struct TorusOrbitCoding {
  std::vector<double> point;
  std::vector<std::uint16_t> code;  // cell index at times 0 .. n-1
};

/// Fixed-point representation of a point of [0,1) (and of alpha).
std::uint64_t to_fixed(double x);
double from_fixed(std::uint64_t x);

/// One step of F in fixed point.
void step(std::vector<std::uint64_t>& x, std::uint64_t alpha);
std::uint16_t cell_of(const std::vector<std::uint64_t>& x, std::size_t q);

/// Only the partition parameters are checked here (q >= 2, q^d <= 65536), so
/// short codes are allowed.
TorusOrbitCoding orbit_code(const std::vector<double>& x, const CodingConfig& cfg);

/// Fraction of mismatched positions; throws TorusError on a length mismatch.
double hamming(const TorusOrbitCoding& a, const TorusOrbitCoding& b);

struct SpanningEstimate {
  std::size_t greedy = 0;      // centers picked by greedy set cover
  std::size_t separated = 0;   // 2 eps-separated covered samples, <= greedy
  std::size_t distinct = 0;    // distinct codes among the samples
  std::size_t covered = 0;     // samples inside the chosen balls
  double window_volume = 1.0;
  double scaled_greedy() const { return static_cast<double>(greedy) / window_volume; }
  double scaled_separated() const { return static_cast<double>(separated) / window_volume; }
};

/// Samples cfg.samples orbits (point i drawn from CounterRng(seed, 0, i) in
/// the window) and covers at least (1 - eps) of them with Hamming balls
/// {d < eps} centered at samples.
SpanningEstimate spanning_count(const CodingConfig& cfg);

struct CodingPoint {
  std::size_t n = 0;
  SpanningEstimate estimate;
};

struct CodingSeries {
  std::vector<CodingPoint> points;
  SlopeFit fit;  // log S_greedy against log n
};

/// Requires at least 4 grid points, strictly increasing; the same sample set
/// is used at every n. Throws TorusError on a degenerate fit.
CodingSeries empirical_slow_entropy(const CodingConfig& cfg, const std::vector<std::size_t>& n_grid);

/// Cell counts of one orbit of the given length.
std::vector<std::size_t> cell_histogram(const std::vector<double>& x, const CodingConfig& cfg, std::size_t length);

struct ChiSquare {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

/// Pearson test of the counts against the uniform distribution.
ChiSquare chi_square_uniform(const std::vector<std::size_t>& counts);

}  // namespace slowent
