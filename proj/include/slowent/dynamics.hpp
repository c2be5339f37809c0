#pragma once

// Divergence of nearby orbits in chain coordinates and the estimators built on
// it: Bowen-ball volumes by Monte Carlo, sequence-Bowen decay, and numerical
// checks of the polynomial lemmas behind the volume bounds.
//
// Coordinates: a chain of depth m carries a_0..a_m, a double chain carries
// pairs (b_j, c_j). The chain basis is declared orthonormal.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "slowent/chains.hpp"
#include "slowent/real_poly.hpp"

namespace slowent {

class DynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DivergenceState {
  struct Double {
    double alpha = 0.0;
    std::vector<double> b, c;
  };
  std::vector<std::vector<double>> chains;
  std::vector<Double> doubles;

  /// Zero displacement shaped like the structure (doubles from double_depths/alphas).
  static DivergenceState zero(const ChainStructure& s);
  std::size_t dimension() const;
  /// Coordinates in the order of chain_basis_matrix.
  Eigen::VectorXd flatten() const;
  void assign(const Eigen::VectorXd& flat);
  double sup_norm() const;
  double euclidean_norm() const;
};

/// a_j(t) = sum_{k>=j} t^{k-j} a_k / (k-j)!, as polynomials in t.
std::vector<RealPoly> chain_polynomials(const std::vector<double>& a);

/// Chains by the triangular sum; doubles evolve (f, g) by the same sum and then
/// rotate: b = cos(at) f - sin(at) g, c = sin(at) f + cos(at) g.
DivergenceState evolve(const DivergenceState& x, double t);
/// Same update with independent times for the polynomial and rotation parts.
DivergenceState evolve_split(const DivergenceState& x, double shear_time, double rotation_time);

/// Sup-norm discrepancy between the closed-form evolution and
/// log(exp(-tU) exp(X0) exp(tU)) computed with floating matrix functions.
/// x0 holds coordinates in `basis`. Throws DynamicsError("displacement too
/// large for log chart") when the conjugated group element is not within
/// distance 1 of the identity.
double evolve_matrix_check(const std::vector<RatMatrix>& basis, const RatMatrix& u, const Eigen::VectorXd& x0,
                           double t);

struct ExponentPrediction {
  std::size_t dim_exponent = 0;
  Rational time_exponent;
};
ExponentPrediction predicted_exponents(const ChainStructure& s);

struct SlopeFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  std::vector<std::pair<double, double>> points;
};
/// Least-squares line through (x, y); needs at least 3 points.
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y);

enum class SupMode { exact, grid };
std::string to_string(SupMode m);
SupMode parse_sup_mode(const std::string& s);

struct McConfig {
  double epsilon = 0.1;
  std::vector<double> T_grid;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  SupMode sup_mode = SupMode::exact;
  std::size_t grid_points = 512;
  unsigned threads = 0;

  void validate() const;
};

std::vector<double> geometric_grid(double start, double ratio, std::size_t count);

struct VolumePoint {
  double time = 0.0;  // T, or N for sequence balls
  double volume = 0.0;
  std::size_t accepted = 0;
  std::size_t samples = 0;
};

struct VolumeSeries {
  std::vector<VolumePoint> points;
  SlopeFit fit;
};

/// Half-widths of a box around 0 containing every displacement whose orbit
/// stays within epsilon on [0, T] (coefficient bounds from Lagrange
/// interpolation at Chebyshev nodes), in flatten() order.
std::vector<double> bowen_outer_box(const ChainStructure& s, double epsilon, double T);
/// Half-widths of a box every point of which stays within epsilon on [0, T].
std::vector<double> bowen_inner_box(const ChainStructure& s, double epsilon, double T);
/// Membership in the linear-model Bowen ball: every chain coordinate stays
/// within epsilon, every double-chain pair within Euclidean radius epsilon.
bool in_bowen_ball(const DivergenceState& x, double epsilon, double T, SupMode mode = SupMode::exact,
                   std::size_t grid_points = 512);

/// Volume of the Bowen ball for each T. Samples are drawn uniformly from the
/// outer box (a superset of the ball inside the epsilon cube), so the
/// estimate is acceptance fraction times box volume. Fits log V against log T.
/// Throws DynamicsError("increase samples or epsilon") on zero acceptances.
VolumeSeries mc_bowen_volume(const ChainStructure& s, const McConfig& cfg);

struct SequenceConfig {
  double L = 1.0;
  double lambda = 2.0;
  std::size_t n_max = 8;
  /// First N used in the fit; defaults to the largest depth, where the box bound is sharp.
  std::optional<std::size_t> fit_from;
};

/// Volumes of the balls where the orbit is tested only at times L lambda^k,
/// k = 0..N, for N = 0..n_max; fits log V against N (expected slope -R log lambda).
VolumeSeries sequence_bowen_volume(const ChainStructure& s, const SequenceConfig& seq, const McConfig& cfg);
bool in_sequence_ball(const DivergenceState& x, double epsilon, const std::vector<double>& times);
std::vector<double> sequence_outer_box(const ChainStructure& s, double epsilon, const std::vector<double>& times);

struct NormEquivalence {
  double coef_over_sup = 0.0;  // max ||coefficients||_inf / sup_[0,1] |p|
  double sup_over_coef = 0.0;  // max sup_[0,1] |p| / ||coefficients||_inf
};
NormEquivalence norm_equiv_constant(std::size_t degree, std::size_t trials, std::uint64_t seed);

struct Interval {
  double lo, hi;
};
struct BrudnyiCheck {
  bool holds = false;
  double lhs = 0.0;  // sup_V |p|
  double rhs = 0.0;  // (4|V|/|omega|)^k sup_omega |p|
};
/// omega must lie in V and have positive total length.
BrudnyiCheck check_brudnyi(const RealPoly& p, Interval V, const std::vector<Interval>& omega);

struct ShearingVisit {
  double S = 0.0;
  double fraction = 0.0;
};
/// ||X_t||^2 as a polynomial in t (rotation drops out).
RealPoly squared_norm_polynomial(const DivergenceState& x0);
/// S = first time ||X_t|| = eta; fraction of [0, S] with ||X_t|| < c eta.
/// Throws DynamicsError("no separation") when ||X_t|| never reaches eta.
ShearingVisit shearing_visit_fraction(const DivergenceState& x0, double c, double eta);
/// Largest c allowed by 4 (2c)^{2/k} < 1/10 for k = max depth, times `safety`.
double shearing_constant(const ChainStructure& s, double safety = 0.99);

}  // namespace slowent
