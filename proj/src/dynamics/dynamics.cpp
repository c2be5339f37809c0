#include "slowent/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "slowent/parallel.hpp"
#include "slowent/rng.hpp"
#include "slowent/simd.hpp"

namespace slowent {

namespace {

// Corners of the inner box reach the ball's boundary exactly; keep them
// strictly inside so rounding cannot reject them.
constexpr double kInnerMargin = 1.0 - 1e-9;

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

// a_j(t) for all j at a single time.
std::vector<double> shear(const std::vector<double>& a, double t) {
  const std::size_t m1 = a.size();
  std::vector<double> out(m1, 0.0);
  for (std::size_t j = 0; j < m1; ++j) {
    double term = 1.0;
    for (std::size_t k = j; k < m1; ++k) {
      out[j] += term * a[k];
      term *= t / static_cast<double>(k - j + 1);
    }
  }
  return out;
}

// Sum over nodes of |coefficient of s^k in the Lagrange basis|, k = 0..deg.
std::vector<double> lagrange_coefficient_bounds(const std::vector<double>& nodes) {
  std::vector<double> bound(nodes.size(), 0.0);
  for (const RealPoly& l : lagrange_basis(nodes))
    for (std::size_t k = 0; k < l.c.size(); ++k) bound[k] += std::fabs(l.c[k]);
  return bound;
}

}  // namespace

// ---------------------------------------------------------------------------

DivergenceState DivergenceState::zero(const ChainStructure& s) {
  DivergenceState x;
  for (std::size_t m : s.chain_depths()) x.chains.emplace_back(m + 1, 0.0);
  for (std::size_t i = 0; i < s.double_depths.size(); ++i) {
    Double d;
    d.alpha = s.alphas[i];
    d.b.assign(s.double_depths[i] + 1, 0.0);
    d.c.assign(s.double_depths[i] + 1, 0.0);
    x.doubles.push_back(std::move(d));
  }
  return x;
}

std::size_t DivergenceState::dimension() const {
  std::size_t n = 0;
  for (const auto& a : chains) n += a.size();
  for (const auto& d : doubles) n += d.b.size() + d.c.size();
  return n;
}

Eigen::VectorXd DivergenceState::flatten() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(dimension()));
  Eigen::Index i = 0;
  for (const auto& a : chains)
    for (double x : a) v(i++) = x;
  for (const auto& d : doubles) {
    for (double x : d.b) v(i++) = x;
    for (double x : d.c) v(i++) = x;
  }
  return v;
}

void DivergenceState::assign(const Eigen::VectorXd& flat) {
  if (flat.size() != static_cast<Eigen::Index>(dimension())) throw DynamicsError("state dimension mismatch");
  Eigen::Index i = 0;
  for (auto& a : chains)
    for (double& x : a) x = flat(i++);
  for (auto& d : doubles) {
    for (double& x : d.b) x = flat(i++);
    for (double& x : d.c) x = flat(i++);
  }
}

double DivergenceState::sup_norm() const { return dimension() ? flatten().lpNorm<Eigen::Infinity>() : 0.0; }
double DivergenceState::euclidean_norm() const { return dimension() ? flatten().norm() : 0.0; }

std::vector<RealPoly> chain_polynomials(const std::vector<double>& a) {
  std::vector<RealPoly> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    RealPoly p;
    for (std::size_t k = j; k < a.size(); ++k) p.c.push_back(a[k] / factorial(k - j));
    out.push_back(std::move(p));
  }
  return out;
}

DivergenceState evolve_split(const DivergenceState& x, double shear_time, double rotation_time) {
  DivergenceState y = x;
  for (auto& a : y.chains) a = shear(a, shear_time);
  for (auto& d : y.doubles) {
    const std::vector<double> f = shear(d.b, shear_time), g = shear(d.c, shear_time);
    const double cs = std::cos(d.alpha * rotation_time), sn = std::sin(d.alpha * rotation_time);
    for (std::size_t j = 0; j < f.size(); ++j) {
      d.b[j] = cs * f[j] - sn * g[j];
      d.c[j] = sn * f[j] + cs * g[j];
    }
  }
  return y;
}

DivergenceState evolve(const DivergenceState& x, double t) { return evolve_split(x, t, t); }

double evolve_matrix_check(const std::vector<RatMatrix>& basis, const RatMatrix& u, const Eigen::VectorXd& x0,
                           double t) {
  const std::size_t n = basis.size();
  if (x0.size() != static_cast<Eigen::Index>(n)) throw DynamicsError("coordinate vector has the wrong length");
  if (x0.isZero(0.0)) return 0.0;

  const ChainBasis cb = chain_basis(ad_operator(basis, u));
  const Eigen::MatrixXd B = chain_basis_matrix(cb);
  DivergenceState state = DivergenceState::zero(ChainStructure{});
  for (const Chain& c : cb.chains) state.chains.emplace_back(c.depth + 1, 0.0);
  for (const DoubleChain& c : cb.doubles)
    state.doubles.push_back({c.alpha, std::vector<double>(c.depth + 1), std::vector<double>(c.depth + 1)});
  state.assign(B.fullPivLu().solve(x0));
  // exp(-tU) exp(X) exp(tU) = exp(e^{-t ad U} X): the nilpotent part runs
  // backwards in the triangular sum while the rotation formula already has
  // the conjugation's orientation.
  const Eigen::VectorXd closed = B * evolve_split(state, -t, t).flatten();

  const Eigen::Index dim = static_cast<Eigen::Index>(u.rows());
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < n; ++i) x += x0(static_cast<Eigen::Index>(i)) * basis[i].to_double();
  const Eigen::MatrixXd ud = u.to_double();
  const Eigen::MatrixXd m = (-t * ud).exp() * x.exp() * (t * ud).exp();
  const Eigen::MatrixXd delta = m - Eigen::MatrixXd::Identity(dim, dim);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(delta);
  if (svd.singularValues()(0) >= 1.0) throw DynamicsError("displacement too large for log chart");
  const Eigen::MatrixXd logm = m.log();

  Eigen::MatrixXd flat(dim * dim, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::MatrixXd b = basis[i].to_double();
    flat.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Eigen::VectorXd>(b.data(), dim * dim);
  }
  const Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(logm.data(), dim * dim);
  const Eigen::VectorXd coords = flat.colPivHouseholderQr().solve(target);
  return (coords - closed).lpNorm<Eigen::Infinity>();
}

ExponentPrediction predicted_exponents(const ChainStructure& s) { return {s.dimension(), -slow_entropy(s)}; }

SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3) throw DynamicsError("slope fit needs at least 3 points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw DynamicsError("slope fit needs distinct abscissae");
  SlopeFit f;
  f.exponent = sxy / sxx;
  f.intercept = my - f.exponent * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.exponent * x[i]);
    ss += r * r;
    f.points.emplace_back(x[i], y[i]);
  }
  f.rms_residual = std::sqrt(ss / n);
  if (!std::isfinite(f.exponent) || !std::isfinite(f.rms_residual)) throw DynamicsError("degenerate fit");
  return f;
}

std::string to_string(SupMode m) { return m == SupMode::exact ? "exact" : "grid"; }

SupMode parse_sup_mode(const std::string& s) {
  if (s == "exact" || s == "derivative-roots") return SupMode::exact;
  if (s == "grid") return SupMode::grid;
  throw std::invalid_argument("unknown sup mode: " + s);
}

void McConfig::validate() const {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (T_grid.size() < 3) throw std::invalid_argument("T grid needs at least 3 points");
  if (samples < 1000) throw std::invalid_argument("at least 1000 samples per point");
  if (sup_mode == SupMode::grid && grid_points < 2) throw std::invalid_argument("grid needs at least 2 points");
}

std::vector<double> geometric_grid(double start, double ratio, std::size_t count) {
  if (!(start > 0) || !(ratio > 1)) throw std::invalid_argument("geometric grid needs start > 0 and ratio > 1");
  std::vector<double> g;
  double v = start;
  for (std::size_t i = 0; i < count; ++i, v *= ratio) g.push_back(v);
  return g;
}

// ---------------------------------------------------------------------------
// Bowen balls on [0, T]

std::vector<double> bowen_outer_box(const ChainStructure& s, double epsilon, double T) {
  const DivergenceState shape = DivergenceState::zero(s);
  auto widths = [&](std::size_t m) {
    const std::vector<double> cb = lagrange_coefficient_bounds(chebyshev_points(m + 1));
    std::vector<double> w;
    for (std::size_t k = 0; k <= m; ++k)
      w.push_back(std::min(epsilon, factorial(k) * cb[k] * epsilon / std::pow(T, static_cast<double>(k))));
    return w;
  };
  std::vector<double> out;
  for (const auto& a : shape.chains) {
    const auto w = widths(a.size() - 1);
    out.insert(out.end(), w.begin(), w.end());
  }
  for (const auto& d : shape.doubles) {
    const auto w = widths(d.b.size() - 1);
    out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::vector<double> bowen_inner_box(const ChainStructure& s, double epsilon, double T) {
  const DivergenceState shape = DivergenceState::zero(s);
  auto widths = [&](std::size_t m, double extra) {
    const double base = std::max(T, static_cast<double>(m));
    std::vector<double> w;
    for (std::size_t k = 0; k <= m; ++k)
      w.push_back(kInnerMargin * extra * epsilon * factorial(k) /
                  (static_cast<double>(m + 1) * std::pow(base, static_cast<double>(k))));
    return w;
  };
  std::vector<double> out;
  for (const auto& a : shape.chains) {
    const auto w = widths(a.size() - 1, 1.0);
    out.insert(out.end(), w.begin(), w.end());
  }
  for (const auto& d : shape.doubles) {
    const auto w = widths(d.b.size() - 1, 1.0 / std::sqrt(2.0));
    out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

namespace {

// Polynomials of the orbit coordinates on s in [0, 1] (t = T s).
bool chain_within(const std::vector<double>& a, double epsilon, double T, SupMode mode,
                  const std::vector<double>& grid) {
  // Cheap rejection at the end point first.
  const std::vector<double> end = shear(a, T);
  for (double v : end)
    if (std::fabs(v) > epsilon) return false;
  for (const RealPoly& p : chain_polynomials(a)) {
    if (p.degree() <= 0) continue;
    const RealPoly q = rescale(p, T);
    const double sup = mode == SupMode::exact ? sup_abs(q, 0.0, 1.0)
                                              : simd::poly_max_abs(q.c.data(), q.c.size(), grid.data(), grid.size());
    if (sup > epsilon) return false;
  }
  return true;
}

bool double_within(const DivergenceState::Double& d, double epsilon, double T, SupMode mode,
                   const std::vector<double>& grid) {
  const std::vector<double> fe = shear(d.b, T), ge = shear(d.c, T);
  const double eps2 = epsilon * epsilon;
  for (std::size_t j = 0; j < fe.size(); ++j)
    if (fe[j] * fe[j] + ge[j] * ge[j] > eps2) return false;
  const auto fp = chain_polynomials(d.b), gp = chain_polynomials(d.c);
  for (std::size_t j = 0; j < fp.size(); ++j) {
    const RealPoly h = rescale(fp[j] * fp[j] + gp[j] * gp[j], T);
    if (h.degree() <= 0) {
      if (!h.c.empty() && h.c[0] > eps2) return false;
      continue;
    }
    const double sup = mode == SupMode::exact ? sup_abs(h, 0.0, 1.0)
                                              : simd::poly_max_abs(h.c.data(), h.c.size(), grid.data(), grid.size());
    if (sup > eps2) return false;
  }
  return true;
}

bool bowen_member(const DivergenceState& x, double epsilon, double T, SupMode mode, const std::vector<double>& grid) {
  for (const auto& a : x.chains)
    if (!chain_within(a, epsilon, T, mode, grid)) return false;
  for (const auto& d : x.doubles)
    if (!double_within(d, epsilon, T, mode, grid)) return false;
  return true;
}

// Uniform sampling from a centered box; returns the acceptance count.
template <class Member>
std::size_t count_accepted(const DivergenceState& shape, const std::vector<double>& half_widths, std::size_t samples,
                           std::uint64_t seed, std::uint64_t stream, unsigned threads, Member member) {
  std::vector<std::size_t> per_worker(worker_count(threads), 0);
  parallel_chunks(samples, threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    DivergenceState x = shape;
    Eigen::VectorXd flat(static_cast<Eigen::Index>(half_widths.size()));
    std::size_t local = 0;
    for (std::size_t i = begin; i < end; ++i) {
      CounterRng rng(seed, stream, i);
      for (std::size_t k = 0; k < half_widths.size(); ++k)
        flat(static_cast<Eigen::Index>(k)) = rng.uniform(-half_widths[k], half_widths[k]);
      x.assign(flat);
      local += member(x);
    }
    per_worker[w] = local;
  });
  return std::accumulate(per_worker.begin(), per_worker.end(), std::size_t{0});
}

double box_volume(const std::vector<double>& half_widths) {
  double v = 1.0;
  for (double w : half_widths) v *= 2 * w;
  return v;
}

}  // namespace

bool in_bowen_ball(const DivergenceState& x, double epsilon, double T, SupMode mode, std::size_t grid_points) {
  const std::vector<double> grid = mode == SupMode::grid ? chebyshev_points(grid_points) : std::vector<double>{};
  return bowen_member(x, epsilon, T, mode, grid);
}

VolumeSeries mc_bowen_volume(const ChainStructure& s, const McConfig& cfg) {
  cfg.validate();
  const DivergenceState shape = DivergenceState::zero(s);
  const std::vector<double> grid =
      cfg.sup_mode == SupMode::grid ? chebyshev_points(cfg.grid_points) : std::vector<double>{};
  VolumeSeries out;
  std::vector<double> lx, ly;
  for (std::size_t ti = 0; ti < cfg.T_grid.size(); ++ti) {
    const double T = cfg.T_grid[ti];
    const std::vector<double> box = bowen_outer_box(s, cfg.epsilon, T);
    const std::size_t acc = count_accepted(shape, box, cfg.samples, cfg.seed, ti, cfg.threads, [&](const DivergenceState& x) {
      return bowen_member(x, cfg.epsilon, T, cfg.sup_mode, grid);
    });
    if (acc == 0) throw DynamicsError("increase samples or epsilon");
    const double vol = box_volume(box) * static_cast<double>(acc) / static_cast<double>(cfg.samples);
    out.points.push_back({T, vol, acc, cfg.samples});
    lx.push_back(std::log(T));
    ly.push_back(std::log(vol));
  }
  out.fit = fit_slope(lx, ly);
  return out;
}

// ---------------------------------------------------------------------------
// Sequence Bowen balls

bool in_sequence_ball(const DivergenceState& x, double epsilon, const std::vector<double>& times) {
  const double eps2 = epsilon * epsilon;
  for (double t : times) {
    for (const auto& a : x.chains)
      for (double v : shear(a, t))
        if (std::fabs(v) > epsilon) return false;
    for (const auto& d : x.doubles) {
      const auto f = shear(d.b, t), g = shear(d.c, t);
      for (std::size_t j = 0; j < f.size(); ++j)
        if (f[j] * f[j] + g[j] * g[j] > eps2) return false;
    }
  }
  return true;
}

std::vector<double> sequence_outer_box(const ChainStructure& s, double epsilon, const std::vector<double>& times) {
  const DivergenceState shape = DivergenceState::zero(s);
  auto widths = [&](std::size_t m) {
    std::vector<double> w(m + 1, std::numeric_limits<double>::infinity());
    // Single time: a = e^{-tN} a(t), so |a_k| <= eps sum_{i>=k} t^{i-k}/(i-k)!.
    for (double t : times)
      for (std::size_t k = 0; k <= m; ++k) {
        double sum = 0, term = 1;
        for (std::size_t i = k; i <= m; ++i) {
          sum += term;
          term *= t / static_cast<double>(i - k + 1);
        }
        w[k] = std::min(w[k], epsilon * sum);
      }
    // Interpolation: a_j(t) has degree m - j and coefficient a_k/(k-j)! at t^{k-j}.
    for (std::size_t j = 0; j <= m; ++j) {
      const std::size_t nodes = m - j + 1;
      if (nodes > times.size()) continue;
      for (std::size_t start = 0; start + nodes <= times.size(); ++start) {
        const std::vector<double> window(times.begin() + static_cast<std::ptrdiff_t>(start),
                                         times.begin() + static_cast<std::ptrdiff_t>(start + nodes));
        const std::vector<double> cb = lagrange_coefficient_bounds(window);
        for (std::size_t k = j; k <= m; ++k) w[k] = std::min(w[k], factorial(k - j) * cb[k - j] * epsilon);
      }
    }
    return w;
  };
  std::vector<double> out;
  for (const auto& a : shape.chains) {
    const auto w = widths(a.size() - 1);
    out.insert(out.end(), w.begin(), w.end());
  }
  for (const auto& d : shape.doubles) {
    const auto w = widths(d.b.size() - 1);
    out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

VolumeSeries sequence_bowen_volume(const ChainStructure& s, const SequenceConfig& seq, const McConfig& cfg) {
  if (!(seq.lambda > 1)) throw std::invalid_argument("lambda must be > 1");
  if (!(seq.L > 0)) throw std::invalid_argument("L must be positive");
  if (!(cfg.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (cfg.samples < 1000) throw std::invalid_argument("at least 1000 samples per point");
  const std::size_t from = seq.fit_from.value_or(s.max_depth());
  if (seq.n_max < from + 2) throw std::invalid_argument("need at least 3 values of N in the fit");
  const DivergenceState shape = DivergenceState::zero(s);
  VolumeSeries out;
  std::vector<double> xs, ys;
  std::vector<double> times;
  for (std::size_t N = 0; N <= seq.n_max; ++N) {
    times.push_back(seq.L * std::pow(seq.lambda, static_cast<double>(N)));
    if (N < from) continue;
    const std::vector<double> box = sequence_outer_box(s, cfg.epsilon, times);
    const std::size_t acc = count_accepted(shape, box, cfg.samples, cfg.seed, N, cfg.threads,
                                           [&](const DivergenceState& x) { return in_sequence_ball(x, cfg.epsilon, times); });
    if (acc == 0) throw DynamicsError("increase samples or epsilon");
    const double vol = box_volume(box) * static_cast<double>(acc) / static_cast<double>(cfg.samples);
    out.points.push_back({static_cast<double>(N), vol, acc, cfg.samples});
    xs.push_back(static_cast<double>(N));
    ys.push_back(std::log(vol));
  }
  out.fit = fit_slope(xs, ys);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial lemmas

NormEquivalence norm_equiv_constant(std::size_t degree, std::size_t trials, std::uint64_t seed) {
  NormEquivalence out;
  const std::vector<RealPoly> basis = lagrange_basis(chebyshev_points(degree + 1));
  for (std::size_t trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, 0, trial);
    // Coefficients over sup: interpolate node values in [-1, 1], half of
    // them pushed to +-1 where the extremal polynomials live.
    RealPoly p{std::vector<double>(degree + 1, 0.0)};
    for (std::size_t i = 0; i <= degree; ++i) {
      double v = rng.uniform(-1.0, 1.0);
      if (rng.uniform() < 0.5) v = v < 0 ? -1.0 : 1.0;
      p = p + v * basis[i];
    }
    double coef = 0.0;
    for (double c : p.c) coef = std::max(coef, std::fabs(c));
    const double sup = sup_abs(p, 0.0, 1.0);
    if (sup > 0) out.coef_over_sup = std::max(out.coef_over_sup, coef / sup);

    // Sup over coefficients: coefficient vertices +-1.
    RealPoly q;
    for (std::size_t k = 0; k <= degree; ++k) q.c.push_back(rng.uniform() < 0.5 ? -1.0 : 1.0);
    out.sup_over_coef = std::max(out.sup_over_coef, sup_abs(q, 0.0, 1.0));
  }
  return out;
}

BrudnyiCheck check_brudnyi(const RealPoly& p, Interval V, const std::vector<Interval>& omega) {
  double len = 0.0, sup_omega = 0.0;
  for (const Interval& w : omega) {
    if (w.lo < V.lo || w.hi > V.hi || w.lo > w.hi) throw std::invalid_argument("omega must lie inside V");
    len += w.hi - w.lo;
    sup_omega = std::max(sup_omega, sup_abs(p, w.lo, w.hi));
  }
  if (!(len > 0)) throw std::invalid_argument("omega must have positive length");
  const long k = std::max(0L, p.degree());
  BrudnyiCheck c;
  c.lhs = sup_abs(p, V.lo, V.hi);
  c.rhs = std::pow(4 * (V.hi - V.lo) / len, static_cast<double>(k)) * sup_omega;
  c.holds = c.lhs <= c.rhs * (1 + 1e-12);
  return c;
}

RealPoly squared_norm_polynomial(const DivergenceState& x0) {
  RealPoly p{{0.0}};
  for (const auto& a : x0.chains)
    for (const RealPoly& q : chain_polynomials(a)) p = p + q * q;
  for (const auto& d : x0.doubles) {
    const auto f = chain_polynomials(d.b), g = chain_polynomials(d.c);
    for (std::size_t j = 0; j < f.size(); ++j) p = p + f[j] * f[j] + g[j] * g[j];
  }
  return p;
}

ShearingVisit shearing_visit_fraction(const DivergenceState& x0, double c, double eta) {
  if (!(c > 0 && c < 1.0 / 20)) throw std::invalid_argument("c must lie in (0, 1/20)");
  if (!(eta > 0)) throw std::invalid_argument("eta must be positive");
  const RealPoly p = squared_norm_polynomial(x0);
  const double eta2 = eta * eta;
  if (!(p(0) < eta2)) throw std::invalid_argument("displacement must be smaller than eta");
  if (p.degree() <= 0) throw DynamicsError("no separation");
  double hi = 1.0;
  while (p(hi) < eta2) {
    hi *= 2;
    if (hi > 1e15) throw DynamicsError("no separation");
  }
  const std::vector<double> hit = real_roots(p - RealPoly{{eta2}}, 0.0, hi);
  if (hit.empty()) throw DynamicsError("no separation");
  ShearingVisit v;
  v.S = hit.front();

  const double low2 = c * c * eta2;
  std::vector<double> knots{0.0};
  for (double r : real_roots(p - RealPoly{{low2}}, 0.0, v.S))
    if (r > knots.back() && r < v.S) knots.push_back(r);
  knots.push_back(v.S);
  double below = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    if (p(0.5 * (knots[i] + knots[i + 1])) < low2) below += knots[i + 1] - knots[i];
  v.fraction = below / v.S;
  return v;
}

double shearing_constant(const ChainStructure& s, double safety) {
  const double k = static_cast<double>(s.max_depth());
  const double c = 0.5 * std::pow(1.0 / 40.0, k / 2.0);
  return safety * std::min(c, 1.0 / 20.0);
}

}  // namespace slowent
