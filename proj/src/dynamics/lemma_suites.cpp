#include "slowent/lemma_suites.hpp"

#include <algorithm>
#include <cmath>

#include "slowent/rng.hpp"

namespace slowent {

namespace {

double gaussian(CounterRng& rng) {
  const double u = 1.0 - rng.uniform(), v = rng.uniform();
  return std::sqrt(-2 * std::log(u)) * std::cos(2 * M_PI * v);
}

}  // namespace

SuiteSummary brudnyi_suite(std::size_t trials, std::size_t max_degree, std::uint64_t seed) {
  SuiteSummary out;
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, 11, t);
    RealPoly p;
    const std::size_t deg = rng.next() % (max_degree + 1);
    for (std::size_t k = 0; k <= deg; ++k) p.c.push_back(rng.uniform(-1, 1));
    const double lo = rng.uniform(-2, 1), len = rng.uniform(0.1, 3);
    const Interval V{lo, lo + len};
    std::vector<Interval> omega;
    double x = V.lo;
    const std::size_t pieces = 1 + rng.next() % 3;
    for (std::size_t piece = 0; piece < pieces; ++piece) {
      const double a = x + rng.uniform() * (V.hi - x) / 2, b = a + rng.uniform() * (V.hi - a) / 2;
      if (b > a) omega.push_back({a, b});
      x = b;
    }
    if (omega.empty()) {
      ++out.skipped;
      continue;
    }
    ++out.trials;
    const BrudnyiCheck c = check_brudnyi(p, V, omega);
    if (!c.holds) ++out.failures;
    if (c.rhs > 0) out.worst = std::max(out.worst, c.lhs / c.rhs);
  }
  return out;
}

SuiteSummary box_containment_suite(std::size_t boxes, std::size_t probes, std::uint64_t seed) {
  const std::vector<ChainStructure> shapes = {
      ChainStructure::from_parts({2}, {}),        ChainStructure::from_parts({2, 1, 1, 0}, {}),
      ChainStructure::from_parts({3, 1}, {}),     ChainStructure::from_parts({1}, {{1, 1.0}}),
      ChainStructure::from_parts({4}, {{0, 0.2}}), ChainStructure::from_parts({}, {{2, 3.0}}),
  };
  SuiteSummary out;
  for (std::size_t b = 0; b < boxes; ++b) {
    CounterRng rng(seed, 12, b);
    const ChainStructure& s = shapes[rng.next() % shapes.size()];
    const double eps = rng.uniform(0.01, 1.0), T = std::exp(rng.uniform(std::log(0.5), std::log(500.0)));
    const auto inner = bowen_inner_box(s, eps, T), outer = bowen_outer_box(s, eps, T);
    DivergenceState x = DivergenceState::zero(s);
    Eigen::VectorXd v(static_cast<Eigen::Index>(inner.size()));
    bool ok = true;
    for (std::size_t k = 0; k < probes; ++k) {
      for (std::size_t i = 0; i < inner.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = k % 2 ? (rng.next() % 2 ? inner[i] : -inner[i]) : rng.uniform(-inner[i], inner[i]);
      x.assign(v);
      if (!in_bowen_ball(x, eps, T)) ok = false;
      for (std::size_t i = 0; i < outer.size(); ++i) v(static_cast<Eigen::Index>(i)) = rng.uniform(-1.2 * outer[i], 1.2 * outer[i]);
      x.assign(v);
      if (in_bowen_ball(x, eps, T))
        for (std::size_t i = 0; i < outer.size(); ++i)
          if (std::abs(v(static_cast<Eigen::Index>(i))) > outer[i]) ok = false;
    }
    ++out.trials;
    if (!ok) ++out.failures;
  }
  return out;
}

SuiteSummary shearing_suite(const ChainStructure& s, std::size_t trials, double eta, std::uint64_t seed) {
  const double c = shearing_constant(s);
  const auto dim = static_cast<Eigen::Index>(s.dimension());
  SuiteSummary out;
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, 13, t);
    Eigen::VectorXd d(dim);
    for (Eigen::Index i = 0; i < dim; ++i) d(i) = gaussian(rng);
    d *= eta * std::pow(rng.uniform(), 1.0 / static_cast<double>(dim)) / d.norm();
    DivergenceState x = DivergenceState::zero(s);
    x.assign(d);
    try {
      const ShearingVisit v = shearing_visit_fraction(x, c, eta);
      ++out.trials;
      out.worst = std::max(out.worst, v.fraction);
      if (!(v.fraction < 0.1)) ++out.failures;
    } catch (const DynamicsError&) {
      ++out.skipped;
    }
  }
  return out;
}

}  // namespace slowent
