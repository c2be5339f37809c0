#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "slowent/dynamics.hpp"
#include "slowent/rng.hpp"
#include "slowent/zoo.hpp"

using namespace slowent;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ChainStructure structure(std::vector<std::size_t> depths, std::vector<std::pair<std::size_t, double>> doubles = {}) {
  return ChainStructure::from_parts(std::move(depths), std::move(doubles));
}

McConfig quick_config(std::uint64_t seed = 1, std::size_t samples = 100000) {
  McConfig cfg;
  cfg.T_grid = geometric_grid(10, 2, 5);
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

DivergenceState random_state(const ChainStructure& s, std::mt19937_64& rng, double scale) {
  DivergenceState x = DivergenceState::zero(s);
  std::uniform_real_distribution<double> u(-scale, scale);
  Eigen::VectorXd v(static_cast<Eigen::Index>(x.dimension()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = u(rng);
  x.assign(v);
  return x;
}

}  // namespace

TEST_CASE("real polynomial roots and sups") {
  const RealPoly p{{-2.0, 0.0, 1.0}};  // t^2 - 2
  const auto r = real_roots(p, -3, 3);
  REQUIRE(r.size() == 2);
  CHECK_THAT(r[0], WithinAbs(-std::sqrt(2.0), 1e-14));
  CHECK_THAT(r[1], WithinAbs(std::sqrt(2.0), 1e-14));
  const RealPoly sq{{1.0, -2.0, 1.0}};  // (t-1)^2 touches zero
  const auto d = real_roots(sq, 0, 3);
  REQUIRE(d.size() == 1);
  CHECK_THAT(d[0], WithinAbs(1.0, 1e-12));
  const RealPoly cubic{{0.0, -1.0, 0.0, 1.0}};  // t^3 - t on [0, 1]
  CHECK_THAT(sup_abs(cubic, 0, 1), WithinAbs(2.0 / (3.0 * std::sqrt(3.0)), 1e-14));
  // Roots of a product of known linear factors.
  RealPoly prod{{1.0}};
  for (double root : {0.1, 0.35, 0.6, 0.62, 0.9}) prod = prod * RealPoly{{-root, 1.0}};
  const auto rr = real_roots(prod, 0, 1);
  REQUIRE(rr.size() == 5);
  CHECK_THAT(rr[3], WithinAbs(0.62, 1e-12));
}

TEST_CASE("evolve examples") {
  DivergenceState x = DivergenceState::zero(structure({1}));
  x.chains[0] = {1, 0};
  CHECK(evolve(x, 3.7).chains[0] == std::vector<double>{1, 0});

  DivergenceState y = DivergenceState::zero(structure({2}));
  y.chains[0] = {0, 0, 1};
  CHECK(evolve(y, 2).chains[0] == std::vector<double>{2, 2, 1});

  DivergenceState z = DivergenceState::zero(structure({}, {{0, 1.0}}));
  z.doubles[0].b = {1};
  z.doubles[0].c = {0};
  const DivergenceState zt = evolve(z, std::numbers::pi / 2);
  CHECK_THAT(zt.doubles[0].b[0], WithinAbs(0.0, 1e-12));
  CHECK_THAT(zt.doubles[0].c[0], WithinAbs(1.0, 1e-12));
}

TEST_CASE("evolution is a flow and preserves double-chain pair norms of the shear") {
  std::mt19937_64 rng(5);
  const ChainStructure s = structure({3, 1, 0}, {{2, 0.7}, {0, 2.5}});
  for (int trial = 0; trial < 50; ++trial) {
    const DivergenceState x = random_state(s, rng, 1.0);
    const double a = std::uniform_real_distribution<double>(-3, 3)(rng);
    const double b = std::uniform_real_distribution<double>(-3, 3)(rng);
    const Eigen::VectorXd lhs = evolve(evolve(x, a), b).flatten(), rhs = evolve(x, a + b).flatten();
    CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() <= 1e-10 * std::max(1.0, rhs.lpNorm<Eigen::Infinity>()));
    const DivergenceState rotated = evolve(x, a), sheared = evolve_split(x, a, 0.0);
    for (std::size_t i = 0; i < x.doubles.size(); ++i)
      for (std::size_t j = 0; j < x.doubles[i].b.size(); ++j) {
        const double n1 = std::hypot(rotated.doubles[i].b[j], rotated.doubles[i].c[j]);
        const double n2 = std::hypot(sheared.doubles[i].b[j], sheared.doubles[i].c[j]);
        CHECK_THAT(n1, WithinRel(n2, 1e-12));
      }
  }
}

TEST_CASE("evolve_matrix_check") {
  const auto basis = sl_basis(2);
  const RatMatrix u = RatMatrix::unit(2, 0, 1);
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(3);
  x0(1) = 1e-3;  // E21 = V
  CHECK(evolve_matrix_check(basis, u, x0, 5.0) < 1e-8);
  CHECK(evolve_matrix_check(basis, u, Eigen::VectorXd::Zero(3), 5.0) == 0.0);
  CHECK(evolve_matrix_check(basis, u, x0, 0.0) < 1e-12);
  // Rotation generator: exercises the double-chain orientation.
  const RatMatrix rot = RatMatrix::from_rows({{0, 1}, {-1, 0}});
  const Eigen::VectorXd y0 = Eigen::Vector3d(2e-3, -1e-3, 5e-4);
  for (double t : {-2.0, 0.3, 1.0, 4.0}) CHECK(evolve_matrix_check(basis, rot, y0, t) < 1e-8);
  CHECK_THROWS_WITH(evolve_matrix_check(basis, u, Eigen::Vector3d(0, 1, 0), 10.0), "displacement too large for log chart");
}

TEST_CASE("predicted_exponents") {
  CHECK(predicted_exponents(structure({2})).dim_exponent == 3);
  CHECK(predicted_exponents(structure({2})).time_exponent == -3);
  CHECK(predicted_exponents(structure({0})).dim_exponent == 1);
  CHECK(predicted_exponents(structure({0})).time_exponent == 0);
  CHECK(predicted_exponents(structure({2, 1, 1, 0})).dim_exponent == 8);
  CHECK(predicted_exponents(structure({2, 1, 1, 0})).time_exponent == -5);
}

TEST_CASE("Bowen volume slopes") {
  const VolumeSeries v2 = mc_bowen_volume(structure({2}), quick_config());
  CHECK(v2.fit.exponent >= -3.3);
  CHECK(v2.fit.exponent <= -2.7);
  const VolumeSeries v0 = mc_bowen_volume(structure({0, 0, 0}), quick_config());
  CHECK(std::abs(v0.fit.exponent) <= 0.1);
  const VolumeSeries vd = mc_bowen_volume(structure({}, {{1, 1.0}}), quick_config());
  CHECK_THAT(vd.fit.exponent, WithinAbs(-2.0, 0.3));
}

TEST_CASE("Monte Carlo is deterministic across thread counts and sup modes agree") {
  McConfig cfg = quick_config(9, 5000);
  cfg.threads = 1;
  const VolumeSeries a = mc_bowen_volume(structure({2, 1}), cfg);
  cfg.threads = 3;
  const VolumeSeries b = mc_bowen_volume(structure({2, 1}), cfg);
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].accepted == b.points[i].accepted);
  cfg.sup_mode = SupMode::grid;
  const VolumeSeries g = mc_bowen_volume(structure({2, 1}), cfg);
  for (std::size_t i = 0; i < a.points.size(); ++i)
    CHECK(std::abs(static_cast<long>(a.points[i].accepted) - static_cast<long>(g.points[i].accepted)) <= 5);
}

TEST_CASE("volume scales as epsilon^dim") {
  const ChainStructure s = structure({2, 0});
  McConfig cfg = quick_config(4, 40000);
  cfg.T_grid = {20, 40, 80};
  const VolumeSeries small = mc_bowen_volume(s, cfg);
  cfg.epsilon = 0.2;
  cfg.seed = 5;
  const VolumeSeries big = mc_bowen_volume(s, cfg);
  const double factor = std::pow(2.0, static_cast<double>(s.dimension()));
  for (std::size_t i = 0; i < small.points.size(); ++i) {
    // Relative standard error of each estimate is sqrt((1-p)/(n p)).
    auto rel = [](const VolumePoint& p) {
      const double f = static_cast<double>(p.accepted) / static_cast<double>(p.samples);
      return std::sqrt((1 - f) / (static_cast<double>(p.samples) * f));
    };
    const double sigma = std::hypot(rel(small.points[i]), rel(big.points[i]));
    CHECK(std::abs(std::log(big.points[i].volume / small.points[i].volume / factor)) <= 3 * sigma);
  }
}

TEST_CASE("inner box accepted and outer box contains every accepted point") {
  std::mt19937_64 rng(77);
  const std::vector<ChainStructure> shapes = {structure({2}), structure({3, 1}), structure({1}, {{1, 1.3}}),
                                              structure({4, 0}, {{0, 0.2}})};
  for (int trial = 0; trial < 40; ++trial) {
    const ChainStructure& s = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const double eps = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
    const double T = std::uniform_real_distribution<double>(0.5, 200.0)(rng);
    const auto inner = bowen_inner_box(s, eps, T), outer = bowen_outer_box(s, eps, T);
    DivergenceState x = DivergenceState::zero(s);
    Eigen::VectorXd v(static_cast<Eigen::Index>(inner.size()));
    for (int k = 0; k < 50; ++k) {
      // Inner: corners and interior points.
      for (std::size_t i = 0; i < inner.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = k % 2 ? (rng() % 2 ? inner[i] : -inner[i])
                                                : std::uniform_real_distribution<double>(-inner[i], inner[i])(rng);
      x.assign(v);
      CHECK(in_bowen_ball(x, eps, T));
      // Outer: sample a slightly larger box; accepted points must fit inside.
      for (std::size_t i = 0; i < outer.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = std::uniform_real_distribution<double>(-1.2 * outer[i], 1.2 * outer[i])(rng);
      x.assign(v);
      if (in_bowen_ball(x, eps, T))
        for (std::size_t i = 0; i < outer.size(); ++i) CHECK(std::abs(v(static_cast<Eigen::Index>(i))) <= outer[i]);
    }
  }
}

TEST_CASE("sequence Bowen slopes") {
  McConfig cfg = quick_config(2, 50000);
  SequenceConfig seq;
  seq.lambda = 2.0;
  const VolumeSeries v = sequence_bowen_volume(structure({2}), seq, cfg);
  CHECK_THAT(v.fit.exponent, WithinAbs(-3 * std::log(2.0), 0.3));
  const VolumeSeries z = sequence_bowen_volume(structure({0}), seq, cfg);
  CHECK(z.fit.exponent == 0.0);
  seq.lambda = std::exp(1.0);
  const VolumeSeries one = sequence_bowen_volume(structure({1}), seq, cfg);
  CHECK_THAT(one.fit.exponent, WithinAbs(-1.0, 0.2));
  seq.lambda = 1.0;
  CHECK_THROWS(sequence_bowen_volume(structure({1}), seq, cfg));
}

TEST_CASE("sequence outer box contains accepted points") {
  std::mt19937_64 rng(8);
  const ChainStructure s = structure({2, 1}, {{1, 0.4}});
  for (std::size_t N = 0; N <= 5; ++N) {
    std::vector<double> times;
    for (std::size_t k = 0; k <= N; ++k) times.push_back(std::pow(2.0, static_cast<double>(k)));
    const auto box = sequence_outer_box(s, 0.1, times);
    DivergenceState x = DivergenceState::zero(s);
    Eigen::VectorXd v(static_cast<Eigen::Index>(box.size()));
    for (int k = 0; k < 2000; ++k) {
      for (std::size_t i = 0; i < box.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = std::uniform_real_distribution<double>(-1.3 * box[i], 1.3 * box[i])(rng);
      x.assign(v);
      if (in_sequence_ball(x, 0.1, times))
        for (std::size_t i = 0; i < box.size(); ++i) CHECK(std::abs(v(static_cast<Eigen::Index>(i))) <= box[i]);
    }
  }
}

TEST_CASE("norm equivalence constants") {
  const NormEquivalence c0 = norm_equiv_constant(0, 100, 1);
  CHECK(c0.coef_over_sup == 1.0);
  CHECK(c0.sup_over_coef == 1.0);
  CHECK(norm_equiv_constant(1, 2000, 1).coef_over_sup <= 2.0 + 1e-12);
  const double a = norm_equiv_constant(5, 10000, 1).coef_over_sup;
  const double b = norm_equiv_constant(5, 10000, 2).coef_over_sup;
  CHECK(std::isfinite(a));
  CHECK_THAT(a, WithinRel(b, 0.05));
  CHECK(norm_equiv_constant(5, 10000, 1).sup_over_coef <= 6.0);
}

TEST_CASE("Brudnyi-Ganzburg inequality") {
  const BrudnyiCheck lin = check_brudnyi(RealPoly{{0.0, 1.0}}, {0, 1}, {{0, 0.5}});
  CHECK(lin.holds);
  CHECK_THAT(lin.lhs, WithinAbs(1.0, 1e-15));
  CHECK_THAT(lin.rhs, WithinAbs(4.0, 1e-15));
  const BrudnyiCheck cst = check_brudnyi(RealPoly{{-0.3}}, {0, 1}, {{0.2, 0.21}});
  CHECK(cst.holds);
  CHECK(cst.lhs == cst.rhs);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1), coef(-1, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    RealPoly p;
    const std::size_t deg = rng() % 7;
    for (std::size_t k = 0; k <= deg; ++k) p.c.push_back(coef(rng));
    std::vector<Interval> omega;
    double x = 0;
    for (std::size_t piece = 0; piece < 1 + rng() % 3; ++piece) {
      const double lo = x + u(rng) * (1 - x) / 2, hi = lo + u(rng) * (1 - lo) / 2;
      if (hi > lo) omega.push_back({lo, hi});
      x = hi;
    }
    if (omega.empty()) continue;
    CHECK(check_brudnyi(p, {0, 1}, omega).holds);
  }
}

TEST_CASE("shearing visit fraction") {
  const double eta = 0.05;
  DivergenceState x = DivergenceState::zero(structure({1}));
  x.chains[0] = {0, eta / 10};
  const ShearingVisit v = shearing_visit_fraction(x, 1e-3, eta);
  CHECK_THAT(v.S, WithinAbs(std::sqrt(99.0), 1e-9));
  CHECK(v.fraction < 0.1);

  DivergenceState central = DivergenceState::zero(structure({1, 0}));
  central.chains[0] = {eta / 2, 0};
  central.chains[1] = {eta / 3};
  CHECK_THROWS_WITH(shearing_visit_fraction(central, 1e-3, eta), "no separation");

  const ChainStructure s = structure({2});
  CHECK_THAT(shearing_constant(s), WithinAbs(0.012375, 1e-15));
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 300; ++trial) {
    // Uniform in the open eta-ball.
    Eigen::Vector3d d(g(rng), g(rng), g(rng));
    d *= eta * std::cbrt(std::uniform_real_distribution<double>(0, 1)(rng)) / d.norm();
    DivergenceState y = DivergenceState::zero(s);
    y.assign(d);
    CHECK(shearing_visit_fraction(y, shearing_constant(s), eta).fraction < 0.1);
  }
}

TEST_CASE("counter rng streams are reproducible and distinct") {
  CounterRng a(1, 2, 3), b(1, 2, 3), c(1, 2, 4);
  CHECK(a.next() == b.next());
  CHECK(a.next() != c.next());
  double sum = 0;
  CounterRng r(7, 0, 0);
  for (int i = 0; i < 100000; ++i) sum += r.uniform();
  CHECK_THAT(sum / 100000, WithinAbs(0.5, 0.005));
}
