#include "slowent/real_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace slowent {

double RealPoly::operator()(double t) const {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

long RealPoly::degree() const {
  for (std::size_t k = c.size(); k-- > 0;)
    if (c[k] != 0.0) return static_cast<long>(k);
  return -1;
}

RealPoly derivative(const RealPoly& p) {
  RealPoly d;
  for (std::size_t k = 1; k < p.c.size(); ++k) d.c.push_back(p.c[k] * static_cast<double>(k));
  return d;
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
  RealPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
  return r;
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) { return a + (-1.0) * b; }

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  RealPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

RealPoly operator*(double s, RealPoly p) {
  for (double& x : p.c) x *= s;
  return p;
}

RealPoly rescale(RealPoly p, double s) {
  double f = 1.0;
  for (double& x : p.c) {
    x *= f;
    f *= s;
  }
  return p;
}

namespace {

double bisect(const RealPoly& p, double a, double b, double fa) {
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = p(m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots(const RealPoly& p, double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("real_roots: empty interval");
  const long deg = p.degree();
  std::vector<double> roots;
  if (deg <= 0) return roots;  // constants: no isolated roots (the zero polynomial has none to report)
  if (deg == 1) {
    const double r = -p.c[0] / p.c[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }
  std::vector<double> knots{lo};
  for (double r : real_roots(derivative(p), lo, hi))
    if (r > knots.back()) knots.push_back(r);
  if (hi > knots.back()) knots.push_back(hi);

  // Tolerance for treating a critical value as a (multiple) root.
  double scale = 0.0;
  const double m = std::max({1.0, std::fabs(lo), std::fabs(hi)});
  double pw = 1.0;
  for (double x : p.c) {
    scale += std::fabs(x) * pw;
    pw *= m;
  }
  const double touch = 64 * std::numeric_limits<double>::epsilon() * scale;

  for (std::size_t i = 0; i < knots.size(); ++i) {
    const double fa = p(knots[i]);
    if (std::fabs(fa) <= touch && (roots.empty() || knots[i] > roots.back())) roots.push_back(knots[i]);
    if (i + 1 == knots.size()) break;
    const double fb = p(knots[i + 1]);
    if (std::fabs(fa) <= touch || std::fabs(fb) <= touch) continue;
    if ((fa < 0) != (fb < 0)) roots.push_back(bisect(p, knots[i], knots[i + 1], fa));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double sup_abs(const RealPoly& p, double lo, double hi) {
  double best = std::max(std::fabs(p(lo)), std::fabs(p(hi)));
  if (p.degree() >= 2)
    for (double r : real_roots(derivative(p), lo, hi)) best = std::max(best, std::fabs(p(r)));
  return best;
}

std::vector<double> chebyshev_points(std::size_t n, double lo, double hi) {
  std::vector<double> pts;
  if (n == 1) return {0.5 * (lo + hi)};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1)));
    pts.push_back(lo + (hi - lo) * u);
  }
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

std::vector<RealPoly> lagrange_basis(const std::vector<double>& nodes) {
  std::vector<RealPoly> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    RealPoly l{{1.0}};
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      const double den = nodes[i] - nodes[j];
      if (den == 0.0) throw std::invalid_argument("lagrange_basis: repeated node");
      l = l * RealPoly{{-nodes[j] / den, 1.0 / den}};
    }
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace slowent
