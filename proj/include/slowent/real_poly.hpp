#pragma once

// Real polynomials in double precision with certified-by-bisection real roots.

#include <cstddef>
#include <vector>

namespace slowent {

struct RealPoly {
  std::vector<double> c;  // lowest degree first

  double operator()(double t) const;
  /// Index of the highest nonzero coefficient; -1 for the zero polynomial.
  long degree() const;
};

RealPoly derivative(const RealPoly& p);
RealPoly operator+(const RealPoly& a, const RealPoly& b);
RealPoly operator-(const RealPoly& a, const RealPoly& b);
RealPoly operator*(const RealPoly& a, const RealPoly& b);
RealPoly operator*(double s, RealPoly p);
/// p(s t): rescales the variable.
RealPoly rescale(RealPoly p, double s);

/// Real roots in [lo, hi], ascending. Roots of p' split the interval into
/// monotone pieces (recursively), and each sign change is bisected to full
/// precision. Double roots are found as critical points where p vanishes.
std::vector<double> real_roots(const RealPoly& p, double lo, double hi);

/// max |p| on [lo, hi] over the endpoints and the critical points.
double sup_abs(const RealPoly& p, double lo, double hi);

/// Chebyshev extrema (1 - cos(pi i/(n-1)))/2 mapped onto [lo, hi]; endpoints included.
std::vector<double> chebyshev_points(std::size_t n, double lo = 0.0, double hi = 1.0);

/// Lagrange basis polynomials for the given distinct nodes.
std::vector<RealPoly> lagrange_basis(const std::vector<double>& nodes);

}  // namespace slowent
