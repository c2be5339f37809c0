#include "slowent/sl2.hpp"

#include <algorithm>

namespace slowent {

namespace {

const char* kInvalid = "triple invalid for this algebra";

// Largest integer that can be a root of p (Cauchy bound, floored).
long cauchy_bound(const CharPoly& p) {
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < p.coefficients.size(); ++i) {
    Rational q = abs(p.coefficients[i] / p.leading());
    if (q > best) best = q;
  }
  const Integer b = 1 + Integer(best.get_num() / best.get_den());
  return b.get_si();
}

}  // namespace

bool Sl2Triple::relations_hold() const {
  return bracket(X, Uprime) == Rational(2) * Uprime && bracket(X, V) == Rational(-2) * V && bracket(Uprime, V) == X;
}

std::size_t CentralizerSpectrum::dimension() const {
  std::size_t n = 0;
  for (const auto& [ev, mult] : d_n) n += mult;
  return n;
}

Sl2Triple principal_triple(std::size_t d) {
  if (d < 2) throw Sl2Error("principal triple needs d >= 2");
  Sl2Triple t{RatMatrix(d, d), RatMatrix(d, d), RatMatrix(d, d)};
  for (std::size_t i = 0; i < d; ++i) t.X(i, i) = static_cast<long>(d) - 1 - 2 * static_cast<long>(i);
  for (std::size_t k = 1; k < d; ++k) {
    t.Uprime(k - 1, k) = 1;
    t.V(k, k - 1) = static_cast<long>(k * (d - k));
  }
  if (!t.relations_hold()) throw Sl2Error("principal triple failed its relations");
  return t;
}

Sl2Triple block_triple(const BlockSequence& blocks) {
  std::vector<RatMatrix> v, x, u;
  for (std::size_t k : blocks) {
    if (k < 1) throw Sl2Error("block sizes must be >= 1");
    if (k == 1) {
      v.push_back(RatMatrix(1, 1));
      x.push_back(RatMatrix(1, 1));
      u.push_back(RatMatrix(1, 1));
      continue;
    }
    Sl2Triple t = principal_triple(k);
    v.push_back(t.V);
    x.push_back(t.X);
    u.push_back(t.Uprime);
  }
  Sl2Triple t{block_diagonal(v), block_diagonal(x), block_diagonal(u)};
  if (!t.relations_hold()) throw Sl2Error("block triple failed its relations");
  return t;
}

Sl2Triple jacobson_morozov(const std::vector<RatMatrix>& basis, const RatMatrix& e) {
  const BasisCoordinates coords(basis);
  const auto ec = coords.coordinates(e);
  if (!ec) throw Sl2Error("element outside the algebra");
  const RatMatrix ad_e = ad_operator(coords, e);
  const std::size_t n = coords.dim();

  RatVec rhs = *ec;
  for (Rational& r : rhs) r *= -2;
  const auto y = solve(ad_e * ad_e, rhs);
  if (!y) throw Sl2Error("no rational sl(2)-triple found");
  const RatVec h = ad_e * *y;
  const RatMatrix hm = coords.element(h);
  const RatMatrix ad_h = ad_operator(coords, hm);

  // [e, f] = h and ([h, .] + 2) f = 0, stacked.
  RatMatrix sys(2 * n, n);
  RatVec b(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys(i, j) = ad_e(i, j);
      sys(n + i, j) = ad_h(i, j);
    }
    sys(n + i, i) += 2;
    b[i] = h[i];
  }
  const auto f = solve(sys, b);
  if (!f) throw Sl2Error("no rational sl(2)-triple found");
  Sl2Triple t{coords.element(*f), hm, e};
  if (!t.relations_hold()) throw Sl2Error("no rational sl(2)-triple found");
  return t;
}

std::vector<RatVec> centralizer(const std::vector<RatMatrix>& basis, const RatMatrix& u) {
  return kernel(ad_operator(basis, u));
}

TripleEntropy entropy_via_triple(const std::vector<RatMatrix>& basis, const Sl2Triple& triple) {
  if (!triple.relations_hold()) throw Sl2Error(kInvalid);
  const BasisCoordinates coords(basis);
  const std::vector<RatVec> cent = kernel(ad_operator(coords, triple.Uprime));
  TripleEntropy out;
  out.R = 0;
  if (cent.empty()) return out;

  const RatMatrix k = RatMatrix::from_columns(cent, coords.dim());
  RatMatrix ad_x_on_c;
  try {
    ad_x_on_c = restrict_to_subspace(ad_operator(coords, triple.X), k);
  } catch (const LinalgError&) {
    throw Sl2Error(kInvalid);
  }

  // Integer root scan with multiplicities, cross-checked against eigenspace
  // dimensions (ad_X is semisimple, so the two must agree).
  CharPoly p = char_poly(ad_x_on_c);
  const long bound = cauchy_bound(p);
  const std::size_t c = cent.size();
  for (long n = 0; n <= bound && p.degree() > 0; ++n) {
    const CharPoly lin{{Rational(-n), Rational(1)}};
    std::size_t mult = 0;
    for (;;) {
      auto [q, r] = poly::divmod(p, lin);
      if (!poly::trim(r).coefficients.empty()) break;
      p = q;
      ++mult;
    }
    if (mult == 0) continue;
    RatMatrix shifted = ad_x_on_c - Rational(n) * RatMatrix::identity(c);
    if (kernel(shifted).size() != mult) throw Sl2Error(kInvalid);
    out.spectrum.d_n[n] = mult;
    out.R += Rational(static_cast<unsigned long>(mult * static_cast<std::size_t>(n * (n + 1) / 2)));
  }
  if (out.spectrum.dimension() != c) throw Sl2Error(kInvalid);
  return out;
}

}  // namespace slowent
