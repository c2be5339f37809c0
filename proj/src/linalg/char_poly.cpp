#include <algorithm>

#include "slowent/exact_linalg.hpp"

namespace slowent {

long CharPoly::degree() const {
  for (std::size_t k = coefficients.size(); k-- > 0;)
    if (sgn(coefficients[k]) != 0) return static_cast<long>(k);
  return -1;
}

namespace poly {

CharPoly trim(CharPoly p) {
  while (!p.coefficients.empty() && sgn(p.coefficients.back()) == 0) p.coefficients.pop_back();
  return p;
}

CharPoly derivative(const CharPoly& p) {
  CharPoly d;
  for (std::size_t k = 1; k < p.coefficients.size(); ++k) d.coefficients.push_back(p.coefficients[k] * static_cast<unsigned long>(k));
  return trim(std::move(d));
}

CharPoly monic(const CharPoly& p) {
  CharPoly m = trim(p);
  if (m.coefficients.empty()) return m;
  const Rational lead = m.coefficients.back();
  for (auto& c : m.coefficients) c /= lead;
  return m;
}

std::pair<CharPoly, CharPoly> divmod(const CharPoly& a, const CharPoly& b) {
  const CharPoly bt = trim(b);
  if (bt.coefficients.empty()) throw LinalgError("polynomial division by zero");
  CharPoly r = trim(a);
  const long db = bt.degree();
  CharPoly q;
  if (r.degree() < db) return {q, r};
  q.coefficients.assign(static_cast<std::size_t>(r.degree() - db + 1), Rational(0));
  const Rational& lead = bt.coefficients.back();
  while (r.degree() >= db) {
    const long shift = r.degree() - db;
    const Rational f = r.coefficients.back() / lead;
    q.coefficients[static_cast<std::size_t>(shift)] = f;
    for (long k = 0; k <= db; ++k) r.coefficients[static_cast<std::size_t>(k + shift)] -= f * bt.coefficients[static_cast<std::size_t>(k)];
    r.coefficients.back() = 0;
    r = trim(std::move(r));
  }
  return {trim(std::move(q)), r};
}

CharPoly gcd(CharPoly a, CharPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.coefficients.empty()) {
    CharPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

CharPoly squarefree_part(const CharPoly& p) {
  const CharPoly g = gcd(p, derivative(p));
  return monic(divmod(p, g).first);
}

Rational evaluate(const CharPoly& p, const Rational& x) {
  Rational acc;
  for (std::size_t k = p.coefficients.size(); k-- > 0;) acc = acc * x + p.coefficients[k];
  return acc;
}

RatMatrix evaluate(const CharPoly& p, const RatMatrix& m) {
  if (!m.is_square()) throw LinalgError("polynomial evaluated at non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix acc(n, n);
  for (std::size_t k = p.coefficients.size(); k-- > 0;) {
    acc = acc * m;
    if (sgn(p.coefficients[k]) != 0)
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coefficients[k];
  }
  return acc;
}

}  // namespace poly

CharPoly char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw LinalgError("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  RatMatrix h = m;
  Rational tmp;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && sgn(h(p, j)) == 0) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    const Rational piv = h(j + 1, j);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (sgn(h(k, j)) == 0) continue;
      const Rational f = h(k, j) / piv;
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(h(j + 1, c)) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), h(j + 1, c).get_mpq_t());
        h(k, c) -= tmp;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (sgn(h(r, k)) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), h(r, k).get_mpq_t());
        h(r, j + 1) += tmp;
      }
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{m=i+1..k} h_{m,m-1}) p_{i-1}
  std::vector<RatVec> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    RatVec next(k + 1);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Rational sub = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      sub *= h(i + 1, i);
      if (sgn(sub) == 0) break;
      const Rational coeff = h(i, k - 1) * sub;
      if (sgn(coeff) == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coeff * p[i][d];
    }
    p[k] = std::move(next);
  }
  return CharPoly{p[n]};
}

std::optional<std::size_t> nilpotency_index(const RatMatrix& m) {
  if (!m.is_square()) throw LinalgError("nilpotency_index: matrix must be square");
  const std::size_t n = m.rows();
  if (m.is_zero()) return 1;
  const CharPoly cp = char_poly(m);
  for (std::size_t k = 0; k < n; ++k)
    if (sgn(cp.coefficients[k]) != 0) return std::nullopt;
  RatMatrix pw = m;
  for (std::size_t k = 2; k <= n; ++k) {
    pw = pw * m;
    if (pw.is_zero()) return k;
  }
  return std::nullopt;  // unreachable for a nilpotent matrix
}

JordanChevalley jordan_chevalley(const RatMatrix& m) {
  if (!m.is_square()) throw LinalgError("jordan_chevalley: matrix must be square");
  const std::size_t n = m.rows();
  const CharPoly cp = char_poly(m);
  if (cp.degree() == static_cast<long>(n) &&
      std::all_of(cp.coefficients.begin(), cp.coefficients.begin() + static_cast<std::ptrdiff_t>(n),
                  [](const Rational& c) { return sgn(c) == 0; })) {
    return {RatMatrix(n, n), m};
  }
  const CharPoly q = poly::squarefree_part(cp);
  const CharPoly dq = poly::derivative(q);
  RatMatrix s = m;
  // Quadratic convergence in the nilpotency order; 64 steps is far beyond
  // any reachable dimension.
  for (int iter = 0; iter < 64; ++iter) {
    RatMatrix qs = poly::evaluate(q, s);
    if (qs.is_zero()) return {s, m - s};
    auto inv = inverse(poly::evaluate(dq, s));
    if (!inv) throw LinalgError("jordan_chevalley: Newton step singular");
    s -= qs * *inv;
  }
  throw LinalgError("jordan_chevalley: Newton iteration did not converge");
}

}  // namespace slowent
