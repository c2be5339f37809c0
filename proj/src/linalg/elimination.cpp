#include <algorithm>
#include <utility>

#include "slowent/exact_linalg.hpp"

namespace slowent {

namespace {

using IntRow = std::vector<Integer>;

// Scales each row by the lcm of its denominators so elimination can run
// over Z.
std::vector<IntRow> clear_denominators(const RatMatrix& m) {
  std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& den = m(i, j).get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (sgn(x) == 0) continue;
      rows[i][j] = x.get_num() * (l / x.get_den());
    }
  }
  return rows;
}

}  // namespace

RowEchelon row_echelon(const RatMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<IntRow> a = clear_denominators(m);
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer t1, t2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && sgn(a[p][c]) == 0) ++p;
    if (p == nr) continue;
    if (p != r) std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      const bool lead_zero = sgn(a[i][c]) == 0;
      for (std::size_t j = c + 1; j < nc; ++j) {
        if (lead_zero) {
          if (sgn(a[i][j]) == 0) continue;
          mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
          mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
          continue;
        }
        mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), a[i][c].get_mpz_t(), a[r][j].get_mpz_t());
        t1 -= t2;
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }

  // Back substitution to the reduced form.
  RatMatrix rref(nr, nc);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Integer& piv = a[k][pivots[k]];
    for (std::size_t j = 0; j < nc; ++j) {
      if (sgn(a[k][j]) == 0) continue;
      rref(k, j) = Rational(a[k][j], piv);
      rref(k, j).canonicalize();
    }
  }
  Rational tmp;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(rref(i, pc)) == 0) continue;
      const Rational f = rref(i, pc);
      for (std::size_t j = pc; j < nc; ++j) {
        if (sgn(rref(k, j)) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), rref(k, j).get_mpq_t());
        rref(i, j) -= tmp;
      }
    }
  }
  return {std::move(rref), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return row_echelon(m).rank(); }

std::vector<RatVec> kernel(const RatMatrix& m) {
  const RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (sgn(e.rref(r, f)) != 0) v[e.pivots[r]] = -e.rref(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_columns(const RatMatrix& m) { return row_echelon(m).pivots; }

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw LinalgError("solve: right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref(r, a.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw LinalgError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = row_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

RatMatrix restrict_to_subspace(const RatMatrix& a, const RatMatrix& k) {
  if (!a.is_square() || a.rows() != k.rows()) throw LinalgError("restrict_to_subspace: dimension mismatch");
  const std::size_t r = k.cols();
  // Rows of k forming an invertible minor.
  const std::vector<std::size_t> rows = independent_columns(k.transpose());
  if (rows.size() != r) throw LinalgError("restrict_to_subspace: dependent columns");
  RatMatrix kp(r, r);
  const RatMatrix ak = a * k;
  RatMatrix akp(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      kp(i, j) = k(rows[i], j);
      akp(i, j) = ak(rows[i], j);
    }
  RatMatrix m = *inverse(kp) * akp;
  if (k * m != ak) throw LinalgError("subspace is not invariant");
  return m;
}

// ---------------------------------------------------------------------------

RatVec IncrementalSpan::reduce(RatVec v) const {
  Rational tmp;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivots_[k]];
    if (sgn(f) == 0) continue;
    const RatVec& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(row[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), row[j].get_mpq_t());
      v[j] -= tmp;
    }
  }
  return v;
}

bool IncrementalSpan::contains(const RatVec& v) const {
  if (v.size() != dim_) throw LinalgError("IncrementalSpan: dimension mismatch");
  return is_zero(reduce(v));
}

bool IncrementalSpan::add(const RatVec& v) {
  if (v.size() != dim_) throw LinalgError("IncrementalSpan: dimension mismatch");
  RatVec w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && sgn(w[p]) == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / w[p];
  for (auto& x : w)
    if (sgn(x) != 0) x *= inv;
  Rational tmp;
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(w[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), w[j].get_mpq_t());
      row[j] -= tmp;
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace slowent
