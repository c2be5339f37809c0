#include "slowent/rat_matrix.hpp"

#include <stdexcept>

namespace slowent {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  RatMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVec& diag) {
  RatMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("RatMatrix::from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (sgn(x) != 0) return false;
  return true;
}

RatVec RatMatrix::column(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatVec RatMatrix::row(std::size_t i) const {
  return RatVec(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RatMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("RatMatrix +: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (sgn(other.entries_[k]) != 0) entries_[k] += other.entries_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("RatMatrix -: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (sgn(other.entries_[k]) != 0) entries_[k] -= other.entries_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& x : entries_) x = 0;
    return *this;
  }
  for (auto& x : entries_)
    if (sgn(x) != 0) x *= s;
  return *this;
}

RatMatrix operator-(RatMatrix a) {
  for (auto& x : a.entries_) x = -x;
  return a;
}

// The ad-operators and their powers are very sparse, so zero entries are
// skipped on both sides of the product.
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix *: shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  Rational tmp;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      const Rational* brow = &b.entries_[k * b.cols_];
      Rational* crow = &c.entries_[i * c.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(brow[j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), brow[j].get_mpq_t());
        crow[j] += tmp;
      }
    }
  }
  return c;
}

RatVec operator*(const RatMatrix& a, const RatVec& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("RatMatrix * vector: shape mismatch");
  RatVec out(a.rows_);
  Rational tmp;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(v[k]) == 0 || sgn(a(i, k)) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a(i, k).get_mpq_t(), v[k].get_mpq_t());
      out[i] += tmp;
    }
  }
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Eigen::MatrixXd RatMatrix::to_double() const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).get_d();
  return m;
}

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  RatMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

RatMatrix power(const RatMatrix& m, std::size_t k) {
  if (!m.is_square()) throw std::invalid_argument("power of non-square matrix");
  RatMatrix result = RatMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) result = result * m;
  return result;
}

Eigen::VectorXd to_double(const RatVec& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return out;
}

}  // namespace slowent
