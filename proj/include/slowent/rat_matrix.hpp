#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "slowent/rational.hpp"

namespace slowent {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Small integer literals, row by row. Rows must have equal length.
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  /// E_{ij} with zero-based indices.
  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static RatMatrix diagonal(const RatVec& diag);
  /// Columns are the given vectors (all of equal length, at least one).
  static RatMatrix from_columns(const std::vector<RatVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return entries_; }

  RatVec column(std::size_t j) const;
  RatVec row(std::size_t i) const;
  RatMatrix transpose() const;
  Rational trace() const;

  /// Row-major flattening; used as coordinates of a matrix in gl(n).
  const RatVec& flat() const { return entries_; }

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVec operator*(const RatMatrix& a, const RatVec& v);
  friend RatMatrix operator-(RatMatrix a);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  Eigen::MatrixXd to_double() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Block-diagonal assembly; blocks need not be square.
RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks);

/// m^k for square m (k = 0 gives the identity).
RatMatrix power(const RatMatrix& m, std::size_t k);

Eigen::VectorXd to_double(const RatVec& v);

}  // namespace slowent
