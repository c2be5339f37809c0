#pragma once

// Exact linear algebra over Q: elimination, kernels, characteristic
// polynomials, the Jordan-Chevalley splitting, and the Lie-algebra
// primitives (brackets and ad-operators in a chosen basis).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slowent/rat_matrix.hpp"
#include "slowent/rational.hpp"

namespace slowent {

/// Raised for shape errors and for inputs outside an operation's domain.
class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Elimination

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  RatMatrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free (Bareiss) forward elimination followed by exact back
/// substitution. Pivot column: leftmost column with a nonzero entry among
/// the remaining rows; pivot row: lowest such row index.
RowEchelon row_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<RatVec> kernel(const RatMatrix& m);

/// Indices of a maximal set of linearly independent columns (leftmost first).
std::vector<std::size_t> independent_columns(const RatMatrix& m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// The matrix r with a k = k r, i.e. a restricted to the column span of k
/// (columns independent). Throws LinalgError when the span is not invariant.
RatMatrix restrict_to_subspace(const RatMatrix& a, const RatMatrix& k);

/// Incrementally grown span with a reduced echelon basis; membership and
/// coordinate queries are exact.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ambient_dim) : dim_(ambient_dim) {}

  /// Adds v when it is independent of the current span; returns whether it did.
  bool add(const RatVec& v);
  bool contains(const RatVec& v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

 private:
  RatVec reduce(RatVec v) const;

  std::size_t dim_;
  std::vector<RatVec> rows_;          // echelon rows, each with a unit pivot
  std::vector<std::size_t> pivots_;   // pivot column of each row
};

// ---------------------------------------------------------------------------
// Polynomials over Q, coefficients lowest degree first.

struct CharPoly {
  RatVec coefficients;

  /// Degree of the polynomial; -1 for the zero polynomial.
  long degree() const;
  const Rational& leading() const { return coefficients.back(); }
};

namespace poly {
CharPoly trim(CharPoly p);
CharPoly derivative(const CharPoly& p);
CharPoly monic(const CharPoly& p);
/// Quotient and remainder of a / b; b must be nonzero.
std::pair<CharPoly, CharPoly> divmod(const CharPoly& a, const CharPoly& b);
/// Monic greatest common divisor.
CharPoly gcd(CharPoly a, CharPoly b);
/// p / gcd(p, p'), monic.
CharPoly squarefree_part(const CharPoly& p);
Rational evaluate(const CharPoly& p, const Rational& x);
/// Horner evaluation at a square matrix.
RatMatrix evaluate(const CharPoly& p, const RatMatrix& m);
}  // namespace poly

/// det(x I - m), monic, degree = dim m. Computed by reduction to upper
/// Hessenberg form over Q followed by the Hessenberg determinant recurrence.
CharPoly char_poly(const RatMatrix& m);

// ---------------------------------------------------------------------------
// Nilpotency and the Jordan-Chevalley splitting

/// Smallest N >= 1 with m^N = 0, or nullopt when m is not nilpotent.
std::optional<std::size_t> nilpotency_index(const RatMatrix& m);

struct JordanChevalley {
  RatMatrix semisimple;
  RatMatrix nilpotent;
};

/// m = S + N with S semisimple over the algebraic closure, N nilpotent and
/// SN = NS. Newton iteration on the square-free part of the characteristic
/// polynomial, so no factorization is needed.
JordanChevalley jordan_chevalley(const RatMatrix& m);

// ---------------------------------------------------------------------------
// Lie-algebra primitives

/// ab - ba.
RatMatrix bracket(const RatMatrix& a, const RatMatrix& b);

/// Exact coordinates of matrices with respect to a fixed, linearly
/// independent family of matrices.
class BasisCoordinates {
 public:
  /// Throws LinalgError("dependent basis") when the family is dependent.
  explicit BasisCoordinates(std::vector<RatMatrix> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatMatrix>& basis() const { return basis_; }

  /// Coordinates of x, or nullopt when x lies outside the span.
  std::optional<RatVec> coordinates(const RatMatrix& x) const;
  RatMatrix element(const RatVec& coords) const;

 private:
  std::vector<RatMatrix> basis_;
  std::vector<std::size_t> pivot_entries_;  // flat entry indices selecting an invertible minor
  RatMatrix minor_inverse_;
};

/// Matrix of ad_u in the given basis; column i holds the coordinates of
/// [u, basis[i]]. Throws LinalgError("not bracket-closed") when some
/// bracket leaves the span and LinalgError("dependent basis") when the
/// basis is dependent.
RatMatrix ad_operator(const std::vector<RatMatrix>& basis, const RatMatrix& u);
RatMatrix ad_operator(const BasisCoordinates& basis, const RatMatrix& u);

}  // namespace slowent
