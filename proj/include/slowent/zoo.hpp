#pragma once

// Example algebras: sl(d) with block nilpotents, the nilpotent algebra whose
// flow has the affine torus map as first return, sl(d) twisted by a symmetric
// power, and a synthetic realizer of any prescribed chain structure.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slowent/closed_forms.hpp"
#include "slowent/exact_linalg.hpp"

namespace slowent {

class ZooError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix Lie algebra given by a basis, with a distinguished element U.
/// U need not lie in the span (the synthetic realizer acts by an outer
/// derivation on an abelian algebra); ad_U must preserve the span.
struct Algebra {
  std::string name;
  std::vector<RatMatrix> basis;
  RatMatrix U;

  RatMatrix ad_u() const { return ad_operator(basis, U); }
};

/// E_ij (i != j, row-major), then H_i = E_ii - E_{i+1,i+1}.
std::vector<RatMatrix> sl_basis(std::size_t d);
RatMatrix principal_nilpotent(std::size_t d);
RatMatrix block_nilpotent(const BlockSequence& k);
Algebra sl_algebra(const BlockSequence& k);

/// The (d+1) x (d+1) matrix with first row (0, x_1..x_d) and t log(I + J_d)
/// in the lower-right block (entry (-1)^{k+1} t/k at distance k).
RatMatrix heisenberg_element(const RatVec& x, const Rational& t);
/// d >= 2. Basis E_{0,1..d} and the t-generator; U = U(x, 1) with x_k = (-1)^{k+1} alpha/k.
Algebra heisenberg_type(std::size_t d, const Rational& alpha);

/// d rho(a) for rho = Sym^n of the standard representation, in the monomial
/// basis of degree-n polynomials (lexicographically descending exponents).
RatMatrix sym_power_rep(const RatMatrix& a, std::size_t n);
/// Accepts "sym0".."sym8" and "Sym^0".."Sym^8".
std::size_t parse_sym_power(std::string_view spec);
/// sl(d) semidirect Sym^n(R^d) as (d + N + 1)-sized matrices diag(A, [[rho(A), v], [0, 0]]);
/// basis: sl(d) first, then the N translations. U = block_nilpotent(k).
Algebra twisted_algebra(const BlockSequence& k, std::size_t sym_power);

/// Abelian algebra of translations [[0, v], [0, 0]] with U = [[A, 0], [0, 0]]
/// so that ad_U = A: one shift block per chain and J (x) I_2 + I (x) Q_alpha per
/// double chain. Alphas are replaced by nearby rationals (within 1e-12).
Algebra synthetic_from_structure(const std::vector<std::size_t>& depths,
                                 const std::vector<std::pair<std::size_t, double>>& doubles);

/// Smallest-denominator rational within tol of x (continued fractions).
Rational rational_approximation(double x, double tol = 1e-12);

/// Exact exp of a nilpotent matrix (finite series). Throws ZooError otherwise.
RatMatrix nilpotent_exp(const RatMatrix& n);

bool is_bracket_closed(const std::vector<RatMatrix>& basis);

/// Jordan block sizes of a nilpotent matrix, descending.
std::vector<std::size_t> jordan_lengths(const RatMatrix& nilpotent);

}  // namespace slowent
