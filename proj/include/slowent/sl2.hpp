#pragma once

// sl(2)-triples (V, X, U') with [X,U'] = 2U', [X,V] = -2V, [U',V] = X, and the
// entropy exponent read off from the ad_X spectrum on the centralizer C(U'):
// R = sum_n d_n n(n+1)/2 where d_n is the multiplicity of eigenvalue n.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "slowent/closed_forms.hpp"
#include "slowent/exact_linalg.hpp"

namespace slowent {

class Sl2Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sl2Triple {
  RatMatrix V;
  RatMatrix X;
  RatMatrix Uprime;

  bool relations_hold() const;
};

struct CentralizerSpectrum {
  std::map<long, std::size_t> d_n;
  std::size_t dimension() const;
};

/// X = diag(d-1, d-3, ..., 1-d), U' = principal nilpotent, V with
/// V_{k+1,k} = k(d-k). Requires d >= 2.
Sl2Triple principal_triple(std::size_t d);

/// Block-diagonal assembly of principal triples; size-1 blocks are zero.
Sl2Triple block_triple(const BlockSequence& blocks);

/// Jacobson-Morozov over Q by linear solves: h = [e, y] with ad_e^2 y = -2e,
/// then f with [e, f] = h and [h, f] = -2f. Throws Sl2Error when no rational
/// solution exists in the span of the basis.
Sl2Triple jacobson_morozov(const std::vector<RatMatrix>& basis, const RatMatrix& e);

/// Coordinates of a basis of ker ad_u.
std::vector<RatVec> centralizer(const std::vector<RatMatrix>& basis, const RatMatrix& u);

struct TripleEntropy {
  CentralizerSpectrum spectrum;
  Rational R;
};

/// Throws Sl2Error("triple invalid for this algebra") when the relations fail
/// or ad_X has a non-integer or negative eigenvalue on C(U').
TripleEntropy entropy_via_triple(const std::vector<RatMatrix>& basis, const Sl2Triple& triple);

}  // namespace slowent
