#pragma once

// Chain bases of ad_U for a quasi-unipotent U and the entropy formulas that
// depend only on the resulting chain structure.
//
// A chain of depth m is X_0..X_m with ad_U X_j = X_{j-1} and ad_U X_0 = 0.
// A double chain of depth m pairs two strings X_{j,0}, X_{j,1} on which the
// nilpotent part of ad_U shifts down and the compact part rotates:
//   ad_Q X_{j,0} = -alpha X_{j,1},   ad_Q X_{j,1} = alpha X_{j,0}.
// Zero-eigenvalue chains are computed exactly; double chains come from a
// complex floating eigensolve with clustering radius `tol`.

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "slowent/exact_linalg.hpp"

namespace slowent {

class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTol = 1e-9;

struct Chain {
  std::size_t depth = 0;
  std::vector<RatVec> vectors;  // X_0 .. X_depth, coordinates in the input basis
};

struct DoubleChain {
  std::size_t depth = 0;
  double alpha = 0.0;
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> vectors;  // (X_{j,0}, X_{j,1}), j = 0..depth
};

struct ChainBasis {
  std::vector<Chain> chains;
  std::vector<DoubleChain> doubles;

  std::size_t dimension() const;
};

/// Depths sorted descending with every double chain listed twice; the double
/// chains themselves are kept as (depth, alpha) pairs so rotation speeds stay
/// attached to their depths.
struct ChainStructure {
  std::vector<std::size_t> depths;
  std::vector<double> alphas;
  std::vector<std::size_t> double_depths;  // parallel to alphas

  /// Builds a canonical structure from plain chains and (depth, alpha) doubles.
  static ChainStructure from_parts(std::vector<std::size_t> chain_depths,
                                   std::vector<std::pair<std::size_t, double>> doubles);

  /// Depths of the plain chains only (the expanded list minus the doubles).
  std::vector<std::size_t> chain_depths() const;
  std::size_t dimension() const;
  std::size_t max_depth() const;

  friend bool operator==(const ChainStructure&, const ChainStructure&) = default;
};

struct QuasiUnipotence {
  enum class Path { exact, numeric };
  bool quasi_unipotent = false;
  Path path = Path::exact;
  /// Eigenvalue of the semisimple part with the largest |Re|, when rejected.
  std::optional<std::complex<double>> offending;
};

QuasiUnipotence is_quasi_unipotent(const RatMatrix& ad_u, double tol = kDefaultTol);

/// Throws ChainError when ad_u is not quasi-unipotent, and
/// ChainError("spectral clustering unstable, adjust tol") when two
/// eigenvalue clusters of the semisimple part lie within 2 tol.
ChainBasis chain_basis(const RatMatrix& ad_u, double tol = kDefaultTol);

/// Jordan chains of a nilpotent matrix, in the order they are discovered
/// (longest first). Tops are taken from the kernel bases of N^k in input
/// order.
std::vector<Chain> nilpotent_chains(const RatMatrix& nilpotent);

ChainStructure chain_structure(const ChainBasis& basis);

Rational slow_entropy(const ChainStructure& s);

/// R log(lambda); requires lambda > 1.
double sequence_entropy(const ChainStructure& s, double lambda);

enum class EntropyMethod { chain_basis, sl2_triple, closed_form };
std::string to_string(EntropyMethod m);

struct EntropyReport {
  Rational R;
  ChainStructure structure;
  EntropyMethod method = EntropyMethod::chain_basis;
};

EntropyReport analyze(const RatMatrix& ad_u, double tol = kDefaultTol);

/// Re-checks a chain basis against ad_U and its Jordan-Chevalley parts.
/// Chains must bottom out in the centralizer of U; double chains only in the
/// centralizer of the nilpotent part U'. A chain bottom that commutes with U'
/// but not with U (or a double-chain bottom that fails the U' condition) is
/// reported, not repaired.
struct ChainBasisCheck {
  bool relations_hold = true;
  bool spans_space = true;
  std::vector<std::string> issues;
  bool ok() const { return relations_hold && spans_space && issues.empty(); }
};

ChainBasisCheck verify_chain_basis(const RatMatrix& ad_u, const ChainBasis& basis, double tol = kDefaultTol);

/// Columns are the chain-basis vectors in a fixed order: each chain X_0..X_m,
/// then each double chain X_{0,0}..X_{m,0}, X_{0,1}..X_{m,1}.
Eigen::MatrixXd chain_basis_matrix(const ChainBasis& basis);

}  // namespace slowent
