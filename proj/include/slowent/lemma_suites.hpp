#pragma once

// Randomized checks of the polynomial lemmas behind the Bowen-ball estimates,
// shared by the CLI and the acceptance run. Every instance is drawn from
// CounterRng(seed, stream, trial), so results do not depend on thread count.

#include <cstddef>
#include <cstdint>

#include "slowent/dynamics.hpp"

namespace slowent {

struct SuiteSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // instances outside the lemma's hypotheses
  double worst = 0.0;       // largest lhs/rhs, or largest visit fraction
};

/// Random polynomials of degree <= max_degree, intervals V and unions omega of
/// one to three subintervals of V.
SuiteSummary brudnyi_suite(std::size_t trials, std::size_t max_degree, std::uint64_t seed);

/// Random structures, epsilon and T: inner-box points (corners and interior)
/// must lie in the Bowen ball and ball points sampled from an enlarged outer
/// box must lie in the outer box. `probes` points per box and per side.
SuiteSummary box_containment_suite(std::size_t boxes, std::size_t probes, std::uint64_t seed);

/// Displacements uniform in the open eta-ball; a failure is a visit fraction
/// of at least 1/10 with c = shearing_constant(s). Displacements that never
/// separate count as skipped.
SuiteSummary shearing_suite(const ChainStructure& s, std::size_t trials, double eta, std::uint64_t seed);

}  // namespace slowent
