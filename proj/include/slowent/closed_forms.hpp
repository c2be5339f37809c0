#pragma once

// Closed-form slow-entropy exponents for the standard examples: block
// nilpotents in sl(d), the affine-torus nilmanifold, and the twisted
// semidirect products. Used as oracles against the chain and sl(2) routes.

#include <cstddef>
#include <vector>

#include "slowent/rational.hpp"

namespace slowent {

/// Sizes of the Jordan blocks of a nilpotent in sl(d), nondecreasing, each >= 1.
using BlockSequence = std::vector<std::size_t>;

/// Throws std::invalid_argument unless k is nonempty, nondecreasing, all >= 1.
void validate_block_sequence(const BlockSequence& k);

/// sum_i k_i(4k_i+1)(k_i-1)/6 + sum_{i<j} k_i(k_i^2 + 3k_j^2 - 3k_j - 1)/3.
/// Unsorted input is rejected, never sorted.
Rational r_block_sequence(const BlockSequence& k);

/// d(d-1)/2; d >= 1.
Rational r_nilpotent_example(std::size_t d);

/// r_block_sequence(k) + sum l(l-1)/2 over the Jordan lengths of the twist.
Rational r_twisted(const BlockSequence& k, const std::vector<std::size_t>& jordan_lengths);

/// All nondecreasing block sequences with the given total.
std::vector<BlockSequence> partitions(std::size_t total);

}  // namespace slowent
