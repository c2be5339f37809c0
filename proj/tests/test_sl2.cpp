#include <catch_amalgamated.hpp>

#include <algorithm>

#include "slowent/chains.hpp"
#include "slowent/closed_forms.hpp"
#include "slowent/sl2.hpp"
#include "slowent/zoo.hpp"

using namespace slowent;

TEST_CASE("principal_triple examples") {
  const Sl2Triple t2 = principal_triple(2);
  CHECK(t2.X == RatMatrix::diagonal({1, -1}));
  CHECK(t2.V == RatMatrix::unit(2, 1, 0));
  CHECK(t2.Uprime == RatMatrix::unit(2, 0, 1));
  const Sl2Triple t3 = principal_triple(3);
  CHECK(t3.X == RatMatrix::diagonal({2, 0, -2}));
  CHECK(t3.V == RatMatrix::from_rows({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}}));
  for (std::size_t d = 2; d <= 8; ++d) CHECK(principal_triple(d).relations_hold());
  CHECK_THROWS_AS(principal_triple(1), Sl2Error);
}

TEST_CASE("block_triple") {
  const Sl2Triple t = block_triple({2, 1});
  CHECK(t.X == RatMatrix::diagonal({1, -1, 0}));
  CHECK(t.Uprime == RatMatrix::unit(3, 0, 1));
  CHECK(block_triple({4}).X == principal_triple(4).X);
  for (std::size_t d = 1; d <= 6; ++d)
    for (const auto& p : partitions(d)) CHECK(block_triple(p).relations_hold());
}

TEST_CASE("centralizer examples") {
  CHECK(centralizer(sl_basis(2), RatMatrix::unit(2, 0, 1)).size() == 1);
  CHECK(centralizer(sl_basis(3), RatMatrix::unit(3, 0, 1)).size() == 4);
  CHECK(centralizer(sl_basis(3), RatMatrix(3, 3)).size() == 8);
}

TEST_CASE("entropy_via_triple examples") {
  const TripleEntropy e2 = entropy_via_triple(sl_basis(2), principal_triple(2));
  CHECK(e2.spectrum.d_n == std::map<long, std::size_t>{{2, 1}});
  CHECK(e2.R == 3);
  const TripleEntropy e3 = entropy_via_triple(sl_basis(3), principal_triple(3));
  CHECK(e3.spectrum.d_n == std::map<long, std::size_t>{{2, 1}, {4, 1}});
  CHECK(e3.R == 13);
  const TripleEntropy e21 = entropy_via_triple(sl_basis(3), block_triple({1, 2}));
  CHECK(e21.spectrum.d_n == std::map<long, std::size_t>{{0, 1}, {1, 2}, {2, 1}});
  CHECK(e21.R == 5);
}

TEST_CASE("a broken triple is rejected") {
  Sl2Triple t = principal_triple(3);
  t.X = t.X * Rational(2);
  CHECK_THROWS_WITH(entropy_via_triple(sl_basis(3), t), "triple invalid for this algebra");
}

TEST_CASE("three routes agree for block sequences up to total 6") {
  for (std::size_t d = 2; d <= 6; ++d)
    for (const auto& k : partitions(d)) {
      const Algebra alg = sl_algebra(k);
      const ChainStructure s = chain_structure(chain_basis(alg.ad_u()));
      const TripleEntropy te = entropy_via_triple(alg.basis, block_triple(k));
      CHECK(slow_entropy(s) == r_block_sequence(k));
      CHECK(te.R == r_block_sequence(k));
      // Each n-eigenvector of ad_X on C(U) heads a depth-n chain.
      std::vector<std::size_t> from_triple;
      for (const auto& [n, mult] : te.spectrum.d_n) from_triple.insert(from_triple.end(), mult, static_cast<std::size_t>(n));
      std::sort(from_triple.begin(), from_triple.end(), std::greater<>());
      CHECK(from_triple == s.depths);
    }
}

TEST_CASE("ad_X preserves the centralizer") {
  for (const auto& k : partitions(5)) {
    const Algebra alg = sl_algebra(k);
    const Sl2Triple t = block_triple(k);
    const BasisCoordinates coords(alg.basis);
    IncrementalSpan span(coords.dim());
    const auto cent = centralizer(alg.basis, t.Uprime);
    for (const RatVec& c : cent) span.add(c);
    for (const RatVec& c : cent) CHECK(span.contains(*coords.coordinates(bracket(t.X, coords.element(c)))));
  }
}

TEST_CASE("Jacobson-Morozov fallback") {
  for (const auto& k : partitions(4)) {
    const Algebra alg = sl_algebra(k);
    if (alg.U.is_zero()) continue;
    const Sl2Triple t = jacobson_morozov(alg.basis, alg.U);
    CHECK(t.relations_hold());
    CHECK(entropy_via_triple(alg.basis, t).R == r_block_sequence(k));
  }
  // No triple for a nonzero central nilpotent: the Heisenberg algebra.
  const std::vector<RatMatrix> heis = {RatMatrix::unit(3, 0, 1), RatMatrix::unit(3, 1, 2), RatMatrix::unit(3, 0, 2)};
  CHECK_THROWS_AS(jacobson_morozov(heis, RatMatrix::unit(3, 0, 1)), Sl2Error);
}
