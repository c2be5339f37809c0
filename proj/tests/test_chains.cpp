#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "slowent/chains.hpp"
#include "test_support.hpp"

using namespace slowent;
using Catch::Matchers::WithinAbs;
using slowent::testing::random_invertible;

namespace {

std::vector<RatMatrix> sl_basis(std::size_t d) {
  std::vector<RatMatrix> b;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) b.push_back(RatMatrix::unit(d, i, j));
  for (std::size_t i = 0; i + 1 < d; ++i) b.push_back(RatMatrix::unit(d, i, i) - RatMatrix::unit(d, i + 1, i + 1));
  return b;
}

std::vector<RatMatrix> gl_basis(std::size_t d) {
  std::vector<RatMatrix> b;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) b.push_back(RatMatrix::unit(d, i, j));
  return b;
}

RatMatrix shift(std::size_t n) {
  RatMatrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}

// J_{m+1} (x) I_2 + I (x) Q_alpha, acting on coordinates (x_0, y_0, x_1, y_1, ...).
RatMatrix rotating_block(std::size_t depth, const Rational& alpha) {
  const std::size_t n = 2 * (depth + 1);
  RatMatrix a(n, n);
  for (std::size_t j = 0; j <= depth; ++j) {
    a(2 * j, 2 * j + 1) = alpha;
    a(2 * j + 1, 2 * j) = -alpha;
    if (j < depth) {
      a(2 * j, 2 * j + 2) = 1;
      a(2 * j + 1, 2 * j + 3) = 1;
    }
  }
  return a;
}

RatMatrix conjugate(const RatMatrix& a, std::mt19937_64& rng) {
  const RatMatrix p = random_invertible(a.rows(), rng);
  return p * a * *inverse(p);
}

}  // namespace

TEST_CASE("is_quasi_unipotent examples") {
  const auto sl2 = sl_basis(2);
  const auto nil = is_quasi_unipotent(ad_operator(sl2, RatMatrix::unit(2, 0, 1)));
  CHECK(nil.quasi_unipotent);
  CHECK(nil.path == QuasiUnipotence::Path::exact);

  const auto hyp = is_quasi_unipotent(ad_operator(sl2, RatMatrix::diagonal({1, -1})));
  CHECK_FALSE(hyp.quasi_unipotent);
  REQUIRE(hyp.offending.has_value());
  CHECK_THAT(std::abs(hyp.offending->real()), WithinAbs(2.0, 1e-9));

  const RatMatrix rot = RatMatrix::from_rows({{0, 1}, {-1, 0}});
  const RatMatrix ad_rot = ad_operator(gl_basis(2), rot);
  CHECK(char_poly(ad_rot).coefficients == RatVec{0, 0, 4, 0, 1});
  const auto q = is_quasi_unipotent(ad_rot);
  CHECK(q.quasi_unipotent);
  CHECK(q.path == QuasiUnipotence::Path::numeric);
}

TEST_CASE("chain_basis examples") {
  const auto sl2 = sl_basis(2);
  const RatMatrix ad = ad_operator(sl2, RatMatrix::unit(2, 0, 1));
  const ChainBasis b = chain_basis(ad);
  REQUIRE(b.chains.size() == 1);
  CHECK(b.chains[0].depth == 2);
  CHECK(b.doubles.empty());
  CHECK(verify_chain_basis(ad, b).ok());

  const ChainBasis zero = chain_basis(RatMatrix(5, 5));
  CHECK(zero.chains.size() == 5);
  for (const Chain& c : zero.chains) CHECK(c.depth == 0);
}

TEST_CASE("chain_structure examples") {
  CHECK(chain_structure(chain_basis(ad_operator(sl_basis(2), RatMatrix::unit(2, 0, 1)))).depths ==
        std::vector<std::size_t>{2});
  const ChainStructure s3 = chain_structure(chain_basis(ad_operator(sl_basis(3), RatMatrix::unit(3, 0, 1))));
  CHECK(s3.depths == std::vector<std::size_t>{2, 1, 1, 0});
  CHECK(slow_entropy(s3) == 5);
  const std::vector<RatMatrix> abelian = {RatMatrix::unit(2, 0, 0), RatMatrix::unit(2, 1, 1)};
  CHECK(chain_structure(chain_basis(ad_operator(abelian, RatMatrix(2, 2)))).depths ==
        std::vector<std::size_t>{0, 0});
}

TEST_CASE("rotation generator gives a double chain") {
  const RatMatrix ad = ad_operator(gl_basis(2), RatMatrix::from_rows({{0, 1}, {-1, 0}}));
  const ChainBasis b = chain_basis(ad);
  CHECK(b.chains.size() == 2);
  REQUIRE(b.doubles.size() == 1);
  CHECK(b.doubles[0].depth == 0);
  CHECK_THAT(b.doubles[0].alpha, WithinAbs(2.0, 1e-12));
  const ChainStructure s = chain_structure(b);
  CHECK(s.depths == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(s.double_depths == std::vector<std::size_t>{0});
  CHECK(slow_entropy(s) == 0);
  CHECK(verify_chain_basis(ad, b).ok());
  // Orientation: first nonzero coordinate of X_{0,0} positive, X_{0,1} zero there.
  const auto& [x, y] = b.doubles[0].vectors[0];
  Eigen::Index lead = 0;
  while (std::abs(x(lead)) < 1e-9) ++lead;
  CHECK(x(lead) > 0);
  CHECK_THAT(y(lead), WithinAbs(0.0, 1e-12));
}

TEST_CASE("slow and sequence entropy") {
  CHECK(slow_entropy(ChainStructure{{2}, {}, {}}) == 3);
  CHECK(slow_entropy(ChainStructure{{2, 1, 1, 0}, {}, {}}) == 5);
  CHECK(slow_entropy(ChainStructure{{0, 0, 0}, {}, {}}) == 0);
  CHECK_THAT(sequence_entropy(ChainStructure{{2}, {}, {}}, std::exp(1.0)), WithinAbs(3.0, 1e-12));
  CHECK_THAT(sequence_entropy(ChainStructure{{2}, {}, {}}, 2.0), WithinAbs(3 * std::log(2.0), 1e-12));
  CHECK(sequence_entropy(ChainStructure{{0}, {}, {}}, 5.0) == 0.0);
  CHECK_THROWS(sequence_entropy(ChainStructure{{2}, {}, {}}, 1.0));
  CHECK_THROWS(sequence_entropy(ChainStructure{{2}, {}, {}}, 0.5));
}

TEST_CASE("analyze rejects non-quasi-unipotent input") {
  CHECK_THROWS_AS(analyze(ad_operator(sl_basis(2), RatMatrix::diagonal({1, -1}))), ChainError);
  const EntropyReport r = analyze(ad_operator(sl_basis(3), RatMatrix::unit(3, 0, 1)));
  CHECK(r.R == 5);
  CHECK(r.method == EntropyMethod::chain_basis);
}

TEST_CASE("structure survives conjugation by random invertible matrices") {
  std::mt19937_64 rng(31);
  const std::vector<RatMatrix> cases = {
      ad_operator(sl_basis(3), RatMatrix::unit(3, 0, 1)),
      ad_operator(sl_basis(3), RatMatrix::unit(3, 0, 1) + RatMatrix::unit(3, 1, 2)),
      block_diagonal({shift(3), rotating_block(1, 3), rotating_block(0, ratio(1, 2)), shift(1)}),
      block_diagonal({rotating_block(2, 1), rotating_block(2, 1), shift(2)}),
  };
  for (const RatMatrix& a : cases) {
    const ChainBasis base = chain_basis(a);
    const ChainStructure expected = chain_structure(base);
    CHECK(expected.dimension() == a.rows());
    CHECK(verify_chain_basis(a, base).ok());
    for (int trial = 0; trial < 3; ++trial) {
      const RatMatrix c = conjugate(a, rng);
      const ChainBasis b = chain_basis(c);
      const ChainStructure got = chain_structure(b);
      CHECK(got.depths == expected.depths);
      CHECK(got.double_depths == expected.double_depths);
      REQUIRE(got.alphas.size() == expected.alphas.size());
      for (std::size_t i = 0; i < got.alphas.size(); ++i) CHECK_THAT(got.alphas[i], WithinAbs(expected.alphas[i], 1e-9));
      CHECK(b.dimension() == c.rows());
      CHECK(verify_chain_basis(c, b).ok());
    }
  }
}

TEST_CASE("rotating blocks recover depths and speeds") {
  const RatMatrix a = block_diagonal({rotating_block(1, 3), rotating_block(0, ratio(1, 2)), shift(1)});
  const ChainStructure s = chain_structure(chain_basis(a));
  CHECK(s.depths == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(s.double_depths == std::vector<std::size_t>{1, 0});
  REQUIRE(s.alphas.size() == 2);
  CHECK_THAT(s.alphas[0], WithinAbs(3.0, 1e-9));
  CHECK_THAT(s.alphas[1], WithinAbs(0.5, 1e-9));
  CHECK(slow_entropy(s) == 2);
}

TEST_CASE("nearby speeds trigger the clustering error") {
  const RatMatrix a = block_diagonal({rotating_block(0, 1), rotating_block(0, 1 + ratio(15, 10) * Rational(1, 1000000000))});
  CHECK_THROWS_WITH(chain_basis(a, 1e-9), "spectral clustering unstable, adjust tol");
  CHECK_NOTHROW(chain_basis(a, 1e-6));
  CHECK(chain_structure(chain_basis(a, 1e-6)).alphas.size() == 2);
}

TEST_CASE("verify_chain_basis flags bottoms that only centralize U'") {
  // U = Q + U' on gl(2) with Q the rotation: a vector killed by ad_{U'} = 0 but not by ad_U.
  const RatMatrix ad = ad_operator(gl_basis(2), RatMatrix::from_rows({{0, 1}, {-1, 0}}));
  ChainBasis fake = chain_basis(ad);
  fake.chains[0].vectors[0] = RatVec{1, 0, 0, 0};  // E11 does not commute with the rotation
  const ChainBasisCheck check = verify_chain_basis(ad, fake);
  CHECK_FALSE(check.ok());
  CHECK_FALSE(check.issues.empty());
}
