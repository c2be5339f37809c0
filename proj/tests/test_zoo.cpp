#include <catch_amalgamated.hpp>

#include <cmath>

#include "slowent/chains.hpp"
#include "slowent/closed_forms.hpp"
#include "slowent/zoo.hpp"

using namespace slowent;
using Catch::Matchers::WithinAbs;

TEST_CASE("sl_basis") {
  CHECK(sl_basis(2).size() == 3);
  CHECK(sl_basis(3).size() == 8);
  for (std::size_t d = 2; d <= 5; ++d) CHECK(is_bracket_closed(sl_basis(d)));
}

TEST_CASE("block nilpotents") {
  CHECK(principal_nilpotent(2) == RatMatrix::unit(2, 0, 1));
  CHECK(block_nilpotent({1, 2}) == RatMatrix::unit(3, 1, 2));
  CHECK(nilpotency_index(block_nilpotent({1, 2, 4})) == std::optional<std::size_t>(4));
}

TEST_CASE("heisenberg_type") {
  CHECK_THROWS_AS(heisenberg_type(1, 1), ZooError);
  for (std::size_t d = 2; d <= 6; ++d) {
    const Algebra a = heisenberg_type(d, ratio(1, 3));
    CHECK(a.basis.size() == d + 1);
    CHECK(is_bracket_closed(a.basis));
    const RatMatrix ad = a.ad_u();
    CHECK(nilpotency_index(ad) == std::optional<std::size_t>(d));
    const ChainStructure s = chain_structure(chain_basis(ad));
    CHECK(s.depths == std::vector<std::size_t>{d - 1, 0});
    CHECK(slow_entropy(s) == r_nilpotent_example(d));
  }
  CHECK(chain_structure(chain_basis(heisenberg_type(2, 1).ad_u())).depths == std::vector<std::size_t>{1, 0});
  CHECK(chain_structure(chain_basis(heisenberg_type(3, 1).ad_u())).depths == std::vector<std::size_t>{2, 0});
}

TEST_CASE("exp of the t-generator is an integer matrix with a unit superdiagonal") {
  for (std::size_t d = 1; d <= 7; ++d) {
    const RatMatrix g = nilpotent_exp(heisenberg_element(RatVec(d), 1));
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j <= d; ++j) {
        long expected = (i == j) || (i >= 1 && j == i + 1) ? 1 : 0;
        CHECK(g(i, j) == expected);
      }
  }
  CHECK_THROWS_AS(nilpotent_exp(RatMatrix::identity(2)), ZooError);
}

TEST_CASE("symmetric powers") {
  const RatMatrix e = RatMatrix::unit(2, 0, 1);
  CHECK(sym_power_rep(e, 0).rows() == 1);
  CHECK(jordan_lengths(sym_power_rep(e, 2)) == std::vector<std::size_t>{3});
  CHECK(jordan_lengths(sym_power_rep(e, 4)) == std::vector<std::size_t>{5});
  CHECK(sym_power_rep(RatMatrix::unit(3, 0, 2), 2).rows() == 6);
  // Lie homomorphism on sl(3).
  const auto basis = sl_basis(3);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        CHECK(sym_power_rep(bracket(basis[i], basis[j]), n) ==
              bracket(sym_power_rep(basis[i], n), sym_power_rep(basis[j], n)));
  CHECK(parse_sym_power("Sym^3") == 3);
  CHECK(parse_sym_power("sym0") == 0);
  CHECK_THROWS_AS(parse_sym_power("adjoint"), ZooError);
  CHECK_THROWS_AS(parse_sym_power("sym9"), ZooError);
}

TEST_CASE("twisted algebras") {
  const Rational expected[] = {3, 4, 6, 9, 13};
  for (std::size_t n = 0; n <= 4; ++n) {
    const Algebra a = twisted_algebra({2}, n);
    CHECK(is_bracket_closed(a.basis));
    const Rational r = slow_entropy(chain_structure(chain_basis(a.ad_u())));
    CHECK(r == expected[n]);
    CHECK(r == r_twisted({2}, jordan_lengths(sym_power_rep(principal_nilpotent(2), n))));
  }
  // Factoring onto sl(d): the leading block of ad_U is ad_U on sl(d).
  const Algebra a = twisted_algebra({1, 2}, 2);
  const RatMatrix ad = a.ad_u();
  const RatMatrix ad_ss = ad_operator(sl_basis(3), block_nilpotent({1, 2}));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(ad(i, j) == ad_ss(i, j));
  for (std::size_t i = 8; i < ad.rows(); ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(is_zero(ad(i, j)));
  CHECK(slow_entropy(chain_structure(chain_basis(ad))) ==
        r_twisted({1, 2}, jordan_lengths(sym_power_rep(block_nilpotent({1, 2}), 2))));
}

TEST_CASE("synthetic round trips") {
  const auto check = [](std::vector<std::size_t> depths, std::vector<std::pair<std::size_t, double>> doubles) {
    const Algebra a = synthetic_from_structure(depths, doubles);
    CHECK(is_bracket_closed(a.basis));
    const ChainStructure got = chain_structure(chain_basis(a.ad_u()));
    const ChainStructure want = ChainStructure::from_parts(depths, doubles);
    CHECK(got.depths == want.depths);
    CHECK(got.double_depths == want.double_depths);
    REQUIRE(got.alphas.size() == want.alphas.size());
    for (std::size_t i = 0; i < got.alphas.size(); ++i) CHECK_THAT(got.alphas[i], WithinAbs(want.alphas[i], 1e-9));
  };
  check({2}, {});
  check({}, {{1, 1.0}});
  check({3, 1, 0}, {{2, 0.5}});
  check({1}, {{0, std::sqrt(2.0)}, {1, M_PI}, {1, 0.25}});
}

TEST_CASE("rational_approximation") {
  CHECK(rational_approximation(0.5) == ratio(1, 2));
  CHECK(rational_approximation(-0.75) == ratio(-3, 4));
  CHECK(std::abs(rational_approximation(M_PI).get_d() - M_PI) <= 1e-12);
  CHECK(rational_approximation(M_PI, 2e-3) == ratio(22, 7));
}
