#include <catch_amalgamated.hpp>

#include <random>

#include "slowent/exact_linalg.hpp"
#include "test_support.hpp"

using namespace slowent;
using slowent::testing::random_matrix;
using slowent::testing::random_invertible;

namespace {

RatMatrix diag2(long a, long b) { return RatMatrix::diagonal({Rational(a), Rational(b)}); }

std::vector<RatMatrix> sl2_basis() {
  return {RatMatrix::unit(2, 0, 1), diag2(1, -1), RatMatrix::unit(2, 1, 0)};
}

}  // namespace

TEST_CASE("rationals serialize as p/q") {
  CHECK(to_string(ratio(3, 6)) == "1/2");
  CHECK(to_string(ratio(-4, 2)) == "-2");
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-2.5e-1") == Rational(-1, 4));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("bracket") {
  const RatMatrix e12 = RatMatrix::unit(2, 0, 1), e21 = RatMatrix::unit(2, 1, 0);
  CHECK(bracket(e12, e21) == diag2(1, -1));
  const RatMatrix a = RatMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(bracket(a, a).is_zero());
  CHECK(bracket(e12, diag2(1, -1)) == e12 * Rational(-2));
  CHECK_THROWS_AS(bracket(e12, RatMatrix::identity(3)), LinalgError);
}

TEST_CASE("ad_operator on sl(2)") {
  const auto basis = sl2_basis();
  const RatMatrix ad = ad_operator(basis, basis[0]);
  // [U,U]=0, [U,X]=-2U, [U,V]=X, column by column
  CHECK(ad == RatMatrix::from_rows({{0, -2, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(ad_operator(basis, RatMatrix(2, 2)).is_zero());

  const std::vector<RatMatrix> abelian = {diag2(1, 0), diag2(0, 1)};
  CHECK(ad_operator(abelian, diag2(3, -5)).is_zero());

  SECTION("errors") {
    CHECK_THROWS_WITH(ad_operator({RatMatrix::unit(2, 0, 1)}, RatMatrix::unit(2, 1, 0)), "not bracket-closed");
    CHECK_THROWS_WITH(ad_operator({diag2(1, 0), diag2(2, 0)}, diag2(1, 1)), "dependent basis");
  }
}

TEST_CASE("nilpotency_index") {
  const RatMatrix j3 = RatMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(nilpotency_index(j3) == std::optional<std::size_t>(3));
  CHECK(nilpotency_index(RatMatrix(4, 4)) == std::optional<std::size_t>(1));
  CHECK_FALSE(nilpotency_index(diag2(1, -1)).has_value());
}

TEST_CASE("char_poly") {
  CHECK(char_poly(diag2(1, -1)).coefficients == RatVec{-1, 0, 1});
  CHECK(char_poly(RatMatrix::from_rows({{0, 1}, {-1, 0}})).coefficients == RatVec{1, 0, 1});
  const RatMatrix ad = ad_operator(sl2_basis(), RatMatrix::unit(2, 0, 1));
  CHECK(char_poly(ad).coefficients == RatVec{0, 0, 0, 1});
  // Companion-style matrix needing row swaps during the Hessenberg reduction.
  const RatMatrix m = RatMatrix::from_rows({{2, 0, 0, 1}, {0, 0, 0, 3}, {1, 0, 0, 0}, {0, 5, 1, 0}});
  const CharPoly cp = char_poly(m);
  CHECK(poly::evaluate(cp, m).is_zero());
  CHECK(cp.coefficients.back() == 1);
}

TEST_CASE("jordan_chevalley examples") {
  const RatMatrix j3 = RatMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto [s1, n1] = jordan_chevalley(j3);
  CHECK(s1.is_zero());
  CHECK(n1 == j3);

  const RatMatrix d = RatMatrix::from_rows({{1, 2}, {0, 3}});
  auto [s2, n2] = jordan_chevalley(d);
  CHECK(s2 == d);
  CHECK(n2.is_zero());

  // Rotation blocks coupled by a nilpotent shift, then conjugated.
  const RatMatrix rot = RatMatrix::from_rows({{0, 1}, {-1, 0}});
  const RatMatrix s0 = block_diagonal({rot, rot});
  const RatMatrix n0 = RatMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  REQUIRE(s0 * n0 == n0 * s0);
  std::mt19937_64 rng(11);
  const RatMatrix p = random_invertible(4, rng);
  const RatMatrix pinv = *inverse(p);
  auto [s3, n3] = jordan_chevalley(p * (s0 + n0) * pinv);
  CHECK(s3 == p * s0 * pinv);
  CHECK(n3 == p * n0 * pinv);

  const RatMatrix s4 = RatMatrix::diagonal({2, 2, 3});
  const RatMatrix n4 = RatMatrix::unit(3, 0, 1);
  auto [s5, n5] = jordan_chevalley(s4 + n4);
  CHECK(s5 == s4);
  CHECK(n5 == n4);
}

TEST_CASE("elimination helpers") {
  const RatMatrix m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(m * ker[0]));
  CHECK_FALSE(solve(m, RatVec{1, 0, 0}).has_value());
  auto x = solve(m, RatVec{1, 2, 1});
  REQUIRE(x.has_value());
  CHECK(m * *x == RatVec{1, 2, 1});
  CHECK_FALSE(inverse(m).has_value());
  const RatMatrix a = RatMatrix::from_rows({{2, 1}, {7, 4}});
  CHECK(*inverse(a) * a == RatMatrix::identity(2));

  IncrementalSpan span(3);
  CHECK(span.add({1, 1, 0}));
  CHECK(span.add({0, 1, 1}));
  CHECK_FALSE(span.add({1, 2, 1}));
  CHECK(span.contains({2, 0, -2}));
  CHECK_FALSE(span.contains({0, 0, 1}));
}

TEST_CASE("bracket antisymmetry and Jacobi identity on random triples") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RatMatrix a = random_matrix(n, n, rng), b = random_matrix(n, n, rng), c = random_matrix(n, n, rng);
    CHECK(bracket(a, b) == -bracket(b, a));
    const RatMatrix jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("ad_operator is linear in u") {
  std::mt19937_64 rng(7);
  // gl(3) is bracket-closed for any u.
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) basis.push_back(RatMatrix::unit(3, i, j));
  const BasisCoordinates coords(basis);
  for (int trial = 0; trial < 10; ++trial) {
    const RatMatrix u = random_matrix(3, 3, rng), v = random_matrix(3, 3, rng);
    const Rational alpha = ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    const Rational beta = ratio(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    CHECK(ad_operator(coords, alpha * u + beta * v) == alpha * ad_operator(coords, u) + beta * ad_operator(coords, v));
  }
}

TEST_CASE("Cayley-Hamilton and Jordan-Chevalley invariants on random matrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RatMatrix m = random_matrix(n, n, rng);
    CHECK(poly::evaluate(char_poly(m), m).is_zero());
  }
  // Inputs with repeated eigenvalues and nontrivial nilpotent parts.
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 4;
    RatMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) t(i, i) = static_cast<long>(rng() % 2);
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (t(i, i) == t(i + 1, i + 1)) t(i, i + 1) = static_cast<long>(rng() % 2);
    const RatMatrix p = random_invertible(n, rng);
    const RatMatrix m = p * t * *inverse(p);
    auto [s, nil] = jordan_chevalley(m);
    CHECK(s + nil == m);
    CHECK(s * nil == nil * s);
    CHECK(nilpotency_index(nil).has_value());
    // S is diagonalizable: its minimal polynomial is square-free.
    CHECK(poly::evaluate(poly::squarefree_part(char_poly(s)), s).is_zero());
  }
}
