#include "slowent/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "slowent/chains.hpp"

namespace slowent {

std::vector<RatMatrix> sl_basis(std::size_t d) {
  if (d < 2) throw ZooError("sl(d) needs d >= 2");
  std::vector<RatMatrix> b;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) b.push_back(RatMatrix::unit(d, i, j));
  for (std::size_t i = 0; i + 1 < d; ++i) b.push_back(RatMatrix::unit(d, i, i) - RatMatrix::unit(d, i + 1, i + 1));
  return b;
}

RatMatrix principal_nilpotent(std::size_t d) {
  RatMatrix u(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) u(i, i + 1) = 1;
  return u;
}

RatMatrix block_nilpotent(const BlockSequence& k) {
  validate_block_sequence(k);
  std::vector<RatMatrix> blocks;
  for (std::size_t b : k) blocks.push_back(principal_nilpotent(b));
  return block_diagonal(blocks);
}

Algebra sl_algebra(const BlockSequence& k) {
  const RatMatrix u = block_nilpotent(k);
  std::string name = "sl" + std::to_string(u.rows()) + "_blocks";
  for (std::size_t b : k) name += "_" + std::to_string(b);
  return {name, sl_basis(u.rows()), u};
}

RatMatrix heisenberg_element(const RatVec& x, const Rational& t) {
  const std::size_t d = x.size();
  RatMatrix m(d + 1, d + 1);
  for (std::size_t k = 1; k <= d; ++k) m(0, k) = x[k - 1];
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i + 1; j <= d; ++j) {
      const long dist = static_cast<long>(j - i);
      m(i, j) = t * ratio(dist % 2 ? 1 : -1, dist);
    }
  return m;
}

Algebra heisenberg_type(std::size_t d, const Rational& alpha) {
  // For d = 1 the t-generator vanishes and the family collapses to one dimension.
  if (d < 2) throw ZooError("heisenberg_type needs d >= 2");
  Algebra a;
  a.name = "heisenberg_type_" + std::to_string(d);
  for (std::size_t k = 1; k <= d; ++k) a.basis.push_back(RatMatrix::unit(d + 1, 0, k));
  a.basis.push_back(heisenberg_element(RatVec(d), 1));
  RatVec x(d);
  for (std::size_t k = 1; k <= d; ++k) x[k - 1] = alpha * ratio(k % 2 ? 1 : -1, static_cast<long>(k));
  a.U = heisenberg_element(x, 1);
  return a;
}

namespace {

std::vector<std::vector<std::size_t>> monomials(std::size_t vars, std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(vars, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == vars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace

RatMatrix sym_power_rep(const RatMatrix& a, std::size_t n) {
  if (!a.is_square() || a.rows() == 0) throw ZooError("sym_power_rep needs a square matrix");
  const std::size_t d = a.rows();
  const auto mons = monomials(d, n);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  RatMatrix r(mons.size(), mons.size());
  // sum_ij a_ij x_i d/dx_j applied to each monomial
  for (std::size_t col = 0; col < mons.size(); ++col)
    for (std::size_t j = 0; j < d; ++j) {
      if (mons[col][j] == 0) continue;
      for (std::size_t i = 0; i < d; ++i) {
        if (is_zero(a(i, j))) continue;
        std::vector<std::size_t> m = mons[col];
        --m[j];
        ++m[i];
        r(index.at(m), col) += a(i, j) * static_cast<unsigned long>(mons[col][j]);
      }
    }
  return r;
}

std::size_t parse_sym_power(std::string_view spec) {
  std::string_view digits;
  if (spec.substr(0, 4) == "Sym^") digits = spec.substr(4);
  else if (spec.substr(0, 3) == "sym") digits = spec.substr(3);
  if (digits.size() != 1 || digits[0] < '0' || digits[0] > '8')
    throw ZooError("unsupported representation: " + std::string(spec));
  return static_cast<std::size_t>(digits[0] - '0');
}

Algebra twisted_algebra(const BlockSequence& k, std::size_t sym_power) {
  if (sym_power > 8) throw ZooError("unsupported representation: Sym^" + std::to_string(sym_power));
  const RatMatrix u0 = block_nilpotent(k);
  const std::size_t d = u0.rows();
  if (d < 2) throw ZooError("twisted_algebra needs d >= 2");
  const std::size_t n_rep = sym_power_rep(RatMatrix(d, d), sym_power).rows();
  const std::size_t size = d + n_rep + 1;
  auto embed = [&](const RatMatrix& a) {
    RatMatrix m(size, size);
    const RatMatrix r = sym_power_rep(a, sym_power);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < n_rep; ++i)
      for (std::size_t j = 0; j < n_rep; ++j) m(d + i, d + j) = r(i, j);
    return m;
  };
  Algebra alg;
  alg.name = "twisted_sl" + std::to_string(d) + "_sym" + std::to_string(sym_power);
  for (const RatMatrix& b : sl_basis(d)) alg.basis.push_back(embed(b));
  for (std::size_t i = 0; i < n_rep; ++i) alg.basis.push_back(RatMatrix::unit(size, d + i, size - 1));
  alg.U = embed(u0);
  return alg;
}

Rational rational_approximation(double x, double tol) {
  if (!std::isfinite(x)) throw ZooError("cannot approximate a non-finite value");
  // Convergents p_k/q_k of the continued fraction of x.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest(x);
  for (int iter = 0; iter < 64; ++iter) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    const Rational approx = ratio(p1, q1);
    if (std::abs(approx.get_d() - x) <= tol) return approx;
    const Rational frac = rest - Rational(a);
    if (sgn(frac) == 0) return approx;
    rest = 1 / frac;
  }
  return Rational(x);
}

Algebra synthetic_from_structure(const std::vector<std::size_t>& depths,
                                 const std::vector<std::pair<std::size_t, double>>& doubles) {
  if (depths.empty() && doubles.empty()) throw ZooError("synthetic structure needs at least one chain");
  std::vector<RatMatrix> blocks;
  for (std::size_t m : depths) blocks.push_back(principal_nilpotent(m + 1));
  for (const auto& [m, alpha_d] : doubles) {
    if (!(alpha_d > 0)) throw ZooError("rotation speeds must be positive");
    const Rational alpha = rational_approximation(alpha_d);
    const std::size_t n = 2 * (m + 1);
    RatMatrix a(n, n);
    for (std::size_t j = 0; j <= m; ++j) {
      a(2 * j, 2 * j + 1) = alpha;
      a(2 * j + 1, 2 * j) = -alpha;
      if (j < m) {
        a(2 * j, 2 * j + 2) = 1;
        a(2 * j + 1, 2 * j + 3) = 1;
      }
    }
    blocks.push_back(a);
  }
  const RatMatrix a = block_diagonal(blocks);
  const std::size_t n = a.rows();
  Algebra alg;
  alg.name = "synthetic";
  for (std::size_t i = 0; i < n; ++i) alg.basis.push_back(RatMatrix::unit(n + 1, i, n));
  alg.U = RatMatrix(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) alg.U(i, j) = a(i, j);
  return alg;
}

RatMatrix nilpotent_exp(const RatMatrix& n) {
  const auto index = nilpotency_index(n);
  if (!index) throw ZooError("nilpotent_exp needs a nilpotent matrix");
  RatMatrix sum = RatMatrix::identity(n.rows());
  RatMatrix term = RatMatrix::identity(n.rows());
  for (std::size_t k = 1; k < *index; ++k) {
    term = term * n * ratio(1, static_cast<long>(k));
    sum += term;
  }
  return sum;
}

bool is_bracket_closed(const std::vector<RatMatrix>& basis) {
  const BasisCoordinates coords(basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!coords.coordinates(bracket(basis[i], basis[j]))) return false;
  return true;
}

std::vector<std::size_t> jordan_lengths(const RatMatrix& nilpotent) {
  std::vector<std::size_t> out;
  for (const Chain& c : nilpotent_chains(nilpotent)) out.push_back(c.depth + 1);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace slowent
