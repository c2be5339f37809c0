#include "slowent/chains.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace slowent {

namespace {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

RatMatrix columns_of(const std::vector<RatVec>& vs, std::size_t rows) { return RatMatrix::from_columns(vs, rows); }

// Orthonormal basis of the numerical null space of m.
CMat null_space(const CMat& m, double threshold) {
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

struct NumericChain {
  std::size_t depth;
  std::vector<CVec> vectors;  // X_0 .. X_depth
};

// Jordan chains of a numerically nilpotent complex matrix. Same level-by-level
// construction as the exact version, with orthogonal complements in place of
// pivot choices.
std::vector<NumericChain> numeric_nilpotent_chains(const CMat& m) {
  const Eigen::Index r = m.rows();
  if (r == 0) return {};
  const double scale = std::max(1.0, m.norm());
  std::vector<CMat> kernels{CMat(r, 0)};
  CMat pk = CMat::Identity(r, r);
  double thr = 1e-8;
  while (kernels.back().cols() < r) {
    pk = m * pk;
    thr *= scale;
    kernels.push_back(null_space(pk, thr));
    if (kernels.size() > static_cast<std::size_t>(r) + 1) throw ChainError("spectral clustering unstable, adjust tol");
  }
  const std::size_t p = kernels.size() - 1;

  std::vector<NumericChain> chains;
  std::vector<std::pair<std::size_t, CVec>> level;  // (chain index, vector at the current level)
  std::vector<std::vector<CVec>> topdown;
  for (std::size_t k = p; k >= 1; --k) {
    const Eigen::Index have = kernels[k - 1].cols() + static_cast<Eigen::Index>(level.size());
    const Eigen::Index want = kernels[k].cols() - have;
    if (want < 0) throw ChainError("spectral clustering unstable, adjust tol");
    if (want > 0) {
      CMat spanned(r, have);
      spanned.leftCols(kernels[k - 1].cols()) = kernels[k - 1];
      for (std::size_t i = 0; i < level.size(); ++i) spanned.col(kernels[k - 1].cols() + i) = level[i].second;
      CMat w = kernels[k];
      if (have > 0) {
        Eigen::JacobiSVD<CMat> svd(spanned, Eigen::ComputeThinU);
        const CMat q = svd.matrixU();
        w -= q * (q.adjoint() * w);
      }
      Eigen::JacobiSVD<CMat> svd(w, Eigen::ComputeThinU);
      for (Eigen::Index i = 0; i < want; ++i) {
        level.emplace_back(topdown.size(), svd.matrixU().col(i));
        topdown.emplace_back();
        chains.push_back({k - 1, {}});
      }
    }
    for (auto& [idx, v] : level) {
      topdown[idx].push_back(v);
      v = m * v;
    }
  }
  for (std::size_t i = 0; i < chains.size(); ++i) {
    chains[i].vectors.assign(topdown[i].rbegin(), topdown[i].rend());
  }
  return chains;
}

struct Cluster {
  double alpha;
  std::size_t multiplicity;
};

std::vector<Cluster> cluster_rotation_speeds(std::vector<double> speeds, double tol) {
  std::sort(speeds.begin(), speeds.end());
  std::vector<Cluster> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= speeds.size(); ++i) {
    if (i < speeds.size()) {
      const double gap = speeds[i] - speeds[i - 1];
      if (gap <= tol) continue;
      if (gap <= 2 * tol) throw ChainError("spectral clustering unstable, adjust tol");
    }
    out.push_back({0.0, i - start});
    start = i;
  }
  return out;
}

std::vector<DoubleChain> rotational_chains(const RatMatrix& s, const RatMatrix& n, const RatMatrix& image_basis,
                                           double tol) {
  const RatMatrix a = restrict_to_subspace(s, image_basis);
  const RatMatrix b = restrict_to_subspace(n, image_basis);
  const Eigen::MatrixXd ad = a.to_double();
  const CMat bc = b.to_double().cast<std::complex<double>>();
  const CMat lift = image_basis.to_double().cast<std::complex<double>>();
  const Eigen::Index dim = ad.rows();

  Eigen::EigenSolver<Eigen::MatrixXd> es(ad, false);
  std::vector<double> speeds;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double im = es.eigenvalues()(i).imag();
    if (im > 0) speeds.push_back(im);
  }
  if (2 * speeds.size() != static_cast<std::size_t>(dim)) throw ChainError("spectral clustering unstable, adjust tol");

  std::sort(speeds.begin(), speeds.end());
  std::vector<Cluster> clusters = cluster_rotation_speeds(speeds, tol);

  std::vector<DoubleChain> out;
  std::size_t offset = 0;
  for (Cluster& c : clusters) {
    const double guess = std::accumulate(speeds.begin() + offset, speeds.begin() + offset + c.multiplicity, 0.0) /
                         static_cast<double>(c.multiplicity);
    offset += c.multiplicity;
    const CMat shifted = ad.cast<std::complex<double>>() - std::complex<double>(0, guess) * CMat::Identity(dim, dim);
    Eigen::JacobiSVD<CMat> svd(shifted, Eigen::ComputeFullV);
    const CMat e = svd.matrixV().rightCols(c.multiplicity);
    // Rayleigh quotient on the whole cluster is more accurate than the eigensolver.
    c.alpha = (e.adjoint() * ad.cast<std::complex<double>>() * e).trace().imag() / static_cast<double>(c.multiplicity);
    const CMat m = e.adjoint() * bc * e;

    for (NumericChain& ch : numeric_nilpotent_chains(m)) {
      std::vector<CVec> z;
      for (const CVec& v : ch.vectors) z.push_back(lift * (e * v));
      // Phase: first non-negligible coordinate of the bottom vector real and positive.
      const double bottom_norm = z[0].norm();
      Eigen::Index lead = 0;
      while (std::abs(z[0](lead)) <= 1e-6 * bottom_norm) ++lead;
      const std::complex<double> phase = std::conj(z[0](lead)) / std::abs(z[0](lead)) / bottom_norm;
      DoubleChain dc;
      dc.depth = ch.depth;
      dc.alpha = c.alpha;
      for (const CVec& v : z) {
        const CVec w = v * phase;
        dc.vectors.emplace_back(w.real(), w.imag());
      }
      out.push_back(std::move(dc));
    }
  }
  return out;
}

double residual_scale(const Eigen::MatrixXd& op, double x) { return (1.0 + op.norm()) * std::max(1.0, x); }

}  // namespace

std::size_t ChainBasis::dimension() const {
  std::size_t d = 0;
  for (const Chain& c : chains) d += c.depth + 1;
  for (const DoubleChain& c : doubles) d += 2 * (c.depth + 1);
  return d;
}

ChainStructure ChainStructure::from_parts(std::vector<std::size_t> chain_depths,
                                          std::vector<std::pair<std::size_t, double>> doubles) {
  ChainStructure s;
  s.depths = std::move(chain_depths);
  std::sort(doubles.begin(), doubles.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  for (const auto& [depth, alpha] : doubles) {
    s.depths.push_back(depth);
    s.depths.push_back(depth);
    s.double_depths.push_back(depth);
    s.alphas.push_back(alpha);
  }
  std::sort(s.depths.begin(), s.depths.end(), std::greater<>());
  return s;
}

std::vector<std::size_t> ChainStructure::chain_depths() const {
  std::vector<std::size_t> rest = depths;
  for (std::size_t d : double_depths)
    for (int twice = 0; twice < 2; ++twice) rest.erase(std::find(rest.begin(), rest.end(), d));
  return rest;
}

std::size_t ChainStructure::dimension() const {
  std::size_t d = 0;
  for (std::size_t m : depths) d += m + 1;
  return d;
}

std::size_t ChainStructure::max_depth() const { return depths.empty() ? 0 : depths.front(); }

QuasiUnipotence is_quasi_unipotent(const RatMatrix& ad_u, double tol) {
  if (!ad_u.is_square()) throw LinalgError("ad_u must be square");
  const JordanChevalley jc = jordan_chevalley(ad_u);
  QuasiUnipotence q;
  if (jc.semisimple.is_zero()) {
    q.quasi_unipotent = true;
    q.path = QuasiUnipotence::Path::exact;
    return q;
  }
  q.path = QuasiUnipotence::Path::numeric;
  Eigen::EigenSolver<Eigen::MatrixXd> es(jc.semisimple.to_double(), false);
  double worst = -1;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const std::complex<double> ev = es.eigenvalues()(i);
    if (std::abs(ev.real()) > worst) {
      worst = std::abs(ev.real());
      q.offending = ev;
    }
  }
  q.quasi_unipotent = worst < tol;
  if (q.quasi_unipotent) q.offending.reset();
  return q;
}

std::vector<Chain> nilpotent_chains(const RatMatrix& nilpotent) {
  const std::size_t n = nilpotent.rows();
  if (n == 0) return {};
  const auto index = nilpotency_index(nilpotent);
  if (!index) throw LinalgError("matrix is not nilpotent");
  const std::size_t p = *index;

  std::vector<std::vector<RatVec>> kernels{{}};
  RatMatrix pk = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= p; ++k) {
    pk = nilpotent * pk;
    kernels.push_back(kernel(pk));
  }

  std::vector<std::vector<RatVec>> topdown;
  std::vector<std::size_t> depth;
  std::vector<std::pair<std::size_t, RatVec>> level;
  for (std::size_t k = p; k >= 1; --k) {
    IncrementalSpan span(n);
    for (const RatVec& v : kernels[k - 1]) span.add(v);
    for (const auto& entry : level)
      if (!span.add(entry.second)) throw LinalgError("chain images became dependent");
    for (const RatVec& w : kernels[k]) {
      if (span.size() == kernels[k].size()) break;
      if (span.add(w)) {
        level.emplace_back(topdown.size(), w);
        topdown.emplace_back();
        depth.push_back(k - 1);
      }
    }
    for (auto& [idx, v] : level) {
      topdown[idx].push_back(v);
      v = nilpotent * v;
    }
  }

  std::vector<Chain> chains;
  for (std::size_t i = 0; i < topdown.size(); ++i)
    chains.push_back({depth[i], std::vector<RatVec>(topdown[i].rbegin(), topdown[i].rend())});
  return chains;
}

ChainBasis chain_basis(const RatMatrix& ad_u, double tol) {
  const QuasiUnipotence q = is_quasi_unipotent(ad_u, tol);
  if (!q.quasi_unipotent) throw ChainError("not quasi-unipotent");
  const std::size_t n = ad_u.rows();
  const JordanChevalley jc = jordan_chevalley(ad_u);
  ChainBasis out;
  if (jc.semisimple.is_zero()) {
    out.chains = nilpotent_chains(jc.nilpotent);
    return out;
  }

  // ker S carries the honest chains; N preserves it because SN = NS.
  const std::vector<RatVec> ker = kernel(jc.semisimple);
  if (!ker.empty()) {
    const RatMatrix k = columns_of(ker, n);
    for (Chain& c : nilpotent_chains(restrict_to_subspace(jc.nilpotent, k))) {
      for (RatVec& v : c.vectors) v = k * v;
      out.chains.push_back(std::move(c));
    }
  }

  std::vector<RatVec> image;
  for (std::size_t j : independent_columns(jc.semisimple)) image.push_back(jc.semisimple.column(j));
  out.doubles = rotational_chains(jc.semisimple, jc.nilpotent, columns_of(image, n), tol);
  if (out.dimension() != n) throw ChainError("spectral clustering unstable, adjust tol");
  return out;
}

ChainStructure chain_structure(const ChainBasis& basis) {
  std::vector<std::size_t> chain_depths;
  for (const Chain& c : basis.chains) chain_depths.push_back(c.depth);
  std::vector<std::pair<std::size_t, double>> doubles;
  for (const DoubleChain& c : basis.doubles) doubles.emplace_back(c.depth, c.alpha);
  return ChainStructure::from_parts(std::move(chain_depths), std::move(doubles));
}

Rational slow_entropy(const ChainStructure& s) {
  Rational r = 0;
  for (std::size_t m : s.depths) r += Rational(static_cast<unsigned long>(m * (m + 1) / 2));
  return r;
}

double sequence_entropy(const ChainStructure& s, double lambda) {
  if (!(lambda > 1.0)) throw std::invalid_argument("lambda must be > 1");
  return slow_entropy(s).get_d() * std::log(lambda);
}

std::string to_string(EntropyMethod m) {
  switch (m) {
    case EntropyMethod::chain_basis: return "chain-basis";
    case EntropyMethod::sl2_triple: return "sl2-triple";
    case EntropyMethod::closed_form: return "closed-form";
  }
  return "chain-basis";
}

EntropyReport analyze(const RatMatrix& ad_u, double tol) {
  EntropyReport r;
  r.structure = chain_structure(chain_basis(ad_u, tol));
  r.R = slow_entropy(r.structure);
  r.method = EntropyMethod::chain_basis;
  return r;
}

Eigen::MatrixXd chain_basis_matrix(const ChainBasis& basis) {
  std::vector<Eigen::VectorXd> cols;
  for (const Chain& c : basis.chains)
    for (const RatVec& v : c.vectors) cols.push_back(to_double(v));
  for (const DoubleChain& c : basis.doubles) {
    for (const auto& xy : c.vectors) cols.push_back(xy.first);
    for (const auto& xy : c.vectors) cols.push_back(xy.second);
  }
  const Eigen::Index rows = cols.empty() ? 0 : cols.front().size();
  Eigen::MatrixXd m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
  return m;
}

ChainBasisCheck verify_chain_basis(const RatMatrix& ad_u, const ChainBasis& basis, double tol) {
  ChainBasisCheck check;
  const JordanChevalley jc = jordan_chevalley(ad_u);

  for (std::size_t ci = 0; ci < basis.chains.size(); ++ci) {
    const Chain& c = basis.chains[ci];
    if (c.vectors.size() != c.depth + 1) {
      check.relations_hold = false;
      check.issues.push_back("chain " + std::to_string(ci) + ": wrong number of vectors");
      continue;
    }
    for (std::size_t j = 1; j <= c.depth; ++j)
      if (ad_u * c.vectors[j] != c.vectors[j - 1]) check.relations_hold = false;
    for (const RatVec& v : c.vectors)
      if (!is_zero(jc.semisimple * v)) check.relations_hold = false;
    const bool centralizes_u = is_zero(ad_u * c.vectors[0]);
    const bool centralizes_nilpotent = is_zero(jc.nilpotent * c.vectors[0]);
    if (!centralizes_u) check.relations_hold = false;
    if (centralizes_nilpotent && !centralizes_u)
      check.issues.push_back("chain " + std::to_string(ci) + ": bottom centralizes U' but not U");
  }

  const Eigen::MatrixXd s = jc.semisimple.to_double();
  const Eigen::MatrixXd nd = jc.nilpotent.to_double();
  const Eigen::MatrixXd ud = ad_u.to_double();
  for (std::size_t ci = 0; ci < basis.doubles.size(); ++ci) {
    const DoubleChain& c = basis.doubles[ci];
    if (c.vectors.size() != c.depth + 1 || !(c.alpha > 0)) {
      check.relations_hold = false;
      check.issues.push_back("double chain " + std::to_string(ci) + ": malformed");
      continue;
    }
    for (std::size_t j = 0; j <= c.depth; ++j) {
      const auto& [x, y] = c.vectors[j];
      const double size = std::max(x.norm(), y.norm());
      const Eigen::VectorXd below0 = j ? c.vectors[j - 1].first : Eigen::VectorXd::Zero(x.size());
      const Eigen::VectorXd below1 = j ? c.vectors[j - 1].second : Eigen::VectorXd::Zero(x.size());
      const double shift = std::max((nd * x - below0).norm(), (nd * y - below1).norm());
      const double rot = std::max((s * x + c.alpha * y).norm(), (s * y - c.alpha * x).norm());
      if (shift > tol * residual_scale(nd, size) || rot > tol * residual_scale(s, size)) check.relations_hold = false;
    }
    const auto& [x0, y0] = c.vectors[0];
    const double size0 = std::max(x0.norm(), y0.norm());
    const bool nil_ok = std::max((nd * x0).norm(), (nd * y0).norm()) <= tol * residual_scale(nd, size0);
    const bool u_ok = std::max((ud * x0).norm(), (ud * y0).norm()) <= tol * residual_scale(ud, size0);
    if (!nil_ok && u_ok)
      check.issues.push_back("double chain " + std::to_string(ci) + ": bottom centralizes U but not U'");
  }

  const Eigen::MatrixXd m = chain_basis_matrix(basis);
  if (m.cols() != static_cast<Eigen::Index>(ad_u.rows())) {
    check.spans_space = false;
  } else if (m.cols() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    check.spans_space = sv(sv.size() - 1) > 1e-10 * sv(0);
  }
  return check;
}

}  // namespace slowent
