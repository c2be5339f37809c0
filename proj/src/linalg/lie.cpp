#include "slowent/exact_linalg.hpp"

namespace slowent {

RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw LinalgError("bracket: dimension mismatch");
  return a * b - b * a;
}

BasisCoordinates::BasisCoordinates(std::vector<RatMatrix> basis) : basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  if (n == 0) return;
  const std::size_t rows = basis_.front().rows(), cols = basis_.front().cols();
  const std::size_t entries = rows * cols;
  // Row i of `stacked` is the flattened i-th basis element; its independent
  // columns are entry positions that pin down coordinates.
  RatMatrix stacked(n, entries);
  for (std::size_t i = 0; i < n; ++i) {
    if (basis_[i].rows() != rows || basis_[i].cols() != cols) throw LinalgError("basis elements differ in shape");
    for (std::size_t k = 0; k < entries; ++k) stacked(i, k) = basis_[i].flat()[k];
  }
  pivot_entries_ = independent_columns(stacked);
  if (pivot_entries_.size() < n) throw LinalgError("dependent basis");
  RatMatrix minor(n, n);  // minor(k, i) = basis_i at entry pivot_k
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) minor(k, i) = basis_[i].flat()[pivot_entries_[k]];
  auto inv = inverse(minor);
  if (!inv) throw LinalgError("dependent basis");
  minor_inverse_ = std::move(*inv);
}

std::optional<RatVec> BasisCoordinates::coordinates(const RatMatrix& x) const {
  const std::size_t n = basis_.size();
  if (n == 0) return x.is_zero() ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  if (x.rows() != basis_.front().rows() || x.cols() != basis_.front().cols()) throw LinalgError("coordinates: shape mismatch");
  RatVec picked(n);
  for (std::size_t k = 0; k < n; ++k) picked[k] = x.flat()[pivot_entries_[k]];
  RatVec c = minor_inverse_ * picked;
  if (element(c) != x) return std::nullopt;
  return c;
}

RatMatrix BasisCoordinates::element(const RatVec& coords) const {
  if (coords.size() != basis_.size()) throw LinalgError("element: coordinate count mismatch");
  if (basis_.empty()) throw LinalgError("element: empty basis");
  RatMatrix out(basis_.front().rows(), basis_.front().cols());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) out += basis_[i] * coords[i];
  return out;
}

RatMatrix ad_operator(const BasisCoordinates& basis, const RatMatrix& u) {
  const std::size_t n = basis.dim();
  RatMatrix ad(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = basis.coordinates(bracket(u, basis.basis()[i]));
    if (!c) throw LinalgError("not bracket-closed");
    for (std::size_t k = 0; k < n; ++k) ad(k, i) = (*c)[k];
  }
  return ad;
}

RatMatrix ad_operator(const std::vector<RatMatrix>& basis, const RatMatrix& u) {
  return ad_operator(BasisCoordinates(basis), u);
}

}  // namespace slowent
