#include "slowent/json_io.hpp"

#include <stdexcept>
#include <string>

namespace slowent {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RatMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("entries") : j;
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  const std::size_t r = rows.size(), c = rows[0].size();
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(rows[i][k]);
  }
  if (j.is_object() && ((j.contains("rows") && j["rows"].get<std::size_t>() != r) ||
                        (j.contains("cols") && j["cols"].get<std::size_t>() != c)))
    throw std::invalid_argument("matrix shape does not match its entries");
  return m;
}

Json to_json(const ChainStructure& s) {
  return Json{{"depths", s.depths}, {"alphas", s.alphas}, {"double_depths", s.double_depths}};
}

ChainStructure structure_from_json(const Json& j) {
  ChainStructure s;
  s.depths = j.at("depths").get<std::vector<std::size_t>>();
  if (j.contains("alphas")) s.alphas = j["alphas"].get<std::vector<double>>();
  if (j.contains("double_depths")) s.double_depths = j["double_depths"].get<std::vector<std::size_t>>();
  if (s.alphas.size() != s.double_depths.size()) throw std::invalid_argument("alphas and double_depths differ in length");
  return s;
}

Json to_json(const EntropyReport& r) {
  return Json{{"R", to_string(r.R)}, {"method", to_string(r.method)}, {"structure", to_json(r.structure)}};
}

Json to_json(const CentralizerSpectrum& s) {
  Json d = Json::object();
  for (const auto& [n, mult] : s.d_n) d[std::to_string(n)] = mult;
  return Json{{"d_n", std::move(d)}};
}

CentralizerSpectrum spectrum_from_json(const Json& j) {
  CentralizerSpectrum s;
  for (const auto& [key, value] : j.at("d_n").items()) s.d_n[std::stol(key)] = value.get<std::size_t>();
  return s;
}

Json to_json(const Algebra& a) {
  Json basis = Json::array();
  for (const RatMatrix& b : a.basis) basis.push_back(to_json(b));
  return Json{{"name", a.name}, {"basis", std::move(basis)}, {"U", to_json(a.U)}};
}

Algebra algebra_from_json(const Json& j) {
  Algebra a;
  a.name = j.value("name", std::string("algebra"));
  for (const Json& b : j.at("basis")) a.basis.push_back(matrix_from_json(b));
  if (a.basis.empty()) throw std::invalid_argument("basis is empty");
  const Json& u = j.at("U");
  if (u.is_number_integer()) {
    const long idx = u.get<long>();
    if (idx < 0 || static_cast<std::size_t>(idx) >= a.basis.size()) throw std::invalid_argument("U index out of range");
    a.U = a.basis[static_cast<std::size_t>(idx)];
  } else {
    a.U = matrix_from_json(u);
  }
  return a;
}

Json to_json(const SlopeFit& f) {
  return Json{{"exponent", f.exponent}, {"intercept", f.intercept}, {"rms_residual", f.rms_residual}, {"points", f.points}};
}

Json to_json(const SpanningEstimate& e) {
  return Json{{"greedy", e.greedy},
              {"separated", e.separated},
              {"distinct", e.distinct},
              {"covered", e.covered},
              {"window_volume", e.window_volume},
              {"scaled_greedy", e.scaled_greedy()},
              {"scaled_separated", e.scaled_separated()}};
}

}  // namespace slowent
