#pragma once

// JSON forms of the exact and numeric results. Rationals are strings "p/q"
// so exact values survive a round trip; matrices are
// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}.

#include <json.hpp>

#include "slowent/chains.hpp"
#include "slowent/dynamics.hpp"
#include "slowent/sl2.hpp"
#include "slowent/torus.hpp"
#include "slowent/zoo.hpp"

namespace slowent {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // string, integer or float literal

Json to_json(const RatMatrix& m);
/// Accepts the object form or a bare nested array of rows.
RatMatrix matrix_from_json(const Json& j);

Json to_json(const ChainStructure& s);
ChainStructure structure_from_json(const Json& j);

Json to_json(const EntropyReport& r);
Json to_json(const CentralizerSpectrum& s);
CentralizerSpectrum spectrum_from_json(const Json& j);

Json to_json(const Algebra& a);
/// "U" may be a matrix or an integer index into "basis"; name is optional.
Algebra algebra_from_json(const Json& j);

Json to_json(const SlopeFit& f);
Json to_json(const SpanningEstimate& e);

}  // namespace slowent
