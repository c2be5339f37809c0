#pragma once

// Exact rational scalars. GMP's mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace slowent {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coordinate vector with exact entries.
using RatVec = std::vector<Rational>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", and finite decimals such as "-0.125" or "2.5e-3".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// p/q in canonical form (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational ratio(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

bool is_zero(const RatVec& v);

}  // namespace slowent
