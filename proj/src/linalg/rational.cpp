#include "slowent/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace slowent {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed integer: " + std::string(s));
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Finite decimal "[-]I[.F][e[-]E]" as an exact rational.
Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    Integer ex = parse_integer(exp_text);
    if (!ex.fits_slong_p() || abs(ex) > 10000) throw std::invalid_argument("exponent out of range");
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      throw std::invalid_argument("malformed decimal");
    }
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed decimal");
    digits = std::string(s);
  }
  Rational r(Integer(digits, 10));
  if (exponent > 0) r *= Rational(pow10(static_cast<unsigned long>(exponent)));
  if (exponent < 0) r /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  if (negative) r = -r;
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text));
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace slowent
