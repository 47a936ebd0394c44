#include "critbound/rational.hpp"

#include <string>

#include "critbound/errors.hpp"

namespace critbound {

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in '" + s + "'");
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw PreconditionError("not a rational: '" + s + "'");
  }
}

std::string to_fixed(const Rational& r, int digits, Rounding mode) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt num = numerator(r) * scale;
  const BigInt den = denominator(r);
  // Floor division towards negative infinity.
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  if (mode == Rounding::HalfUp) {
    const BigInt rem = num - q * den;  // 0 <= rem < den
    if (2 * rem >= den) q += 1;
  }
  const bool negative = q < 0;
  std::string body = (negative ? BigInt(-q) : q).str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return negative ? "-" + body : body;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace critbound
