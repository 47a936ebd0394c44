#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace critbound {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Always "num/den" with den > 0, e.g. "58/1", "-3/2".
std::string rational_string(const Rational& r);
/// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

enum class Rounding { HalfUp, Floor };

/// Exact decimal rendering with `digits` places after the point.
std::string to_fixed(const Rational& r, int digits, Rounding mode = Rounding::HalfUp);

double to_double(const Rational& r);

}  // namespace critbound
