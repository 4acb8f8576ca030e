#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mmm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "numerator/denominator", always with an explicit denominator.
std::string to_string(const Rational& value);

/// Accepts "a/b", "a" and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);

/// Round to nearest, ties away from zero.
BigInt round_half_away(const Rational& value);

Rational power(const Rational& base, unsigned exponent);

double to_double(const Rational& value);

}  // namespace mmm
