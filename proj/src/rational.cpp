#include "mmm/rational.hpp"

#include <cctype>

#include "mmm/errors.hpp"

namespace mmm {

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InvalidArgument("not a rational number: '" + std::string(whole) + "'");
  }
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!frac_part.empty() && !all_digits(frac_part)) {
      throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    }
    BigInt whole = (int_part.empty() || int_part == "-" || int_part == "+")
                       ? BigInt(0)
                       : parse_integer(int_part, text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    BigInt frac = frac_part.empty() ? BigInt(0) : BigInt(std::string(frac_part));
    Rational magnitude = Rational(boost::multiprecision::abs(whole)) + Rational(frac, scale);
    return negative ? Rational(-magnitude) : magnitude;
  }
  return Rational(parse_integer(text, text));
}

BigInt round_half_away(const Rational& value) {
  const BigInt& num = numerator(value);
  const BigInt& den = denominator(value);  // always positive
  BigInt twice = 2 * boost::multiprecision::abs(num) + den;
  BigInt mag = twice / (2 * den);
  return num < 0 ? BigInt(-mag) : mag;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace mmm
