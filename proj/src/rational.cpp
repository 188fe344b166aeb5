#include "chase/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace chase {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(unsigned n) {
  cpp_int r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  cpp_int digits = 0;
  int scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) bad(text);
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') bad(text);
    ++pos;
    int exponent = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc{} || ptr != last || first == last) bad(text);
    if (exponent > 4000 || exponent < -4000) bad(text);
    scale += exponent;
  }
  Rational r = scale >= 0 ? Rational(digits * pow10(static_cast<unsigned>(scale)))
                          : Rational(digits, pow10(static_cast<unsigned>(-scale)));
  return negative ? Rational(-r) : r;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an integer for every double
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  cpp_int numerator = scaled;
  if (exponent >= 0) {
    numerator <<= exponent;
    return Rational(numerator);
  }
  cpp_int denominator = 1;
  denominator <<= -exponent;
  return Rational(numerator, denominator);
}

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace chase
