#pragma once

#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace chase {

using Rational = boost::multiprecision::cpp_rational;

// Parses a decimal literal such as "0.05", "-3", "1.5e-3" into the exact
// rational it denotes. Throws std::invalid_argument on malformed input.
Rational parse_decimal(std::string_view text);

// Exact value of a finite binary double.
Rational exact_rational(double x);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

template <class T>
T scalar_cast(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return static_cast<T>(to_double(r));
  }
}

}  // namespace chase
