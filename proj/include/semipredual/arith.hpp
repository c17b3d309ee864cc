#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace semipredual {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (decimal). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// "p" when the denominator is one, otherwise "p/q" in lowest terms.
std::string to_string(Rational const& value);
std::string to_string(Integer const& value);

inline bool is_integral(Rational const& value) {
  return boost::multiprecision::denominator(value) == 1;
}

inline Integer numerator_of(Rational const& value) {
  return boost::multiprecision::numerator(value);
}

inline Integer denominator_of(Rational const& value) {
  return boost::multiprecision::denominator(value);
}

/// 2^exponent as an exact integer.
inline Integer pow2(std::uint64_t exponent) {
  Integer result = 1;
  result <<= static_cast<unsigned>(exponent);
  return result;
}

}  // namespace semipredual
