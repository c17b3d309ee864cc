#include "semipredual/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace semipredual {

namespace {

bool is_decimal(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    start = 1;
  }
  if (start == text.size()) {
    return false;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') {
    text.remove_prefix(1);
  }
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(Integer const& value) { return value.str(); }

std::string to_string(Rational const& value) {
  if (is_integral(value)) {
    return numerator_of(value).str();
  }
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

}  // namespace semipredual
