#include "blp/rational.hpp"

#include <cctype>

namespace blp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num_part = rest;
  std::string_view den_part;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num_part = rest.substr(0, slash);
    den_part = rest.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw FormatError("invalid rational token '" + std::string(text) +
                        "': denominator must be a positive integer");
    }
  }
  if (!all_digits(num_part)) {
    throw FormatError("invalid rational token '" + std::string(text) + "'");
  }
  const Integer num{std::string(num_part)};
  const Integer den = den_part.empty() ? Integer(1) : Integer{std::string(den_part)};
  if (den == 0) {
    throw FormatError("invalid rational token '" + std::string(text) +
                      "': zero denominator");
  }
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

}  // namespace blp
