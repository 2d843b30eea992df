#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace blp {

/// Exact rational scalar. Arbitrary-precision numerator/denominator,
/// kept in canonical form (gcd 1, positive denominator) by the backend
/// after every operation, so equality and ordering are structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Thrown on malformed text input (rational tokens, file fields).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses the canonical text form: optional sign, decimal integer,
/// optional "/" followed by a positive decimal integer. "-3/7", "5".
Rational parse_rational(std::string_view text);

/// Canonical text form, inverse of parse_rational: "p/q" with q > 1, else "p".
std::string to_string(const Rational& value);

inline Rational rational(long long num, long long den = 1) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(Integer(num), Integer(den));
}

}  // namespace blp
