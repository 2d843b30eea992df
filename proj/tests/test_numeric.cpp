#include <doctest.h>

#include "blp/linalg.hpp"
#include "test_support.hpp"

using namespace blp;
using blp::testing::q;

TEST_SUITE_BEGIN("numeric");

TEST_CASE("rational text form round trip") {
  CHECK(to_string(parse_rational("-3/7")) == "-3/7");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(to_string(parse_rational("+5")) == "5");
  CHECK(parse_rational("2/4") == q(1, 2));
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(parse_rational("-0") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
  CHECK_THROWS_AS(parse_rational("1.5"), FormatError);
  CHECK_THROWS_AS(parse_rational(""), FormatError);
  CHECK_THROWS_AS(parse_rational("1/-2"), FormatError);
}

TEST_CASE("rational arithmetic is canonical and exact") {
  const Rational a = q(1, 3), b = q(1, 6);
  const Rational sum = a + b;
  CHECK(sum == q(1, 2));
  CHECK(numerator(sum) == 1);
  CHECK(denominator(sum) == 2);
  CHECK(q(-2, 4) == q(-1, 2));
  CHECK(denominator(q(3, -6)) > 0);
}

TEST_CASE("solve_square_system identity") {
  const Matrix m{{q(1), q(0)}, {q(0), q(1)}};
  const auto x = solve_square_system(m, {q(3), q(-1, 2)});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{q(3), q(-1, 2)});
}

TEST_CASE("solve_square_system on the moment system") {
  // Moment rows over two unknowns with k = 1: the square subsystem of the
  // first two rows pins (1, 0), and the third row is consistent with it.
  const Matrix m{{q(1), q(1)}, {q(1), q(2)}};
  const auto tau = solve_square_system(m, {q(1), q(1)});
  REQUIRE(tau.has_value());
  CHECK(*tau == Vec{q(1), q(0)});
  CHECK((*tau)[0] * q(1) + (*tau)[1] * q(4) == q(1));
}

TEST_CASE("solve_square_system detects rank deficiency") {
  const Matrix m{{q(1), q(1)}, {q(2), q(2)}};
  CHECK_FALSE(solve_square_system(m, {q(1), q(2)}).has_value());
}

TEST_CASE("determinant examples") {
  CHECK(determinant(Matrix{{q(1), q(0), q(0)},
                           {q(0), q(1), q(0)},
                           {q(0), q(0), q(1)}}) == 1);
  CHECK(determinant(Matrix{{q(1), q(1)}, {q(2), q(2)}}) == 0);
  CHECK(determinant(Matrix{{q(1), q(1)}, {q(1), q(2)}}) == 1);
}

namespace {

// Cofactor expansion, the independent route for determinant checks.
Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  Rational sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, col++) = m(i, j);
      }
    }
    acc += sign * m(0, c) * cofactor_det(minor);
    sign = -sign;
  }
  return acc;
}

}  // namespace

TEST_CASE("random matrices: determinant matches cofactor expansion and "
          "solve is exact") {
  blp::testing::RandomRationals source(20240601);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + round % 5;
    Matrix m(n, n);
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = source.value();
      r[i] = source.value();
    }
    const Rational det = determinant(m);
    CHECK(det == cofactor_det(m));
    const auto x = solve_square_system(m, r);
    CHECK(x.has_value() == (det != 0));
    if (x) CHECK(matvec(m, *x) == r);
  }
}

TEST_CASE("dimension mismatches are loud") {
  CHECK_THROWS_AS(Matrix({{q(1)}, {q(1), q(2)}}), DimensionError);
  CHECK_THROWS_AS(dot({q(1)}, {q(1), q(2)}), DimensionError);
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(solve_square_system(Matrix(2, 2), Vec(3)), DimensionError);
}

TEST_SUITE_END();
