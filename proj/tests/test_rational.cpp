#include <doctest.h>

#include <cstdint>

#include "lieorbit/errors.hpp"
#include "lieorbit/rational.hpp"

using lieorbit::internal_error;
using lieorbit::Rational;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
  CHECK_THROWS_AS(Rational(1, 0), internal_error);
}

TEST_CASE("rational arithmetic") {
  const Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational(0), internal_error);

  Rational c(2, 3);
  c += Rational(1, 3);
  CHECK(c == Rational(1));
  c -= Rational(1, 2);
  CHECK(c == Rational(1, 2));
  c *= Rational(4);
  CHECK(c == Rational(2));
  c /= Rational(-8);
  CHECK(c == Rational(-1, 4));
}

TEST_CASE("rational comparisons and accessors") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(1, 2) >= Rational(1, 2));
  CHECK(Rational(3, 2) > Rational(1));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK(Rational(5, 3).sign() == 1);
  CHECK(Rational::abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK(Rational::abs(Rational(5, 3)) == Rational(5, 3));
}

TEST_CASE("rational rendering") {
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-7).str() == "-7");
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-3, 4).str() == "-3/4");
}

TEST_CASE("rational overflow detection") {
  const Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), internal_error);
  CHECK_THROWS_AS(big * Rational(2), internal_error);
  // Stays exact right at the boundary.
  CHECK(big - Rational(1) + Rational(1) == big);
}
