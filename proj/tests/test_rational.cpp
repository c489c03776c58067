#include "doctest.h"
#include "ellgen/rational.hpp"

#include <stdexcept>

using ellgen::Rational;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(0).den_str() == "1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic and comparison") {
  const Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK(a > b);
  CHECK(Rational(7, 3).reciprocal() == Rational(3, 7));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("string round trips") {
  for (const char* s : {"0", "-7", "3/8", "-22/7", "123456789123456789123456789/2"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("integer predicates and conversions") {
  CHECK(Rational(4).is_integer());
  CHECK(Rational(4).is_even_integer());
  CHECK_FALSE(Rational(3).is_even_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(-12, 4).to_long() == -3);
  CHECK_THROWS_AS(Rational(1, 2).to_long(), std::domain_error);
}

TEST_CASE("integer powers") {
  CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
  CHECK(Rational(5).pow_int(0) == Rational(1));
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(Rational::binomial(Rational(4), 2) == Rational(6));
  CHECK(Rational::binomial(Rational(4), 0) == Rational(1));
  CHECK(Rational::binomial(Rational(4), 5) == Rational(0));
  CHECK(Rational::binomial(Rational(4), -1) == Rational(0));
  CHECK(Rational::binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(Rational::binomial(Rational(-4), 2) == Rational(10));
  CHECK(Rational::binomial(Rational(-1, 2), 3) == Rational(-5, 16));
  CHECK(Rational::factorial(6) == Rational(720));
}
