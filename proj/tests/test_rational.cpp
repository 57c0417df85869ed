#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fischerlab/rational.hpp"
#include "support/testing.hpp"

using fischerlab::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-2, -6) == Rational(1, 3));
  CHECK(Rational(2, -6) == Rational(-1, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 6).numerator() == 1);
  CHECK(Rational(2, 6).denominator() == 3);
  CHECK(Rational(1, -2).denominator() == 2);  // denominator stays positive
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(-5).abs() == Rational(5));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK(Rational::from_string("17") == Rational(17));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS(Rational::from_string("1.5"));
  CHECK_THROWS(Rational::from_string("1/-2"));
  CHECK_THROWS(Rational::from_string("1/0"));
  CHECK_THROWS(Rational::from_string(""));
  CHECK_THROWS(Rational::from_string("a"));
  CHECK_THROWS(Rational::from_string("1/2/3"));

  fischerlab::testing::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const Rational r = rng.rational(1000, 1000);
    CHECK(Rational::from_string(r.str()) == r);
  }
}

TEST_CASE("big values stay exact") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000007, 3);
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Rational(1000000007, 3);
  CHECK(back == Rational(1));
}
