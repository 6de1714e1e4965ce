#include <doctest.h>

#include "sunlab/rational.hpp"

using namespace sunlab;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK((a + b).str() == "1/2");
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");  // denominator normalized positive
  CHECK(Rational(6, 3).str() == "2");
  CHECK(a * Rational(3) == Rational(1));
  CHECK(Rational(1) / Rational(3) == a);
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
}

TEST_CASE("rational comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(7, 2).ceil() == Rational(4));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(-7, 2).ceil() == Rational(-3));
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("rational parse / render round trip") {
  for (const char* s : {"0", "1", "-1", "3/2", "-3/2", "123456789123456789123456789/2"}) {
    auto r = Rational::parse(s);
    REQUIRE(r);
    CHECK(r->str() == s);
  }
  CHECK(Rational::parse("4/2")->str() == "2");
  CHECK_FALSE(Rational::parse(""));
  CHECK_FALSE(Rational::parse("1/0"));
  CHECK_FALSE(Rational::parse("a/b"));
  CHECK_FALSE(Rational::parse("1.5"));
  CHECK_FALSE(Rational::parse("1/"));
  CHECK_FALSE(Rational::parse("/2"));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
