#include <doctest.h>

#include "szreg/error.hpp"
#include "szreg/rational.hpp"

using szreg::Error;
using szreg::ErrorCode;
using szreg::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 7).to_string() == "0/1");
  CHECK(Rational().to_string() == "0/1");
  CHECK(Rational(5).to_string() == "5/1");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parse fractions and exact decimals") {
  CHECK(Rational::parse("2/5") == Rational(2, 5));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("1.") == Rational(1));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("0.333333333333333333333333").denominator() ==
        mpz_class("1000000000000000000000000"));
}

TEST_CASE("parse rejects scientific notation and junk") {
  for (const char* bad : {"1e-3", "2.5E1", "", "-", ".", "1/0", "1/-2", "a/b", "0.2.5", " 1", "1 ", "1/2/3", "0x10"}) {
    CAPTURE(bad);
    try {
      Rational::parse(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("floor, ceil and powers") {
  CHECK(Rational(5, 2).floor() == 2);
  CHECK(Rational(5, 2).ceil() == 3);
  CHECK(Rational(-5, 2).floor() == -3);
  CHECK(Rational(-5, 2).ceil() == -2);
  CHECK(Rational(4).ceil() == 4);
  CHECK(Rational(2, 5).pow(5) == Rational(32, 3125));
  CHECK(Rational(2, 5).pow(5).inverse().floor() == 97);
  CHECK((Rational(1, 3) - Rational(1, 2)).abs() == Rational(1, 6));
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(1, 3) < Rational(334, 1000));
  CHECK(Rational(1, 3) > Rational(333, 1000));
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-1) < Rational(0));
}
