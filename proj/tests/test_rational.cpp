#include <doctest.h>

#include "thetadiv/rational.hpp"

using namespace thetadiv;

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, 4);
  CHECK(a == Rational(3, 2));
  CHECK((a + Rational(1, 2)) == Rational(2));
  CHECK((a * Rational(2, 3)) == Rational(1));
  CHECK((a - a).is_zero());
  CHECK((Rational(1) / Rational(7)) == Rational(1, 7));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(4, -6) == Rational(-2, 3));
}

TEST_CASE("parse and print round-trip") {
  for (const char* s : {"0", "-14", "54/7", "-3/2", "1836"}) {
    Rational r = Rational::parse(s);
    CHECK(r.str() == s);
  }
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(-3, 2));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
}

TEST_CASE("reciprocal property") {
  for (long long p = -9; p <= 9; ++p)
    for (long long q = 1; q <= 5; ++q) {
      if (p == 0) continue;
      Rational r(p, q);
      CHECK(r * (Rational(1) / r) == Rational(1));
    }
}

TEST_CASE("factorials, powers of two, binomials") {
  CHECK(factorial_q(0) == Rational(1));
  CHECK(factorial_q(5) == Rational(120));
  CHECK(factorial_q(12) == Rational(479001600));
  CHECK(pow2_q(10) == Rational(1024));
  CHECK(pow2_q(-2) == Rational(1, 4));
  CHECK(binomial_q(8, 4) == Rational(70));
  CHECK(binomial_q(8, 0) == Rational(1));
  CHECK(binomial_q(3, 5).is_zero());
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big = factorial_q(33);
  CHECK_THROWS_AS(big * big * big, std::overflow_error);
  CHECK_THROWS_AS(factorial_q(40), std::overflow_error);
}

TEST_CASE("integer extraction") {
  CHECK(Rational(40, 2).to_int() == 20);
  CHECK_THROWS(Rational(1, 2).to_int());
}
