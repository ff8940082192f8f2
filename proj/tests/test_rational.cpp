#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pricing/errors.hpp"
#include "pricing/rational.hpp"

using namespace pricing;

TEST_CASE("exact fraction arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  Rational q(2, 4);
  q.canonicalize();
  CHECK(to_string(q) == "1/2");
  Rational big = rational_pow(Rational(2), 136);
  Rational inv = rational_pow(Rational(1, 2), 136);
  CHECK(big * inv == 1);
}

TEST_CASE("parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("serialization round trip") {
  for (const char* s : {"5/6", "-7/3", "0", "12", "1156"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(checked_div(Rational(1), Rational(0)), ParseError);
  CHECK(checked_div(Rational(1), Rational(2)) == Rational(1, 2));
}

TEST_CASE("decimal annotations") {
  CHECK(decimal_string(Rational(9, 4), 2) == "2.25");
  CHECK(decimal_string(Rational(1, 3), 4) == "0.3333");
  CHECK(decimal_string(Rational(2, 3), 2) == "0.67");
  CHECK(decimal_string(Rational(-1, 2), 1) == "-0.5");
  CHECK(decimal_string(Rational(3), 0) == "3");
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(0, 0) == 1);
  CHECK(Integer(binomial(47, 23)) > Integer("1000000000000"));
}
