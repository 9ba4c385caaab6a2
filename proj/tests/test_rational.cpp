#include <doctest.h>

#include "coadjoint/rational.hpp"

using namespace coadjoint;

TEST_CASE("parse_rational handles integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("+6/3") == Rational(2));
  // Canonical after parsing: positive denominator, reduced.
  const Rational r = parse_rational("4/-6");
  CHECK(r == Rational(-2, 3));
  CHECK(r.get_den() == 3);
  CHECK(r.get_num() == -2);
  CHECK(parse_rational("123456789012345678901234567890/2") ==
        Rational(mpz_class("61728394506172839450617283945")));
}

TEST_CASE("parse_rational rejects garbage") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
}

TEST_CASE("to_string round-trips") {
  for (const char* text : {"0", "5", "-5", "1/2", "-22/7"}) {
    CHECK(to_string(parse_rational(text)) == text);
  }
}

TEST_CASE("parse_rational_list") {
  const Vec v = parse_rational_list("1,0,-2/3");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 1);
  CHECK(v[1] == 0);
  CHECK(v[2] == Rational(-2, 3));
  CHECK_THROWS_AS(parse_rational_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), std::invalid_argument);
}
