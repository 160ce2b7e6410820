#include "doctest.h"
#include "zonocut/rat.hpp"

using zono::Rat;

TEST_CASE("rationals stay reduced with positive denominator") {
  Rat a(2, 4);
  CHECK(a.str() == "1/2");
  Rat b(3, -6);
  CHECK(b.str() == "-1/2");
  CHECK((a + b).is_zero());
  CHECK(Rat(-7, 1).str() == "-7");
}

TEST_CASE("arithmetic is exact") {
  Rat third(1, 3);
  CHECK(third + third + third == Rat(1));
  Rat alpha(1, 6);
  CHECK(Rat::pow(alpha, 4).str() == "1/1296");
  CHECK(Rat::pow(alpha, 0) == Rat(1));
  CHECK((Rat(5, 3) * Rat(3, 5)) == Rat(1));
  CHECK((Rat(1, 7) / Rat(2, 7)) == Rat(1, 2));
}

TEST_CASE("parsing and printing round-trip") {
  CHECK(Rat::from_string("22/7").str() == "22/7");
  CHECK(Rat::from_string("-9/3") == Rat(-3));
  CHECK(Rat::from_string("0") == Rat());
  CHECK_THROWS_AS(Rat::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("ordering and sign") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2).sign() == -1);
  CHECK(Rat().sign() == 0);
  CHECK(Rat(-5, 7).abs() == Rat(5, 7));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}
