#include "doctest.h"

#include <stdexcept>

#include "bcr/rational.hpp"

using bcr::Int;
using bcr::Rat;

TEST_CASE("rational parsing accepts integers, fractions and signs") {
  CHECK(bcr::rat_parse("0") == Rat(0));
  CHECK(bcr::rat_parse("7") == Rat(7));
  CHECK(bcr::rat_parse("-3") == Rat(-3));
  CHECK(bcr::rat_parse("+3") == Rat(3));
  CHECK(bcr::rat_parse("5/12") == Rat(5) / 12);
  CHECK(bcr::rat_parse("-5/12") == Rat(-5) / 12);
  CHECK(bcr::rat_parse("4/6") == Rat(2) / 3); // canonicalized
  CHECK(bcr::rat_parse("-0") == Rat(0));
}

TEST_CASE("rational parsing rejects malformed strings") {
  CHECK_THROWS_AS(bcr::rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(bcr::rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(bcr::rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(bcr::rat_parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(bcr::rat_parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(bcr::rat_parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(bcr::rat_parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(bcr::rat_parse(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(bcr::rat_parse("1 "), std::invalid_argument);
}

TEST_CASE("rational formatting round-trips") {
  CHECK(bcr::rat_to_string(Rat(0)) == "0");
  CHECK(bcr::rat_to_string(Rat(-7)) == "-7");
  CHECK(bcr::rat_to_string(Rat(5) / 12) == "5/12");
  CHECK(bcr::rat_to_string(Rat(-5) / 12) == "-5/12");
  // Negative denominators are normalized into the numerator.
  CHECK(bcr::rat_to_string(Rat(5) / -12) == "-5/12");

  for (int p = -20; p <= 20; ++p)
    for (int q = 1; q <= 9; ++q) {
      Rat r = Rat(p) / q;
      CHECK(bcr::rat_parse(bcr::rat_to_string(r)) == r);
    }
}

TEST_CASE("rational helpers") {
  CHECK(bcr::rat_is_integer(Rat(4)));
  CHECK(!bcr::rat_is_integer(Rat(1) / 2));
  CHECK(bcr::rat_num(Rat(5) / 12) == Int(5));
  CHECK(bcr::rat_den(Rat(5) / 12) == Int(12));
  CHECK(bcr::factorial(0) == Int(1));
  CHECK(bcr::factorial(5) == Int(120));
  CHECK(bcr::factorial(12) == Int(479001600));
}
