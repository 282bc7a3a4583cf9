#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/rat.hpp"
#include "core/vec.hpp"

using namespace trit;

TEST_CASE("rationals reduce and normalize") {
  Rat a(6, 4);
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  Rat b(-6, -4);
  CHECK(b == a);
  Rat c(3, -2);
  CHECK(c == -a);
  CHECK(Rat(0, 5) == Rat(0));
}

TEST_CASE("arithmetic is exact") {
  Rat third(1, 3), half(1, 2);
  CHECK(third + half == Rat(5, 6));
  CHECK(third - half == Rat(-1, 6));
  CHECK(third * half == Rat(1, 6));
  CHECK(third / half == Rat(2, 3));
  Rat sum(0);
  for (int i = 0; i < 10; i++) sum += Rat(1, 10);
  CHECK(sum == Rat(1));
}

TEST_CASE("comparison") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 3) > Rat(-1, 2));
  CHECK(Rat(7, 1) >= Rat(7));
  CHECK(Rat(2, 6).cmp(Rat(1, 3)) == 0);
}

TEST_CASE("parsing round-trips") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("12") == Rat(12));
  CHECK(Rat::parse("-12") == Rat(-12));
  CHECK(Rat::parse(Rat(22, 7).str()) == Rat(22, 7));
  CHECK(Rat(-5, 10).str() == "-1/2");
  CHECK_THROWS(Rat::parse("x"));
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("overflow is detected, never silently wrapped") {
  Rat big(((int128)1) << 100, 1);
  CHECK_THROWS_AS(big * big, overflow_error);
}

TEST_CASE("integer vector helpers") {
  CHECK(primitive(IVec2{4, -6}) == IVec2{2, -3});
  CHECK(canon_dir(IVec2{-2, 4}) == IVec2{1, -2});
  CHECK(idet2({1, 0}, {0, 1}) == 1);
  CHECK(icross({1, 0, 0}, {0, 1, 0}) == IVec3{0, 0, 1});
}
