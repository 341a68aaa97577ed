#include <gtest/gtest.h>

#include "einobs/arith.hpp"
#include "einobs/error.hpp"

using namespace einobs;

TEST(Arith, FloorCeil) {
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(6)), 6);
  EXPECT_EQ(ceil(Rational(6)), 6);
}

TEST(Arith, PerfectCubeIsExact) {
  const Interval t = cube_root_squared(Integer(8), 64);
  EXPECT_TRUE(t.is_point());
  EXPECT_EQ(t.lo, 4);
  EXPECT_EQ(cube_root_squared(Integer(0), 64).lo, 0);
  EXPECT_EQ(cube_root_squared(Integer("1000000000000000000000000000000"), 64).lo,
            Rational(Integer("100000000000000000000")));
}

TEST(Arith, CubeRootEnclosureBracketsAndTightens) {
  // 2^(2/3) = 1.587401051968199474751705639272...
  const Rational ref(Integer("1587401051968199474751705639272"), Integer("1000000000000000000000000000000"));
  Rational prev_width;
  for (unsigned bits : {32u, 64u, 128u, 256u}) {
    const Interval t = cube_root_squared(Integer(2), bits);
    EXPECT_LT(t.lo, t.hi);
    EXPECT_LE(t.lo, ref + Rational(1, Integer("1000000000000000000000000000000")));
    EXPECT_GE(t.hi, ref - Rational(1, Integer("1000000000000000000000000000000")));
    if (bits > 32) EXPECT_LT(t.width(), prev_width);
    prev_width = t.width();
  }
  EXPECT_THROW(cube_root_squared(Integer(-1), 64), Error);
}

TEST(Arith, PiSquaredEnclosure) {
  // pi^2 = 9.869604401089358618834490999876...
  const Rational ref(Integer("9869604401089358618834490999876"), Integer("1000000000000000000000000000000"));
  const Interval p = pi_squared(256);
  EXPECT_LT(p.lo, ref + Rational(1, Integer("1000000000000000000000000000000")));
  EXPECT_GT(p.hi, ref - Rational(1, Integer("1000000000000000000000000000000")));
  EXPECT_LT(p.width(), Rational(1, Integer("1000000000000000000000000000000")));
}

TEST(Arith, DecimalRendering) {
  EXPECT_EQ(to_decimal(Rational(0), 20), "0");
  EXPECT_EQ(to_decimal(Rational(1283, 89), 5), "14.416");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 4), "-0.3333");
  EXPECT_EQ(to_decimal(Rational(12345678), 3), "12300000");
  EXPECT_EQ(to_decimal(Rational(9999, 10), 3), "1000");
  EXPECT_EQ(to_decimal(Rational(1, 1000), 2), "0.0010");
  // Half to even.
  EXPECT_EQ(to_decimal(Rational(125, 100), 2), "1.2");
  EXPECT_EQ(to_decimal(Rational(135, 100), 2), "1.4");
}

TEST(Arith, ParseRational) {
  EXPECT_EQ(parse_rational("51200"), 51200);
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(parse_integer("+17"), 17);
}

TEST(Arith, Int64Range) {
  EXPECT_TRUE(fits_int64(Integer("9223372036854775807")));
  EXPECT_FALSE(fits_int64(Integer("9223372036854775808")));
  EXPECT_TRUE(fits_int64(Integer("-9223372036854775808")));
}
