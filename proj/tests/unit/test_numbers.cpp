#include <gtest/gtest.h>

#include "dioph/bigfloat.hpp"
#include "dioph/errors.hpp"
#include "dioph/numbers.hpp"

using namespace dioph;

TEST(Numbers, RationalTextAlwaysHasDenominator) {
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
}

TEST(Numbers, ParseForms) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-14/6"), Rational(-7, 3));
  EXPECT_EQ(parse_rational("2.05"), Rational(41, 20));
  EXPECT_EQ(parse_rational("-0.618"), Rational(-309, 500));
  EXPECT_EQ(parse_rational("0.6"), Rational(3, 5));
}

TEST(Numbers, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1.2.3"), ParseError);
  EXPECT_THROW(parse_integer("12x"), ParseError);
}

TEST(Numbers, FloorCeil) {
  EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
  EXPECT_EQ(ceil_of(Rational(-1, 2)), 0);
  EXPECT_EQ(floor_of(Rational(7, 1)), 7);
  EXPECT_EQ(ceil_of(Rational(7, 1)), 7);
}

TEST(Numbers, Powers) {
  EXPECT_EQ(pow(Integer(3), 5), 243);
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Integer(7), 0), 1);
}

TEST(BigFloat, DirectedRoundingBrackets) {
  BigFloat lo(Rational(1, 3), MPFR_RNDD, Precision{64});
  BigFloat hi(Rational(1, 3), MPFR_RNDU, Precision{64});
  EXPECT_LT(lo, hi);
  EXPECT_LE(lo.to_double(MPFR_RNDD), 1.0 / 3.0);
  EXPECT_GE(hi.to_double(MPFR_RNDU), 1.0 / 3.0);
}

TEST(BigFloat, LogExpRoundTrip) {
  BigFloat x(Rational(5, 2), MPFR_RNDN, Precision{256});
  BigFloat y = exp(ln(x));
  EXPECT_NEAR(y.to_double(MPFR_RNDN), 2.5, 1e-15);
  EXPECT_NEAR(log2(BigFloat(1024, Precision{64})).to_double(MPFR_RNDN), 10.0, 0.0);
}
