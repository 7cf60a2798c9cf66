#include <gtest/gtest.h>

#include "tropos/errors.hpp"
#include "tropos/rational.hpp"
#include "tropos/scalar.hpp"
#include "tropos/series.hpp"

namespace tropos {
namespace {

TEST(Rational, ParsesIntegersFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-7/14"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational("-0.1"), Rational(-1, 10));
  EXPECT_EQ(parse_rational("3e-2"), Rational(3, 100));
  EXPECT_EQ(parse_rational("2.5E1"), Rational(25));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1//2", "1.2.3", "--1", "1/"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
}

TEST(Rational, PrintsCanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  // Raw gmp fractions are reduced on entry to the scalar and series types.
  EXPECT_EQ(TropScalar(Rational(6, 4)), TropScalar(parse_rational("3/2")));
  EXPECT_EQ(SeriesRat::t_pow(Rational(8, 2)), SeriesRat::t_pow(Rational(4)));
  EXPECT_EQ(parse_rational(to_string(Rational(-22, 7))), Rational(-22, 7));
}

TEST(TropScalar, DefaultIsNegativeInfinity) {
  const TropScalar z;
  EXPECT_TRUE(z.is_neg_inf());
  EXPECT_THROW(z.value(), InfiniteEntry);
  EXPECT_LT(z, TropScalar(-1000000));
  EXPECT_EQ(z, TropScalar::neg_inf());
}

TEST(TropScalar, SemiringOperations) {
  const TropScalar a(Rational(3, 2)), b(-2), bot;
  EXPECT_EQ(trop_add(a, b), a);
  EXPECT_EQ(trop_add(bot, b), b);
  EXPECT_EQ(trop_mul(a, b), TropScalar(Rational(-1, 2)));
  EXPECT_EQ(trop_mul(a, bot), bot);
  EXPECT_EQ(trop_div(a, b), TropScalar(Rational(7, 2)));
  EXPECT_EQ(trop_div(bot, b), bot);
  EXPECT_THROW(trop_div(a, bot), InfiniteEntry);
  EXPECT_EQ(trop_pow(a, 3), TropScalar(Rational(9, 2)));
  EXPECT_EQ(trop_pow(bot, 0), TropScalar::unit());
}

TEST(TropScalar, ParseAndPrint) {
  EXPECT_EQ(parse_trop("-inf"), TropScalar::neg_inf());
  EXPECT_EQ(parse_trop("5/3"), TropScalar(Rational(5, 3)));
  EXPECT_EQ(to_string(TropScalar::neg_inf()), "-inf");
  EXPECT_EQ(to_string(TropScalar(Rational(-1, 3))), "-1/3");
}

}  // namespace
}  // namespace tropos
