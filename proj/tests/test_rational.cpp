#include "tropdeg/rational.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace tropdeg;

TEST(Rational, MakeRatCanonicalizes) {
  const Rat r = make_rat(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(make_rat(1, 0), std::invalid_argument);
}

TEST(Rational, PrintsIntegersAndFractions) {
  EXPECT_EQ(to_string(Rat(5)), "5");
  EXPECT_EQ(to_string(make_rat(11, 3)), "11/3");
  EXPECT_EQ(to_string(make_rat(-1, 2)), "-1/2");
  EXPECT_EQ(to_string(Int(-42)), "-42");
}

TEST(Rational, ParseRoundTrips) {
  for (const char* s : {"0", "7", "-7", "11/3", "-5/12"}) EXPECT_EQ(to_string(parse_rat(s)), s);
  EXPECT_EQ(parse_rat("4/6"), make_rat(2, 3));
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/2/3", "/3"}) EXPECT_THROW(parse_rat(bad), std::invalid_argument);
}

TEST(Rational, ContentAndPrimitive) {
  EXPECT_EQ(content(make_int_vec({4, -6, 10})), 2);
  EXPECT_EQ(primitive(make_int_vec({4, -6, 10})), make_int_vec({2, -3, 5}));
  EXPECT_EQ(content(make_int_vec({0, 0})), 0);
  EXPECT_EQ(primitive(make_int_vec({0, 0})), make_int_vec({0, 0}));
  EXPECT_TRUE(is_zero(make_int_vec({0, 0, 0})));
  EXPECT_FALSE(is_zero(make_int_vec({0, 1})));
}

TEST(Rational, CommonDenominator) {
  const RatVec v{make_rat(1, 4), make_rat(5, 6), Rat(3)};
  EXPECT_EQ(common_denominator(v), 12);
  EXPECT_EQ(common_denominator(RatVec{}), 1);
}
