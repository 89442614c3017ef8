#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "pielm/text.hpp"

using namespace pielm;

TEST(Text, FormatNumberRoundTrips) {
  for (double x : {0.0, 1.0, -2.5, 0.1, 1e-300, 6.02214076e23, M_PI, 1.0 / 3.0}) {
    double back = 0.0;
    ASSERT_TRUE(parse_double(format_number(x), back)) << format_number(x);
    EXPECT_EQ(back, x);
  }
  EXPECT_EQ(format_number(8.0), "8");
  EXPECT_EQ(format_number(0.12), "0.12");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(Text, ParseDouble) {
  double x = 0.0;
  EXPECT_TRUE(parse_double(" 2.5 ", x));
  EXPECT_EQ(x, 2.5);
  EXPECT_TRUE(parse_double("+1e-3", x));
  EXPECT_EQ(x, 1e-3);
  EXPECT_TRUE(parse_double("pi", x));
  EXPECT_EQ(x, M_PI);
  EXPECT_TRUE(parse_double("-pi", x));
  EXPECT_EQ(x, -M_PI);
  EXPECT_TRUE(parse_double("3pi", x));
  EXPECT_EQ(x, 3 * M_PI);
  EXPECT_TRUE(parse_double("4 * pi", x));
  EXPECT_EQ(x, 4 * M_PI);
  EXPECT_TRUE(parse_double("-pi/2", x));
  EXPECT_EQ(x, -M_PI / 2);
  EXPECT_TRUE(parse_double("1/4", x));
  EXPECT_EQ(x, 0.25);
  for (const char* bad : {"", "abc", "1.5x", "pi pi", "1/0", "1/pi", "--1", "2/"}) {
    EXPECT_FALSE(parse_double(bad, x)) << bad;
  }
}

TEST(Text, ParseInt) {
  long long n = 0;
  EXPECT_TRUE(parse_int(" 42", n));
  EXPECT_EQ(n, 42);
  EXPECT_TRUE(parse_int("-7", n));
  EXPECT_EQ(n, -7);
  EXPECT_FALSE(parse_int("4.0", n));
  EXPECT_FALSE(parse_int("1e3", n));
}

TEST(Text, SplitAndTrim) {
  EXPECT_EQ(trim("  a b \t"), "a b");
  EXPECT_EQ(split(" 1, 2,,3 ", ", "), (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_TRUE(split("  ", ",").empty());
}
