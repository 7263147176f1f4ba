#include <gtest/gtest.h>

#include "neron/error.hpp"
#include "generators.hpp"
#include "neron/rational.hpp"

namespace neron {
namespace {

TEST(RationalText, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), testing::ratio(1, 2));
  EXPECT_EQ(parse_rational("-4"), -4);
  EXPECT_EQ(parse_rational("+2/3"), testing::ratio(2, 3));
  EXPECT_EQ(format_rational(Rational(mpz_class(6), mpz_class(4))), "3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5/1");
  EXPECT_EQ(format_rational(Rational(0)), "0/1");
  EXPECT_EQ(format_rational(testing::ratio(-2, 9)), "-2/9");
  for (const char* bad : {"", "1/0", "x", "1/", "/2", "1.5", "1/-2"}) {
    try {
      parse_rational(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedInput) << bad;
    }
  }
}

TEST(RationalMatrixOps, InverseRankDeterminant) {
  RationalMatrix m(2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  const RationalMatrix inv = inverse(m);
  EXPECT_EQ(m * inv, RationalMatrix::identity(2));
  EXPECT_EQ(determinant(m), 1);
  EXPECT_EQ(rank(m), 2u);

  RationalMatrix singular(2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  EXPECT_EQ(rank(singular), 1u);
  EXPECT_EQ(determinant(singular), 0);
  try {
    inverse(singular);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

}  // namespace
}  // namespace neron
