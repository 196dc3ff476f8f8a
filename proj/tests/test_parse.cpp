#include "pellpoly/curve.hpp"
#include "pellpoly/parse.hpp"

#include <gtest/gtest.h>

using namespace pellpoly;

TEST(Parse, CanonicalTextRoundTrips) {
  auto ctx = djkm_tower(Rational(3));
  for (auto text : {"1/2*t^4 - 2*t^2 + 1/2", "s2*t^4 - 3*s2*t^2 + s2", "3 - t^-1", "-t^3", "0"})
    EXPECT_EQ(parse_laurent(text, ctx).to_string(), text);
  auto generic = make_tower(Rational(2), Rational(3));
  auto p = parse_laurent("(1 + s1)*t^2 - 3*s1*s2*t + s2", generic);
  EXPECT_EQ(parse_laurent(p.to_string(), generic), p);
}

TEST(Parse, Grammar) {
  auto q = rational_tower();
  EXPECT_EQ(parse_laurent("(t^2-1)/2"), parse_laurent("1/2*t^2 - 1/2"));
  EXPECT_EQ(parse_laurent("-(t+1)^2"), parse_laurent("-t^2 - 2*t - 1"));
  EXPECT_EQ(parse_laurent("2*t^-2"), LaurentPoly::monomial(q, -2, 2));
  EXPECT_EQ(parse_laurent("(2*t)^-1"), LaurentPoly::monomial(q, -1, make_rational(1, 2)));
  EXPECT_EQ(parse_laurent(" t ^ 2 +\t1 "), parse_laurent("t^2+1"));
}

TEST(Parse, CollapsedRadicals) {
  auto ctx = djkm_tower(Rational(3));  // s1 = 2
  EXPECT_EQ(parse_laurent("s1*t", ctx), parse_laurent("2*t", ctx));
}

TEST(Parse, Errors) {
  for (auto bad : {"", "t^", "t +", "x", "(t", "1/0", "(t+1)^-1", "t^-1^2", "2 t", "s3"})
    EXPECT_THROW(parse_laurent(bad), parse_error) << bad;
}
