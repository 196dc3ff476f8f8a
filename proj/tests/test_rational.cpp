#include "pellpoly/family.hpp"
#include "pellpoly/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pellpoly;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("5/3"), make_rational(5, 3));
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_TRUE(is_canonical(parse_rational("6/4")));
}

TEST(Rational, RejectsMalformedText) {
  for (auto bad : {"", "1.5", "1/", "/2", "a", "1/-2", "2/0", "--1"}) EXPECT_THROW(parse_rational(bad), parse_error) << bad;
}

TEST(Rational, MakeRationalCanonicalizes) {
  Rational q = make_rational(4, -6);
  EXPECT_EQ(q.get_num(), -2);
  EXPECT_EQ(q.get_den(), 3);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(make_rational(16, 9)), make_rational(4, 3));
  EXPECT_EQ(exact_sqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(exact_sqrt(Rational(2)));
  EXPECT_FALSE(exact_sqrt(Rational(-4)));
}

TEST(Rational, GeneralizedBinomial) {
  EXPECT_EQ(binomial(make_rational(3, 2), 2), make_rational(3, 8));
  EXPECT_EQ(binomial(make_rational(-1, 2), 3), make_rational(-5, 16));
  EXPECT_EQ(binomial(Rational(7), 3), Rational(35));
  EXPECT_EQ(binomial(7, 3), Rational(35));
  EXPECT_EQ(binomial(3, 5), Rational(0));
}

// sqrt(pi) / Gamma(n + 1/2) against the floating Gamma function.
TEST(Rational, GammaDuplication) {
  const double sqrt_pi = std::sqrt(3.14159265358979323846);
  for (long n = 0; n <= 30; ++n) {
    double expected = sqrt_pi / std::tgamma(static_cast<double>(n) + 0.5);
    double got = sqrt_pi_over_gamma_half(n).get_d();
    EXPECT_NEAR(got / expected, 1.0, 1e-13) << n;
  }
}
