#include "pellpoly/algfunc.hpp"
#include "pellpoly/parse.hpp"
#include "pellpoly/ratfunc.hpp"
#include "pellpoly/series.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace pellpoly;
using testing_support::random_laurent;

namespace {

TowerContextPtr q_ctx() { return rational_tower(); }
LaurentPoly P(const char* text, const TowerContextPtr& ctx = rational_tower()) { return parse_laurent(text, ctx); }

TEST(Laurent, ArithmeticExamples) {
  EXPECT_EQ(P("t^2-1") * P("t^2+1"), P("t^4-1"));
  EXPECT_EQ(P("t^4-6*t^2+1").shift(-2), P("t^2 - 6 + t^-2"));
  EXPECT_EQ(P("((t^2-1)/2)^2 - 2*(t^4-6*t^2+1)/8"), P("t^2"));
}

TEST(Laurent, DerivativeExamples) {
  EXPECT_EQ(P("(t^2-1)/2").derivative(), P("t"));
  EXPECT_EQ(P("t^-1").derivative(), P("-t^-2"));
  EXPECT_EQ(P("(t^2-1)/2").derivative().derivative(), P("1"));
  EXPECT_TRUE(P("7").derivative().is_zero());
}

TEST(Laurent, RingAxiomsAndLeibnizRule) {
  auto ctx = make_tower(Rational(2), Rational(3));
  std::mt19937_64 rng(31337);
  LaurentPoly zero(ctx), one(ctx, Rational(1));
  for (int i = 0; i < 500; ++i) {
    auto f = random_laurent(rng, ctx, -3, 3), g = random_laurent(rng, ctx, -2, 4), h = random_laurent(rng, ctx, 0, 3);
    ASSERT_EQ(f + g, g + f);
    ASSERT_EQ(f * g, g * f);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ(f - f, zero);
    ASSERT_EQ(f * one, f);
    ASSERT_EQ((f * g).derivative(), f * g.derivative() + f.derivative() * g);
    ASSERT_EQ(f.shift(3).shift(-3), f);
    ASSERT_EQ(f.shift(2), f * LaurentPoly::monomial(ctx, 2));
  }
}

TEST(Laurent, EvaluationIsARingMap) {
  auto ctx = make_tower(Rational(2), Rational(3));
  std::mt19937_64 rng(5);
  TowerScalar x(ctx, 1, 1, 0, 0);
  for (int i = 0; i < 100; ++i) {
    auto f = random_laurent(rng, ctx, -2, 3), g = random_laurent(rng, ctx, -1, 2);
    ASSERT_EQ((f * g).evaluate(x), f.evaluate(x) * g.evaluate(x));
    ASSERT_NEAR((f * g).evaluate(1.7), f.evaluate(1.7) * g.evaluate(1.7), 1e-9 * (1 + std::abs((f * g).evaluate(1.7))));
  }
  EXPECT_THROW(P("t^-1").evaluate(TowerScalar(q_ctx())), std::domain_error);
}

TEST(Laurent, DivisionWithRemainder) {
  auto ctx = make_tower(Rational(2), Rational(3));
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    auto f = random_laurent(rng, ctx, 0, 6), g = random_laurent(rng, ctx, 0, 3);
    if (g.is_zero()) continue;
    auto [q, r] = divmod(f, g);
    ASSERT_EQ(q * g + r, f);
    ASSERT_TRUE(r.is_zero() || r.degree() < g.degree());
  }
  EXPECT_THROW(divmod(P("t"), LaurentPoly(q_ctx())), std::domain_error);
  EXPECT_THROW(divmod(P("t^-1"), P("t")), std::invalid_argument);
}

TEST(Laurent, GcdExamples) {
  EXPECT_EQ(poly_gcd(P("t^2-1"), P("t-1")), P("t-1"));
  auto quartic = P("t^4-6*t^2+1");
  EXPECT_EQ(poly_gcd(quartic, quartic.derivative()), P("1"));
  EXPECT_EQ(poly_gcd(P("3*t^2-3"), LaurentPoly(q_ctx())), P("t^2-1"));
  // t is a unit for poly_gcd but a genuine factor for gcd_polynomial
  EXPECT_EQ(poly_gcd(P("t^3"), P("t^2+t")), P("1"));
  EXPECT_EQ(gcd_polynomial(P("t^3"), P("t^2+t")), P("t"));
  EXPECT_THROW(poly_gcd(LaurentPoly(q_ctx()), LaurentPoly(q_ctx())), std::domain_error);
}

TEST(Laurent, GcdDividesBothInputs) {
  auto ctx = make_tower(Rational(2), Rational(3));
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 100; ++i) {
    auto common = random_laurent(rng, ctx, 0, 2);
    if (common.is_zero()) continue;
    auto f = common * random_laurent(rng, ctx, 0, 3), g = common * random_laurent(rng, ctx, 0, 3);
    if (f.is_zero() && g.is_zero()) continue;
    auto d = gcd_polynomial(f, g);
    ASSERT_TRUE(divides_polynomial(d, f));
    ASSERT_TRUE(divides_polynomial(d, g));
    ASSERT_TRUE(divides_polynomial(common, d * common.leading_coeff()) || common.degree() == 0);
  }
}

TEST(Laurent, SquarefreeDecompositionReconstructs) {
  auto f = P("t^3 * (t^2+1)^2 * (t-2)^3 * (t+5)");
  auto parts = squarefree_decomposition(f);
  LaurentPoly prod(q_ctx(), Rational(1));
  for (const auto& [g, m] : parts) prod = prod * pow(g, static_cast<unsigned long>(m));
  EXPECT_EQ(prod, f.monic());
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].multiplicity, 1);
  EXPECT_EQ(parts[0].factor, P("t+5"));
  EXPECT_EQ(parts[1].multiplicity, 2);
  EXPECT_EQ(parts[1].factor, P("t^2+1"));
  EXPECT_EQ(parts[2].multiplicity, 3);
  EXPECT_EQ(parts[2].factor, P("t^2-2*t"));
  EXPECT_TRUE(squarefree_decomposition(P("5")).empty());
}

TEST(Laurent, SquarefreeOverTower) {
  auto ctx = djkm_tower(Rational(2));  // sigma1 = 2, sigma2 = 3/2
  auto s1 = LaurentPoly(TowerScalar::s1(ctx));
  auto t = LaurentPoly::t(ctx);
  auto lin = t - s1;
  auto f = lin * lin * (t + s1);
  auto parts = squarefree_decomposition(f);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[1].factor, lin);
  EXPECT_EQ(parts[1].multiplicity, 2);
}

TEST(Laurent, ComposeAndTextForm) {
  EXPECT_EQ(compose(P("t^2+1"), P("t^-1")), P("t^-2+1"));
  EXPECT_EQ(P("1/2*t^4 - 2*t^2 + 1/2").to_string(), "1/2*t^4 - 2*t^2 + 1/2");
  EXPECT_EQ(P("-t^-1 + 3").to_string(), "3 - t^-1");
  EXPECT_EQ(LaurentPoly(q_ctx()).to_string(), "0");
}

TEST(Series, ProductMatchesPolynomialProductForConstants) {
  auto ctx = q_ctx();
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const int order = 6;
    std::vector<LaurentPoly> a, b;
    LaurentPoly pa(ctx), pb(ctx);
    for (int k = 0; k <= 3; ++k) {
      Rational x = testing_support::random_rational(rng), y = testing_support::random_rational(rng);
      a.emplace_back(ctx, x);
      b.emplace_back(ctx, y);
      pa += LaurentPoly::monomial(ctx, k, x);
      pb += LaurentPoly::monomial(ctx, k, y);
    }
    TruncSeries prod = TruncSeries(ctx, order, a) * TruncSeries(ctx, order, b);
    LaurentPoly expected = pa * pb;
    for (int k = 0; k <= order; ++k) ASSERT_EQ(prod[k], LaurentPoly(expected.coeff(k)));
  }
}

TEST(Series, OrderZeroComparesConstantsOnly) {
  auto ctx = q_ctx();
  TruncSeries s(ctx, 0, {P("1"), P("t")});
  EXPECT_EQ(s.order(), 0);
  EXPECT_EQ(s, TruncSeries(ctx, 0, {P("1")}));
  EXPECT_THROW(TruncSeries(ctx, -1), std::invalid_argument);
}

TEST(RationalFunc, NormalizesAndCancels) {
  RationalFunc f(P("t^2-1"), P("2*t-2"));
  EXPECT_EQ(f.num(), P("1/2*t + 1/2"));
  EXPECT_EQ(f.den(), P("1"));
  RationalFunc g(P("1"), P("t+1"));
  EXPECT_EQ(g + g, RationalFunc(P("2"), P("t+1")));
  EXPECT_EQ(g * RationalFunc(P("t+1")), RationalFunc(P("1")));
  EXPECT_EQ((g / g), RationalFunc(P("1")));
  EXPECT_EQ(g.derivative(), RationalFunc(P("-1"), P("t^2+2*t+1")));
}

class AlgFunc : public ::testing::Test {
 protected:
  // beta = 3: a1 = (t^2 - 1)/2, r = 1
  AlgFuncFieldPtr field = std::make_shared<const AlgFuncField>(P("(t^2-1)/2"), 1);
};

TEST_F(AlgFunc, WSquaredIsB) {
  auto w = AlgFuncElem::w(field);
  EXPECT_TRUE(w.square().equals_laurent(field->B));
  EXPECT_TRUE((w * AlgFuncElem::w_inverse(field)).equals_laurent(P("1")));
}

TEST_F(AlgFunc, DerivativeOfW) {
  auto w = AlgFuncElem::w(field);
  // w' w = r t^{2r-1} - a1 a1'
  EXPECT_TRUE((w.derivative() * w).equals_laurent(P("t") - field->a1 * field->a1.derivative()));
  EXPECT_TRUE(AlgFuncElem::rational(field, P("1")).apply_d().is_zero());
}

TEST_F(AlgFunc, NormForm) {
  std::mt19937_64 rng(1);
  auto ctx = q_ctx();
  for (int i = 0; i < 100; ++i) {
    auto q = random_laurent(rng, ctx, -1, 3, false), s = random_laurent(rng, ctx, -1, 3, false);
    AlgFuncElem x(field, q, s);
    ASSERT_TRUE((x * x.conj()).equals_laurent(q * q - s * s * field->B));
  }
}

TEST_F(AlgFunc, DOfWSquaredIsRational) {
  auto dw = (AlgFuncElem::w(field) * P("t^-1")).apply_d();
  EXPECT_TRUE(dw.square().w_component_zero());
}

TEST(AlgFuncField, DegenerateDerivation) {
  auto field = std::make_shared<const AlgFuncField>(P("3*t"), 1);
  EXPECT_TRUE(field->derivation_degenerate());
  EXPECT_THROW(AlgFuncElem::w(field).apply_d(), std::domain_error);
}

}  // namespace
