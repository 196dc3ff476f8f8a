#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pellpoly;
using testing_support::random_rational;
using testing_support::random_scalar;

namespace {

// Independent model: a + b*sqrt(d) over a coefficient ring T.
template <class T>
struct Quad {
  T a, b, d;
  Quad operator+(const Quad& o) const { return {a + o.a, b + o.b, d}; }
  Quad operator*(const Quad& o) const { return {a * o.a + b * o.b * d, a * o.b + b * o.a, d}; }
  bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
};

using Q2 = Quad<Rational>;
using Q4 = Quad<Q2>;

// Q(s1)(s2) as nested quadratic extensions, valid when nothing collapses.
Q4 nested(const TowerScalar& x) {
  const auto& c = x.coords();
  Rational d1 = x.context()->sigma1, d2 = x.context()->sigma2;
  Q2 lo{c[0], c[1], d1}, hi{c[2], c[3], d1};
  return {lo, hi, Q2{d2, 0, d1}};
}

struct TowerCase {
  const char* name;
  Rational sigma1, sigma2;
};

void PrintTo(const TowerCase& c, std::ostream* os) { *os << c.name; }

class TowerAxioms : public ::testing::TestWithParam<TowerCase> {};

TEST_P(TowerAxioms, FieldAxiomsOnRandomElements) {
  auto ctx = make_tower(GetParam().sigma1, GetParam().sigma2);
  std::mt19937_64 rng(12345);
  TowerScalar zero(ctx), one(ctx, Rational(1));
  for (int i = 0; i < 1000; ++i) {
    TowerScalar x = random_scalar(rng, ctx), y = random_scalar(rng, ctx), z = random_scalar(rng, ctx);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x + zero, x);
    ASSERT_EQ(x * one, x);
    ASSERT_EQ(x - x, zero);
    if (!x.is_zero()) {
      ASSERT_EQ(x * x.inverse(), one);
      ASSERT_EQ((y / x) * x, y);
    }
    // both conjugations are ring automorphisms
    ASSERT_EQ((x * y).conj1(), x.conj1() * y.conj1());
    ASSERT_EQ((x * y).conj2(), x.conj2() * y.conj2());
    ASSERT_EQ((x + y).conj2(), x.conj2() + y.conj2());
  }
}

TEST_P(TowerAxioms, RealEmbeddingIsMultiplicative) {
  auto ctx = make_tower(GetParam().sigma1, GetParam().sigma2);
  if (ctx->sigma1 < 0 || ctx->sigma2 < 0) {  // no real embedding
    EXPECT_THROW(TowerScalar::s1(ctx).to_double(), std::domain_error);
    return;
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    TowerScalar x = random_scalar(rng, ctx), y = random_scalar(rng, ctx);
    double px = x.to_double(), py = y.to_double(), pxy = (x * y).to_double();
    EXPECT_NEAR(pxy, px * py, 1e-10 * (1 + std::abs(px * py)));
    EXPECT_NEAR(x.to_double(FloatMode::Double), px, 1e-12 * (1 + std::abs(px)));
  }
}

INSTANTIATE_TEST_SUITE_P(Towers, TowerAxioms,
                         ::testing::Values(TowerCase{"generic", Rational(2), Rational(3)},
                                           TowerCase{"beta3", Rational(4), Rational(2)},
                                           TowerCase{"beta5_3", make_rational(4, 3), make_rational(4, 3)},
                                           TowerCase{"beta17", Rational(32), Rational(9)},
                                           TowerCase{"negative", Rational(-2), Rational(-3)},
                                           TowerCase{"negative_product_square", Rational(-2), Rational(-8)}),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Tower, GenericTowerMatchesNestedExtensions) {
  auto ctx = make_tower(Rational(2), Rational(3));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    TowerScalar x = random_scalar(rng, ctx), y = random_scalar(rng, ctx);
    ASSERT_EQ(nested(x * y), nested(x) * nested(y));
    ASSERT_EQ(nested(x + y), nested(x) + nested(y));
  }
}

// A collapsed tower is a quadratic field; the reduction must be a ring map
// into an independently implemented Q(sqrt d).
TEST(Tower, CollapseIsAHomomorphism) {
  struct Case {
    Rational s1, s2, d;
    std::function<Q2(const std::array<Rational, 4>&)> embed;
  };
  std::vector<Case> cases{
      // sigma1 = 4: s1 -> 2, s2 = sqrt 2
      {Rational(4), Rational(2), Rational(2),
       [](const auto& c) { return Q2{c[0] + 2 * c[1], c[2] + 2 * c[3], Rational(2)}; }},
      // sigma2 = 9: s2 -> 3, s1 = sqrt 32
      {Rational(32), Rational(9), Rational(32),
       [](const auto& c) { return Q2{c[0] + 3 * c[2], c[1] + 3 * c[3], Rational(32)}; }},
      // sigma1 = sigma2 = 4/3: s2 -> s1
      {make_rational(4, 3), make_rational(4, 3), make_rational(4, 3),
       [](const auto& c) { return Q2{c[0] + make_rational(4, 3) * c[3], c[1] + c[2], make_rational(4, 3)}; }},
  };
  std::mt19937_64 rng(2024);
  for (const auto& cs : cases) {
    auto ctx = make_tower(cs.s1, cs.s2);
    EXPECT_EQ(ctx->degree(), 2);
    for (int i = 0; i < 500; ++i) {
      // unreduced coordinates, mapped before and after tower arithmetic
      std::array<Rational, 4> cx{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
      std::array<Rational, 4> cy{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
      TowerScalar x(ctx, cx[0], cx[1], cx[2], cx[3]), y(ctx, cy[0], cy[1], cy[2], cy[3]);
      ASSERT_EQ(cs.embed((x * y).coords()), cs.embed(cx) * cs.embed(cy));
      ASSERT_EQ(cs.embed((x + y).coords()), cs.embed(cx) + cs.embed(cy));
      ASSERT_EQ(cs.embed(x.coords()), cs.embed(cx));
    }
  }
}

TEST(Tower, CollapseExamples) {
  auto beta3 = djkm_tower(Rational(3));
  EXPECT_EQ(TowerScalar::s1(beta3), TowerScalar(beta3, Rational(2)));
  auto beta53 = djkm_tower(make_rational(5, 3));
  EXPECT_EQ(TowerScalar::s2(beta53), TowerScalar::s1(beta53));
  auto beta17 = djkm_tower(Rational(17));
  EXPECT_EQ(TowerScalar::s2(beta17), TowerScalar(beta17, Rational(3)));
  auto generic = make_tower(Rational(2), Rational(3));
  EXPECT_EQ(generic->degree(), 4);
  EXPECT_EQ(TowerScalar::s1(generic) * TowerScalar::s1(generic), TowerScalar(generic, Rational(2)));
}

TEST(Tower, Errors) {
  EXPECT_THROW(make_tower(Rational(0), Rational(1)), std::domain_error);
  auto a = make_tower(Rational(2), Rational(3));
  auto b = make_tower(Rational(5), Rational(3));
  EXPECT_THROW(TowerScalar(a, Rational(1)) + TowerScalar(b, Rational(1)), context_mismatch);
  EXPECT_THROW(TowerScalar(a).inverse(), std::domain_error);
  EXPECT_THROW(TowerScalar::s1(make_tower(Rational(-2), Rational(3))).to_double(), std::domain_error);
  // same radicands in separate contexts are compatible
  auto c = make_tower(Rational(2), Rational(3));
  EXPECT_EQ(TowerScalar::s1(a) * TowerScalar::s2(c), TowerScalar(a, 0, 0, 0, 1));
}

TEST(Tower, TextForm) {
  auto ctx = make_tower(Rational(2), Rational(3));
  EXPECT_EQ(TowerScalar(ctx, make_rational(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ(TowerScalar::s2(ctx).to_string(), "s2");
  EXPECT_EQ(TowerScalar(ctx, 1, 1, 0, 0).to_string(), "(1 + s1)");
  EXPECT_EQ(TowerScalar(ctx, 0, 0, 0, -2).to_string(), "-2*s1*s2");
}

}  // namespace
