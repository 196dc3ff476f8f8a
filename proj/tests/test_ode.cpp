#include "pellpoly/family.hpp"
#include "pellpoly/ode.hpp"
#include "pellpoly/parse.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace pellpoly;
using testing_support::test_betas;
using testing_support::test_configs;

namespace {

PellFamily extended(const PellConfigPtr& cfg, long n) {
  PellFamily fam(cfg);
  fam.extend(n);
  return fam;
}

TEST(Ode, GeneralExamples) {
  auto cfg3 = djkm_config(Rational(3));
  auto fam3 = extended(cfg3, 4);
  EXPECT_TRUE(apply(build_general(*cfg3, 1, OdeKind::GeneralA), fam3.a(1)).is_zero());
  EXPECT_TRUE(apply(build_general(*cfg3, 1, OdeKind::GeneralA, OdeForm::Printed), fam3.a(1)).is_zero());
  for (const auto& cfg : test_configs()) {
    auto op = build_general(*cfg, 0, OdeKind::GeneralA);
    EXPECT_TRUE(apply(op, LaurentPoly(cfg->tower, Rational(1))).is_zero());
  }
  auto cfg53 = djkm_config(make_rational(5, 3));
  auto fam53 = extended(cfg53, 4);
  EXPECT_TRUE(apply(build_general(*cfg53, 4, OdeKind::GeneralB), fam53.b(4)).is_zero());
}

TEST(Ode, DjkmExamples) {
  auto cfg = djkm_config(Rational(3));
  const auto& ctx = cfg->tower;
  auto fam = extended(cfg, 4);
  EXPECT_EQ(fam.b(2), cfg->b0 * parse_laurent("t^4-3*t^2+1", ctx));
  EXPECT_TRUE(apply(build_djkm(*cfg, 2, OdeKind::DjkmB), fam.b(2)).is_zero());
  EXPECT_TRUE(apply(build_djkm(*cfg, 1, OdeKind::DjkmB), fam.b(1)).is_zero());
  EXPECT_FALSE(apply(build_djkm(*cfg, 1, OdeKind::DjkmB), fam.b(2)).is_zero());
  EXPECT_TRUE(apply(build_djkm(*cfg, 2, OdeKind::DjkmA, OdeForm::Derived), fam.a(2)).is_zero());
  EXPECT_TRUE(apply(build_djkm(*cfg, 0, OdeKind::DjkmA), LaurentPoly(ctx, Rational(1))).is_zero());
  EXPECT_TRUE(apply(build_djkm(*cfg, 2, OdeKind::DjkmB), LaurentPoly(ctx)).is_zero());
}

TEST(Ode, DjkmBDegrees) {
  auto cfg = djkm_config(Rational(3));
  auto op = build_djkm(*cfg, 5, OdeKind::DjkmB);
  EXPECT_EQ(op.c2.degree(), 7);
  EXPECT_EQ(op.c1.degree(), 6);
  EXPECT_EQ(op.c0.degree(), 5);
  EXPECT_EQ(op.c2.low_degree(), 1);
}

// The displayed y' and y coefficients of the DJKM a-side operator do not
// annihilate a_n for n >= 1; the corrected ones do.
TEST(Ode, DisplayedDjkmAFails) {
  for (const auto& beta : test_betas()) {
    auto cfg = djkm_config(beta);
    auto fam = extended(cfg, 8);
    for (long n = 1; n <= 8; ++n) {
      EXPECT_FALSE(apply(build_djkm(*cfg, n, OdeKind::DjkmA, OdeForm::Printed), fam.a(n)).is_zero()) << n;
      EXPECT_TRUE(apply(build_djkm(*cfg, n, OdeKind::DjkmA, OdeForm::Derived), fam.a(n)).is_zero()) << n;
    }
  }
}

// The displayed general b-side operator fails as soon as r != 0.
TEST(Ode, DisplayedGeneralBNeedsRZero) {
  auto cfg = djkm_config(Rational(3));
  auto fam = extended(cfg, 6);
  for (long n = 1; n <= 6; ++n)
    EXPECT_FALSE(apply(build_general(*cfg, n, OdeKind::GeneralB, OdeForm::Printed), fam.b(n)).is_zero()) << n;
  auto cheb = chebyshev_config();
  auto fc = extended(cheb, 6);
  for (long n = 0; n <= 6; ++n)
    EXPECT_TRUE(apply(build_general(*cheb, n, OdeKind::GeneralB, OdeForm::Printed), fc.b(n)).is_zero()) << n;
}

// Corrected DJKM a-side and displayed b-side operators agree with the
// pulled-back general operators up to a constant factor.
TEST(Ode, DjkmOperatorsProportionalToPullback) {
  auto proportional = [](const OdeOperator& x, const OdeOperator& y) {
    TowerScalar k = y.c2.leading_coeff() * x.c2.leading_coeff().inverse();
    return x.c2 * k == y.c2 && x.c1 * k == y.c1 && x.c0 * k == y.c0;
  };
  for (const auto& beta : test_betas()) {
    auto cfg = djkm_config(beta);
    for (long n = 0; n <= 6; ++n) {
      EXPECT_TRUE(proportional(build_djkm(*cfg, n, OdeKind::DjkmA, OdeForm::Derived),
                               build_general(*cfg, n, OdeKind::GeneralA)));
      EXPECT_TRUE(proportional(build_djkm(*cfg, n, OdeKind::DjkmB), build_general(*cfg, n, OdeKind::GeneralB)));
    }
  }
}

TEST(Ode, AnnihilationAllConfigs) {
  for (const auto& cfg : test_configs()) {
    auto fam = extended(cfg, 33);
    for (long n = 0; n <= 32; n += (n < 8 ? 1 : 6)) {
      auto ga = build_general(*cfg, n, OdeKind::GeneralA);
      auto gb = build_general(*cfg, n, OdeKind::GeneralB);
      EXPECT_TRUE(apply(ga, fam.a(n)).is_zero()) << n;
      EXPECT_TRUE(apply(gb, fam.b(n)).is_zero()) << n;
      if (n >= 1) {
        EXPECT_FALSE(apply(ga, fam.a(n + 1)).is_zero()) << n;
        EXPECT_FALSE(apply(gb, fam.b(n - 1)).is_zero()) << n;
      }
      if (cfg->is_djkm()) {
        auto da = build_djkm(*cfg, n, OdeKind::DjkmA, OdeForm::Derived);
        auto db = build_djkm(*cfg, n, OdeKind::DjkmB);
        EXPECT_TRUE(apply(da, fam.a(n)).is_zero()) << n;
        EXPECT_TRUE(apply(db, fam.b(n)).is_zero()) << n;
        EXPECT_FALSE(apply(db, fam.b(n + 1)).is_zero()) << n;
      }
    }
  }
}

TEST(Ode, BuildErrors) {
  auto cheb = chebyshev_config();
  EXPECT_THROW(build_djkm(*cheb, 2, OdeKind::DjkmA), config_error);
  EXPECT_THROW(build_general(*cheb, 2, OdeKind::DjkmB), std::invalid_argument);
  auto nor = custom_config(parse_laurent("t^4+1"), parse_laurent("t^2+1"), parse_laurent("1"));
  EXPECT_THROW(build_general(*nor, 2, OdeKind::GeneralA), config_error);
  OdeOperator zero;
  zero.c2 = LaurentPoly(rational_tower());
  EXPECT_THROW(clear_t_power(zero), std::domain_error);
}

TEST(Ode, FuchsianDjkm) {
  auto cfg = djkm_config(Rational(3));
  auto rep_b = classify_fuchsian(build_djkm(*cfg, 3, OdeKind::DjkmB));
  EXPECT_TRUE(rep_b.fuchsian);
  EXPECT_TRUE(rep_b.infinity_regular);
  ASSERT_EQ(rep_b.finite_factors.size(), 3u);
  for (const auto& f : rep_b.finite_factors) {
    EXPECT_EQ(f.multiplicity, 1);
    EXPECT_TRUE(f.regular);
  }
  EXPECT_EQ(rep_b.deg_c2, 7);
  EXPECT_EQ(rep_b.deg_c1, 6);
  EXPECT_EQ(rep_b.deg_c0, 5);
  EXPECT_TRUE(classify_fuchsian(build_djkm(*cfg, 3, OdeKind::DjkmA)).fuchsian);
  EXPECT_TRUE(classify_fuchsian(build_djkm(*cfg, 3, OdeKind::DjkmA, OdeForm::Derived)).fuchsian);
  for (const auto& beta : test_betas()) {
    auto c = djkm_config(beta);
    for (long n = 0; n <= 32; n += 4) {
      EXPECT_TRUE(classify_fuchsian(build_djkm(*c, n, OdeKind::DjkmB)).fuchsian);
      EXPECT_TRUE(classify_fuchsian(build_djkm(*c, n, OdeKind::DjkmA, OdeForm::Derived)).fuchsian);
      EXPECT_TRUE(classify_fuchsian(build_general(*c, n, OdeKind::GeneralA)).fuchsian);
    }
  }
}

TEST(Ode, NonFuchsianExamples) {
  auto ctx = rational_tower();
  OdeOperator op;
  op.c2 = parse_laurent("t^2");
  op.c1 = parse_laurent("1");
  op.c0 = LaurentPoly(ctx);
  auto rep = classify_fuchsian(op);
  EXPECT_FALSE(rep.fuchsian);
  ASSERT_EQ(rep.finite_factors.size(), 1u);
  EXPECT_EQ(rep.finite_factors[0].multiplicity, 2);
  EXPECT_FALSE(rep.finite_factors[0].regular);

  // y'' + y: irregular at infinity only
  OdeOperator inf;
  inf.c2 = parse_laurent("1");
  inf.c1 = LaurentPoly(ctx);
  inf.c0 = parse_laurent("1");
  auto ri = classify_fuchsian(inf);
  EXPECT_TRUE(ri.finite_factors.empty());
  EXPECT_FALSE(ri.infinity_regular);
  EXPECT_FALSE(ri.fuchsian);

  // Euler operator t^2 y'' + t y' - y is Fuchsian
  OdeOperator euler;
  euler.c2 = parse_laurent("t^2");
  euler.c1 = parse_laurent("t");
  euler.c0 = parse_laurent("-1");
  EXPECT_TRUE(classify_fuchsian(euler).fuchsian);
}

TEST(Ode, FuchsianInvariantUnderCommonMultiplier) {
  std::mt19937_64 rng(77);
  auto cfg = djkm_config(Rational(3));
  const auto& ctx = cfg->tower;
  std::vector<OdeOperator> ops = {build_djkm(*cfg, 3, OdeKind::DjkmB), build_djkm(*cfg, 4, OdeKind::DjkmA)};
  OdeOperator bad;
  bad.c2 = parse_laurent("t^2", ctx);
  bad.c1 = parse_laurent("1", ctx);
  bad.c0 = LaurentPoly(ctx);
  ops.push_back(bad);
  int tried = 0;
  while (tried < 30) {
    LaurentPoly m = testing_support::random_laurent(rng, ctx, 0, 2, false);
    if (m.is_zero() || !m.is_polynomial()) continue;
    if (gcd_polynomial(m, ops[0].c2).degree() > 0) continue;
    ++tried;
    for (const auto& op : ops) {
      auto base = classify_fuchsian(op);
      OdeOperator scaled = op;
      scaled.c2 = op.c2 * m;
      scaled.c1 = op.c1 * m;
      scaled.c0 = op.c0 * m;
      auto rep = classify_fuchsian(scaled);
      EXPECT_EQ(rep.fuchsian, base.fuchsian) << m.to_string();
      EXPECT_EQ(rep.infinity_regular, base.infinity_regular) << m.to_string();
    }
  }
}

TEST(Ode, SingularPointsBeta3) {
  auto cfg = djkm_config(Rational(3));
  auto pts = singular_points_numeric(build_djkm(*cfg, 3, OdeKind::DjkmB));
  const double s = std::sqrt(2.0);
  std::vector<std::complex<double>> expect = {
      {-s - 1, 0}, {-s + 1, 0}, {0, -1}, {0, 0}, {0, 1}, {s - 1, 0}, {s + 1, 0}};
  ASSERT_EQ(pts.size(), expect.size());
  for (const auto& e : expect) {
    double best = 1e300;
    for (const auto& p : pts) best = std::min(best, std::abs(p - e));
    EXPECT_LT(best, 1e-10) << e;
  }
}

TEST(Ode, PolynomialRootsSmall) {
  auto r = polynomial_roots({-1.0, 0.0, 1.0});
  ASSERT_EQ(r.size(), 2u);
  std::sort(r.begin(), r.end(), [](auto x, auto y) { return x.real() < y.real(); });
  EXPECT_NEAR(r[0].real(), -1.0, 1e-12);
  EXPECT_NEAR(r[1].real(), 1.0, 1e-12);
  auto z = polynomial_roots({0.0, 1.0});
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], std::complex<double>(0.0, 0.0));
  EXPECT_TRUE(polynomial_roots({5.0}).empty());
}

}  // namespace
