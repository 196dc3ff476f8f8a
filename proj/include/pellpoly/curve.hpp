#ifndef PELLPOLY_CURVE_HPP
#define PELLPOLY_CURVE_HPP

// The ring R2(p) = K[t, t^-1, u] / (u^2 - p): configurations (p, a1, b0),
// elements f + g u, and the four DJKM units.

#include "laurent.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace pellpoly {

class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PellConfig {
  TowerContextPtr tower;
  LaurentPoly p;
  LaurentPoly a1;
  LaurentPoly b0;
  LaurentPoly pell_norm;       // a1^2 - b0^2 p
  std::optional<long> r;       // set iff pell_norm == t^{2r} exactly
  std::optional<Rational> beta;  // set for DJKM configurations
  bool degenerate = false;     // pell_norm vanishes (p is a square)
  bool odd_norm_exponent = false;  // pell_norm == c t^k with k odd
  bool separable = true;       // p squarefree as a genuine polynomial

  bool is_djkm() const { return beta.has_value(); }
  bool b0_constant() const { return b0.is_constant(); }
};

using PellConfigPtr = std::shared_ptr<const PellConfig>;

namespace detail {

inline void classify_norm(PellConfig& cfg) {
  cfg.pell_norm = cfg.a1 * cfg.a1 - cfg.b0 * cfg.b0 * cfg.p;
  cfg.degenerate = cfg.pell_norm.is_zero();
  if (cfg.pell_norm.is_monomial()) {
    long k = cfg.pell_norm.degree();
    if (k % 2 != 0) cfg.odd_norm_exponent = true;
    if (k >= 0 && k % 2 == 0 && cfg.pell_norm.leading_coeff().is_one()) cfg.r = k / 2;
  }
  if (cfg.p.is_polynomial() && cfg.p.degree() > 0) {
    LaurentPoly g = gcd_polynomial(cfg.p, cfg.p.derivative());
    cfg.separable = g.degree() == 0;
  }
}

}  // namespace detail

/// p, a1, b0 given directly; r is detected from a1^2 - b0^2 p.
inline PellConfigPtr custom_config(const LaurentPoly& p, const LaurentPoly& a1, const LaurentPoly& b0) {
  if (p.is_zero()) throw config_error("p must be nonzero");
  auto cfg = std::make_shared<PellConfig>();
  cfg->tower = p.context();
  cfg->p = p;
  cfg->a1 = a1;
  cfg->b0 = b0;
  if (cfg->a1.is_zero()) cfg->a1 = LaurentPoly(cfg->tower);
  if (cfg->b0.is_zero()) cfg->b0 = LaurentPoly(cfg->tower);
  detail::classify_norm(*cfg);
  return cfg;
}

/// Tower Q(sqrt(2(beta-1)), sqrt((beta+1)/2)) holding every DJKM constant.
inline TowerContextPtr djkm_tower(const Rational& beta) {
  if (beta == 1 || beta == -1) throw config_error("beta must differ from 1 and -1");
  return make_tower(2 * (beta - 1), (beta + 1) / 2);
}

/// p = (t^4 - 2 beta t^2 + 1)/(beta^2 - 1), a1 = (t^2 - 1)/sqrt(2(beta-1)),
/// b0 = sqrt((beta+1)/2).
inline PellConfigPtr djkm_config(const Rational& beta) {
  auto ctx = djkm_tower(beta);
  Rational d = beta * beta - 1;
  LaurentPoly p = LaurentPoly::from_rationals(ctx, {Rational(1) / d, 0, -2 * beta / d, 0, Rational(1) / d});
  // 1/s1 = s1/sigma1
  TowerScalar inv_s1 = TowerScalar::s1(ctx) * (Rational(1) / ctx->sigma1);
  LaurentPoly a1 = LaurentPoly::from_rationals(ctx, {-1, 0, 1}) * inv_s1;
  LaurentPoly b0(TowerScalar::s2(ctx));
  auto cfg = std::make_shared<PellConfig>();
  cfg->tower = ctx;
  cfg->p = p;
  cfg->a1 = a1;
  cfg->b0 = b0;
  cfg->beta = beta;
  detail::classify_norm(*cfg);
  return cfg;
}

/// p = t^2 - 1, a1 = t, b0 = 1: the Chebyshev baseline (r = 0).
inline PellConfigPtr chebyshev_config() {
  auto ctx = rational_tower();
  return custom_config(LaurentPoly::from_rationals(ctx, {-1, 0, 1}), LaurentPoly::t(ctx),
                       LaurentPoly(ctx, Rational(1)));
}

/// q(t) = (t^2 - beta)/sqrt(beta^2 - 1), with q^2 - 1 = p.
inline LaurentPoly djkm_q(const PellConfig& cfg) {
  if (!cfg.beta) throw config_error("not a DJKM configuration");
  const auto& ctx = cfg.tower;
  Rational d = *cfg.beta * *cfg.beta - 1;
  TowerScalar inv_root = TowerScalar(ctx, 0, 0, 0, 1) * (Rational(1) / d);  // 1/(s1 s2)
  return LaurentPoly::from_rationals(ctx, {-*cfg.beta, 0, 1}) * inv_root;
}

class CurveElem {
 public:
  CurveElem(PellConfigPtr cfg, LaurentPoly f, LaurentPoly g)
      : cfg_(std::move(cfg)), f_(std::move(f)), g_(std::move(g)) {}
  static CurveElem one(PellConfigPtr cfg) {
    LaurentPoly one(cfg->tower, Rational(1));
    LaurentPoly zero(cfg->tower);
    return {std::move(cfg), one, zero};
  }
  static CurveElem scalar(PellConfigPtr cfg, const LaurentPoly& f) {
    LaurentPoly zero(cfg->tower);
    return {std::move(cfg), f, zero};
  }

  const LaurentPoly& f() const { return f_; }
  const LaurentPoly& g() const { return g_; }
  const PellConfigPtr& config() const { return cfg_; }

  friend CurveElem operator*(const CurveElem& x, const CurveElem& y) {
    x.check(y);
    LaurentPoly f = x.f_ * y.f_ + x.g_ * y.g_ * x.cfg_->p;
    LaurentPoly g = x.f_ * y.g_ + x.g_ * y.f_;
    return {x.cfg_, std::move(f), std::move(g)};
  }
  friend CurveElem operator*(const CurveElem& x, const LaurentPoly& c) { return {x.cfg_, x.f_ * c, x.g_ * c}; }
  friend CurveElem operator*(const CurveElem& x, const TowerScalar& c) { return {x.cfg_, x.f_ * c, x.g_ * c}; }
  friend CurveElem operator+(const CurveElem& x, const CurveElem& y) {
    x.check(y);
    return {x.cfg_, x.f_ + y.f_, x.g_ + y.g_};
  }
  friend CurveElem operator-(const CurveElem& x, const CurveElem& y) {
    x.check(y);
    return {x.cfg_, x.f_ - y.f_, x.g_ - y.g_};
  }
  friend bool operator==(const CurveElem& x, const CurveElem& y) {
    x.check(y);
    return x.f_ == y.f_ && x.g_ == y.g_;
  }
  friend bool operator!=(const CurveElem& x, const CurveElem& y) { return !(x == y); }

  CurveElem conj() const { return {cfg_, f_, -g_}; }
  LaurentPoly norm() const { return f_ * f_ - g_ * g_ * cfg_->p; }

  /// Inverse when the norm is a monomial c t^k (units of R2(p)).
  CurveElem unit_inverse() const {
    LaurentPoly n = norm();
    if (!n.is_monomial()) throw std::domain_error("element is not a unit: norm is not a monomial");
    LaurentPoly inv(n.leading_coeff().inverse(), -n.degree());
    return conj() * inv;
  }

  std::string to_string() const { return "(" + f_.to_string() + ") + (" + g_.to_string() + ")*u"; }

 private:
  void check(const CurveElem& o) const {
    if (cfg_ != o.cfg_ && !(cfg_->tower->same_as(*o.cfg_->tower) && cfg_->p == o.cfg_->p))
      throw std::logic_error("curve elements from different configurations");
  }

  PellConfigPtr cfg_;
  LaurentPoly f_;
  LaurentPoly g_;
};

/// Binary exponentiation; negative exponents use unit_inverse().
inline CurveElem pow(const CurveElem& x, long e) {
  CurveElem base = e >= 0 ? x : x.unit_inverse();
  unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
  CurveElem r = CurveElem::one(x.config());
  while (k != 0) {
    if (k & 1UL) r = r * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return r;
}

struct DjkmUnits {
  std::array<CurveElem, 4> lambda;
  const CurveElem& operator[](std::size_t i) const { return lambda[i]; }
};

/// lambda_0 .. lambda_3 of the DJKM ring.
inline DjkmUnits djkm_units(const PellConfigPtr& cfg) {
  if (!cfg->beta) throw config_error("DJKM units need a DJKM configuration");
  const auto& ctx = cfg->tower;
  const Rational& beta = *cfg->beta;
  const Rational& sigma1 = ctx->sigma1;
  const Rational& sigma2 = ctx->sigma2;
  LaurentPoly one(ctx, Rational(1));
  // 1/sqrt(beta^2-1) = s1 s2 / (sigma1 sigma2)
  TowerScalar inv_s1s2 = TowerScalar(ctx, 0, 0, 0, 1) * (Rational(1) / (sigma1 * sigma2));
  // 1/sqrt(2(beta+1)) = 1/(2 s2) = s2 / (2 sigma2)
  TowerScalar inv_2s2 = TowerScalar::s2(ctx) * (Rational(1) / (2 * sigma2));
  // sqrt((beta-1)/2) = s1/2
  TowerScalar half_s1 = TowerScalar::s1(ctx) * Rational(1, 2);

  CurveElem l0(cfg, LaurentPoly::from_rationals(ctx, {-beta, 0, 1}) * inv_s1s2, one);
  CurveElem l1(cfg, LaurentPoly::from_rationals(ctx, {1, 0, 1}) * inv_2s2, LaurentPoly(half_s1));
  CurveElem l2(cfg, cfg->a1, cfg->b0);
  CurveElem l3(cfg, LaurentPoly::from_rationals(ctx, {-1, 0, beta}) * inv_s1s2, one);
  return DjkmUnits{{l0, l1, l2, l3}};
}

struct UnitExponents {
  TowerScalar c;
  long i = 0;  // power of t
  long j = 0;  // power of lambda_1
  long k = 0;  // power of lambda_2
};

/// Writes x = c t^i lambda_1^j lambda_2^k, searching |j|, |k| <= bound.
inline std::optional<UnitExponents> unit_exponent_form(const CurveElem& x, long bound) {
  const auto& cfg = x.config();
  DjkmUnits units = djkm_units(cfg);
  for (long j = -bound; j <= bound; ++j) {
    CurveElem y1 = x * pow(units[1], -j);
    for (long k = -bound; k <= bound; ++k) {
      CurveElem y = y1 * pow(units[2], -k);
      if (y.g().is_zero() && y.f().is_monomial())
        return UnitExponents{y.f().leading_coeff(), y.f().degree(), j, k};
    }
  }
  return std::nullopt;
}

/// Checks the five relations among lambda_0..lambda_3.
struct UnitRelationReport {
  bool l0_norm = false;      // lambda_0 conj = 1
  bool l1_norm = false;      // lambda_1 conj = t^2
  bool l2_norm = false;      // lambda_2 conj = t^2
  bool l1_l2 = false;        // lambda_1 lambda_2 = t^2 lambda_0
  bool l1_conj_l2 = false;   // lambda_1 conj(lambda_2) = conj(lambda_3)
  // The same product against lambda_3 itself. It differs from lambda_3 by
  // the sign of u, so this is expected false; kept for reporting.
  bool l1_conj_l2_unconjugated = false;
  bool all() const { return l0_norm && l1_norm && l2_norm && l1_l2 && l1_conj_l2; }
};

inline UnitRelationReport check_unit_relations(const PellConfigPtr& cfg) {
  DjkmUnits u = djkm_units(cfg);
  const auto& ctx = cfg->tower;
  LaurentPoly t2 = LaurentPoly::monomial(ctx, 2);
  UnitRelationReport rep;
  rep.l0_norm = (u[0] * u[0].conj()) == CurveElem::scalar(cfg, LaurentPoly(ctx, Rational(1)));
  rep.l1_norm = (u[1] * u[1].conj()) == CurveElem::scalar(cfg, t2);
  rep.l2_norm = (u[2] * u[2].conj()) == CurveElem::scalar(cfg, t2);
  rep.l1_l2 = (u[1] * u[2]) == u[0] * t2;
  CurveElem prod = u[1] * u[2].conj();
  rep.l1_conj_l2 = prod == u[3].conj();
  rep.l1_conj_l2_unconjugated = prod == u[3];
  return rep;
}

}  // namespace pellpoly

#endif  // PELLPOLY_CURVE_HPP
