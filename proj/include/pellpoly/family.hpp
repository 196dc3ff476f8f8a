#ifndef PELLPOLY_FAMILY_HPP
#define PELLPOLY_FAMILY_HPP

// The Pell families a_n, b_n defined by a_n + b_{n-1} u = (a1 + b0 u)^n,
// their classical companions, and exact checks of the identities they obey.

#include "algfunc.hpp"
#include "curve.hpp"
#include "laurent.hpp"
#include "series.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pellpoly {

class PellFamily {
 public:
  explicit PellFamily(PellConfigPtr cfg) : cfg_(std::move(cfg)) {
    a_.push_back(LaurentPoly(cfg_->tower, Rational(1)));
    a_.push_back(cfg_->a1);
    b_.push_back(cfg_->b0);
  }

  const PellConfigPtr& config() const { return cfg_; }
  const PellConfig& cfg() const { return *cfg_; }

  /// Populates a_0..a_n and b_0..b_n by the three-term recurrences.
  /// Not reentrant; readers may share the family once extension is done.
  void extend(long n) {
    if (n < 0) throw std::invalid_argument("extend: n must be non-negative");
    const auto& N = cfg_->pell_norm;
    LaurentPoly two_a1 = cfg_->a1 * Rational(2);
    while (static_cast<long>(a_.size()) <= n) {
      std::size_t k = a_.size();
      a_.push_back(two_a1 * a_[k - 1] - N * a_[k - 2]);
    }
    while (static_cast<long>(b_.size()) <= n) {
      std::size_t k = b_.size();
      LaurentPoly next = two_a1 * b_[k - 1];
      if (k >= 2) next -= N * b_[k - 2];
      b_.push_back(std::move(next));
    }
  }

  /// Largest index available for both families.
  long extent() const { return static_cast<long>(std::min(a_.size(), b_.size())) - 1; }

  const LaurentPoly& a(long n) const {
    if (n < 0 || n >= static_cast<long>(a_.size())) throw std::out_of_range("a_n not extended to n=" + std::to_string(n));
    return a_[static_cast<std::size_t>(n)];
  }
  /// b_{-1} = 0 by convention.
  LaurentPoly b(long n) const {
    if (n == -1) return LaurentPoly(cfg_->tower);
    if (n < -1 || n >= static_cast<long>(b_.size())) throw std::out_of_range("b_n not extended to n=" + std::to_string(n));
    return b_[static_cast<std::size_t>(n)];
  }

 private:
  PellConfigPtr cfg_;
  std::vector<LaurentPoly> a_;
  std::vector<LaurentPoly> b_;
};

// ---------------------------------------------------------------------------
// Classical polynomials in one variable (the Laurent variable t plays z).

struct ChebFamily {
  std::vector<LaurentPoly> T;
  std::vector<LaurentPoly> U;

  ChebFamily(const TowerContextPtr& ctx, long n) {
    LaurentPoly z = LaurentPoly::t(ctx);
    LaurentPoly two_z = z * Rational(2);
    T = {LaurentPoly(ctx, Rational(1)), z};
    U = {LaurentPoly(ctx, Rational(1)), two_z};
    for (long k = 2; k <= n; ++k) {
      T.push_back(two_z * T.back() - T[T.size() - 2]);
      U.push_back(two_z * U.back() - U[U.size() - 2]);
    }
    T.resize(static_cast<std::size_t>(std::max(n, 0L)) + 1, LaurentPoly(ctx));
    U.resize(static_cast<std::size_t>(std::max(n, 0L)) + 1, LaurentPoly(ctx));
  }
};

/// Jacobi P_n^{(alpha, beta)} for n = 0..n_max from the standard recurrence.
inline std::vector<LaurentPoly> jacobi_polynomials(const TowerContextPtr& ctx, const Rational& alpha,
                                                   const Rational& beta, long n_max) {
  LaurentPoly z = LaurentPoly::t(ctx);
  std::vector<LaurentPoly> P{LaurentPoly(ctx, Rational(1))};
  if (n_max >= 1) {
    // P_1 = (alpha + 1) + (alpha + beta + 2)(z - 1)/2
    LaurentPoly p1 = LaurentPoly(ctx, alpha + 1) +
                     (z - LaurentPoly(ctx, Rational(1))) * ((alpha + beta + 2) / 2);
    P.push_back(p1);
  }
  for (long n = 2; n <= n_max; ++n) {
    Rational s = 2 * n + alpha + beta;
    Rational lead = 2 * n * (n + alpha + beta) * (s - 2);
    Rational c1 = (s - 1) * s * (s - 2);
    Rational c0 = (s - 1) * (alpha * alpha - beta * beta);
    Rational c2 = 2 * (n + alpha - 1) * (n + beta - 1) * s;
    LaurentPoly next = (z * c1 + LaurentPoly(ctx, c0)) * P[static_cast<std::size_t>(n) - 1] -
                       P[static_cast<std::size_t>(n) - 2] * c2;
    P.push_back(next * (Rational(1) / lead));
  }
  return P;
}

/// Gegenbauer C_n^{(lambda)} for lambda != 0.
inline std::vector<LaurentPoly> gegenbauer_polynomials(const TowerContextPtr& ctx, const Rational& lambda,
                                                       long n_max) {
  if (lambda == 0) throw std::invalid_argument("use gegenbauer_limit_polynomials for lambda = 0");
  LaurentPoly z = LaurentPoly::t(ctx);
  std::vector<LaurentPoly> C{LaurentPoly(ctx, Rational(1))};
  if (n_max >= 1) C.push_back(z * (2 * lambda));
  for (long n = 2; n <= n_max; ++n) {
    LaurentPoly next = z * (2 * (n + lambda - 1)) * C[static_cast<std::size_t>(n) - 1] -
                       C[static_cast<std::size_t>(n) - 2] * (n + 2 * lambda - 2);
    C.push_back(next * Rational(1, n));
  }
  return C;
}

/// lim_{lambda -> 0} C_n^{(lambda)} / lambda for n >= 1 (index 0 unused, set to 0).
inline std::vector<LaurentPoly> gegenbauer_limit_polynomials(const TowerContextPtr& ctx, long n_max) {
  LaurentPoly z = LaurentPoly::t(ctx);
  std::vector<LaurentPoly> C{LaurentPoly(ctx)};
  if (n_max >= 1) C.push_back(z * Rational(2));
  if (n_max >= 2) C.push_back(z * z * Rational(2) - LaurentPoly(ctx, Rational(1)));
  for (long n = 3; n <= n_max; ++n) {
    LaurentPoly next = z * (2 * (n - 1)) * C[static_cast<std::size_t>(n) - 1] -
                       C[static_cast<std::size_t>(n) - 2] * (n - 2);
    C.push_back(next * Rational(1, n));
  }
  return C;
}

/// Terminating 2F1(a, b; c; x) as a polynomial in x; a must be a non-positive integer.
inline LaurentPoly hypergeometric_2f1(const TowerContextPtr& ctx, long a, const Rational& b,
                                      const Rational& c, const LaurentPoly& x) {
  if (a > 0) throw std::invalid_argument("2F1 terminates only for non-positive integer a");
  LaurentPoly sum(ctx, Rational(1));
  LaurentPoly xk(ctx, Rational(1));
  Rational term(1);
  for (long k = 0; k < -a; ++k) {
    term *= Rational(a + k) * (b + k) / ((c + k) * (k + 1));
    xk = xk * x;
    sum += xk * term;
  }
  return sum;
}

/// t^{r n} P(a1 / t^r) for a polynomial P in z of degree at most n.
inline LaurentPoly homogenize(const LaurentPoly& P, long n, const LaurentPoly& a1, long r) {
  return compose(P, a1.shift(-r)).shift(r * n);
}

// ---------------------------------------------------------------------------
// Exact checks. Each takes a family already extended far enough and throws
// std::out_of_range otherwise.

inline CurveElem power_oracle(const PellFamily& fam, long n) {
  CurveElem base(fam.config(), fam.cfg().a1, fam.cfg().b0);
  return pow(base, n);
}

/// (a1 + b0 u)^n == a_n + b_{n-1} u.
inline bool check_power_oracle(const PellFamily& fam, long n) {
  CurveElem x = power_oracle(fam, n);
  return x.f() == fam.a(n) && x.g() == fam.b(n - 1);
}

/// 2 a_n = lambda^n + conj(lambda^n) and 2 u b_{n-1} = lambda^n - conj(lambda^n).
inline bool verify_closed_forms(const PellFamily& fam, long n) {
  CurveElem x = power_oracle(fam, n);
  const auto& cfg = fam.config();
  LaurentPoly zero(cfg->tower);
  CurveElem sum = x + x.conj();
  CurveElem diff = x - x.conj();
  return sum == CurveElem(cfg, fam.a(n) * Rational(2), zero) &&
         diff == CurveElem(cfg, zero, fam.b(n - 1) * Rational(2));
}

/// a_n^2 - b_{n-1}^2 p = (a1^2 - b0^2 p)^n.
inline bool verify_pell(const PellFamily& fam, long n) {
  const auto& c = fam.cfg();
  LaurentPoly lhs = fam.a(n) * fam.a(n) - fam.b(n - 1) * fam.b(n - 1) * c.p;
  return lhs == pow(c.pell_norm, static_cast<unsigned long>(n));
}

struct GeneratingFunctionReport {
  bool ordinary_a = false;     // (1 - 2 a1 x + N x^2) sum a_n x^n = 1 - a1 x
  bool ordinary_b = false;     // (1 - 2 a1 x + N x^2) sum b_n x^n = b0
  bool unit_sums_a = false;    // x = 1 specialization of the a-series, finite form
  bool unit_sums_b = false;
  bool logarithmic_a = false;  // x d/dx of sum a_n x^n / n = -1/2 ln(...)
  bool logarithmic_b = false;
  bool exponential_a = false;  // sum a_n x^n / n! = e^{a1 x} cosh(b0 sqrt(p) x)
  bool exponential_b = false;
  bool all() const {
    return ordinary_a && ordinary_b && unit_sums_a && unit_sums_b && logarithmic_a && logarithmic_b &&
           exponential_a && exponential_b;
  }
};

inline GeneratingFunctionReport verify_generating_functions(const PellFamily& fam, int order) {
  if (order < 2) throw std::invalid_argument("generating-function checks need order >= 2");
  const auto& cfg = fam.config();
  const auto& ctx = cfg->tower;
  const auto& a1 = cfg->a1;
  const auto& b0 = cfg->b0;
  const auto& N = cfg->pell_norm;
  LaurentPoly one(ctx, Rational(1));
  LaurentPoly zero(ctx);
  GeneratingFunctionReport rep;

  TruncSeries denom(ctx, order, {one, a1 * Rational(-2), N});
  TruncSeries sa(ctx, order), sb(ctx, order);
  for (int k = 0; k <= order; ++k) {
    sa[k] = fam.a(k);
    sb[k] = fam.b(k);
  }
  rep.ordinary_a = (denom * sa) == TruncSeries(ctx, order, {one, -a1});
  rep.ordinary_b = (denom * sb) == TruncSeries(ctx, order, {b0});

  // At x = 1 the truncated product telescopes.
  {
    LaurentPoly d1 = one - a1 * Rational(2) + N;
    LaurentPoly suma(ctx), sumb(ctx);
    for (int k = 0; k <= order; ++k) {
      suma += fam.a(k);
      sumb += fam.b(k);
    }
    rep.unit_sums_a = d1 * suma == one - a1 - fam.a(order + 1) + N * fam.a(order);
    rep.unit_sums_b = d1 * sumb == b0 - fam.b(order + 1) + N * fam.b(order);
  }

  // Logarithmic series: compare x d/dx of both sides, multiplied by D(x).
  {
    TruncSeries la(ctx, order), lb(ctx, order);
    for (int k = 1; k <= order; ++k) {
      la[k] = fam.a(k) * Rational(1, k);
      lb[k] = fam.b(k) * Rational(1, k);
    }
    TruncSeries x_dla = la.derivative().times_x();
    TruncSeries x_dlb = lb.derivative().times_x();
    TruncSeries x_dD = denom.derivative().times_x();
    // -1/2 ln D  ->  x d/dx = -1/2 x D'/D
    TruncSeries rhs_a = x_dD * LaurentPoly(ctx, Rational(-1, 2));
    // (a1/(b0 u)) ln((1 - conj(l) x)/(1 - l x)) -> x d/dx = (a1/(b0 u)) (l - conj(l)) x / D.
    CurveElem lam(cfg, a1, b0);
    CurveElem gap = lam - lam.conj();  // = 2 b0 u
    bool gap_ok = gap.f().is_zero();
    auto ratio = gap_ok && !b0.is_zero() ? divide_exact(gap.g(), b0) : std::nullopt;
    TruncSeries rhs_b(ctx, order);
    if (ratio) {
      TruncSeries log_ratio_term(ctx, order, {zero, a1 * *ratio});
      rhs_b = (log_ratio_term - x_dD) * (b0 * Rational(1, 2));
    }
    // D(0) = 1 so both log series vanish at x = 0, matching the zero constant terms.
    rep.logarithmic_a = denom[0] == one && (denom * x_dla).agrees_through(rhs_a, order);
    rep.logarithmic_b = ratio.has_value() && (denom * x_dlb).agrees_through(rhs_b, order);
  }

  // Exponential series: the ODE y'' - 2 a1 y' + N y = 0 with the initial
  // data of the closed form, plus the closed-form Taylor coefficients.
  {
    TruncSeries ea(ctx, order), eb(ctx, order);
    Rational inv_fact(1);
    for (int k = 0; k <= order; ++k) {
      if (k > 0) inv_fact /= k;
      ea[k] = fam.a(k) * inv_fact;
      eb[k] = fam.b(k) * inv_fact;
    }
    auto residual = [&](const TruncSeries& y) {
      TruncSeries d1 = y.derivative();
      TruncSeries d2 = d1.derivative();
      return d2 - d1 * (a1 * Rational(2)) + y * N;
    };
    TruncSeries zero_series(ctx, order);
    bool ode_a = residual(ea).agrees_through(zero_series, order - 2);
    bool ode_b = residual(eb).agrees_through(zero_series, order - 2);
    bool init_a = ea[0] == one && ea[1] == a1;
    bool init_b = eb[0] == b0 && eb[1] == a1 * b0 * Rational(2);
    // n! [x^n] e^{a1 x} cosh(b0 sqrt(p) x) = (l^n + conj(l)^n)/2 = f(l^n), and
    // n! [x^n] b0 e^{a1 x}(cosh + a1/(b0 sqrt p) sinh) = b0 f(l^n) + a1 g(l^n).
    bool taylor_a = true, taylor_b = true;
    CurveElem lam(cfg, a1, b0);
    CurveElem pw = CurveElem::one(cfg);
    for (int k = 0; k <= order; ++k) {
      taylor_a = taylor_a && pw.f() == fam.a(k);
      taylor_b = taylor_b && (b0 * pw.f() + a1 * pw.g()) == fam.b(k);
      pw = pw * lam;
    }
    rep.exponential_a = ode_a && init_a && taylor_a;
    rep.exponential_b = ode_b && init_b && taylor_b;
  }
  return rep;
}

/// a_n^2 - a_{n-1} a_{n+1} = -p b0^2 N^{n-1} and b_n^2 - b_{n-1} b_{n+1} = b0^2 N^n;
/// both sides are nonzero unless p is a square. With N = 0 the b-side vanishes for
/// n >= 1 and the a-side for n >= 2.
inline bool verify_turan(const PellFamily& fam, long n) {
  if (n < 1) throw std::invalid_argument("Turan check needs n >= 1");
  const auto& c = fam.cfg();
  LaurentPoly b0sq = c.b0 * c.b0;
  LaurentPoly lhs_a = fam.a(n) * fam.a(n) - fam.a(n - 1) * fam.a(n + 1);
  LaurentPoly rhs_a = -(c.p * b0sq * pow(c.pell_norm, static_cast<unsigned long>(n - 1)));
  LaurentPoly lhs_b = fam.b(n) * fam.b(n) - fam.b(n - 1) * fam.b(n + 1);
  LaurentPoly rhs_b = b0sq * pow(c.pell_norm, static_cast<unsigned long>(n));
  if (lhs_a != rhs_a || lhs_b != rhs_b) return false;
  return c.degenerate || (!lhs_a.is_zero() && !lhs_b.is_zero());
}

/// Product formulas for m >= n >= 0.
inline bool verify_products(const PellFamily& fam, long m, long n) {
  if (m < n || n < 0) throw std::invalid_argument("products need m >= n >= 0");
  const auto& c = fam.cfg();
  LaurentPoly Nn = pow(c.pell_norm, static_cast<unsigned long>(n));
  LaurentPoly Nn1 = Nn * c.pell_norm;
  Rational half(1, 2);
  bool aa = fam.a(m) * fam.a(n) == (fam.a(m + n) + Nn * fam.a(m - n)) * half;
  bool ba = fam.b(m) * fam.a(n) == (fam.b(m + n) + Nn * fam.b(m - n)) * half;
  bool bb = c.p * fam.b(m) * fam.b(n) == (fam.a(m + n + 2) - Nn1 * fam.a(m - n)) * half;
  return aa && ba && bb;
}

/// Both summation formulas relating b to partial sums of a (and a to sums of b).
inline bool verify_summations(const PellFamily& fam, long n) {
  if (n < 1) throw std::invalid_argument("summations need n >= 1");
  const auto& c = fam.cfg();
  const auto& ctx = c.tower;
  LaurentPoly one(ctx, Rational(1));
  LaurentPoly k = c.pell_norm - c.a1 * Rational(2) + one;
  LaurentPoly sum_a(ctx), sum_b(ctx);
  for (long j = 0; j <= n - 1; ++j) sum_a += fam.a(j);
  for (long j = 0; j <= n - 2; ++j) sum_b += fam.b(j);
  bool first = c.p * c.b0 * fam.b(n - 1) == (fam.a(n) - one) * (c.a1 - one) - k * sum_a;
  bool second = c.b0 * fam.a(n) == c.b0 + fam.b(n - 1) * (c.a1 - one) - k * sum_b;
  return first && second;
}

/// b_{2n+1} = 2 a_{n+1} b_n.
inline bool verify_growth(const PellFamily& fam, long n) {
  if (n < 0) throw std::invalid_argument("growth needs n >= 0");
  return fam.b(2 * n + 1) == fam.a(n + 1) * fam.b(n) * Rational(2);
}

inline long require_r(const PellConfig& c) {
  if (!c.r) throw config_error("a1^2 - b0^2 p is not of the form t^{2r}");
  return *c.r;
}

/// a_n = t^{rn} T_n(a1/t^r), b_n = b0 t^{rn} U_n(a1/t^r), and the terminating
/// binomial / hypergeometric sums as an independent route.
inline bool verify_chebyshev_connection(const PellFamily& fam, long n) {
  const auto& c = fam.cfg();
  long r = require_r(c);
  const auto& ctx = c.tower;
  ChebFamily cheb(ctx, n);
  auto idx = static_cast<std::size_t>(n);
  bool via_t = fam.a(n) == homogenize(cheb.T[idx], n, c.a1, r);
  bool via_u = fam.b(n) == c.b0 * homogenize(cheb.U[idx], n, c.a1, r);

  // sum_k C(n,2k) (a1^2 - t^{2r})^k a1^{n-2k}
  LaurentPoly disc = c.a1 * c.a1 - LaurentPoly::monomial(ctx, 2 * r);
  LaurentPoly sum_a(ctx), sum_b(ctx);
  for (long k = 0; 2 * k <= n; ++k) {
    LaurentPoly term = pow(disc, static_cast<unsigned long>(k)) * pow(c.a1, static_cast<unsigned long>(n - 2 * k));
    sum_a += term * binomial(n, 2 * k);
    sum_b += term * binomial(n + 1, 2 * k + 1);
  }
  bool binom_a = fam.a(n) == sum_a;
  bool binom_b = fam.b(n) == c.b0 * sum_b;

  // 2F1(-n, n; 1/2; (1-z)/2) and (n+1) 2F1(-n, n+2; 3/2; (1-z)/2)
  LaurentPoly z = LaurentPoly::t(ctx);
  LaurentPoly arg = (LaurentPoly(ctx, Rational(1)) - z) * Rational(1, 2);
  LaurentPoly f_t = hypergeometric_2f1(ctx, -n, Rational(n), Rational(1, 2), arg);
  LaurentPoly f_u = hypergeometric_2f1(ctx, -n, Rational(n + 2), Rational(3, 2), arg) * Rational(n + 1);
  bool hyper_a = fam.a(n) == homogenize(f_t, n, c.a1, r);
  bool hyper_b = fam.b(n) == c.b0 * homogenize(f_u, n, c.a1, r);
  return via_t && via_u && binom_a && binom_b && hyper_a && hyper_b;
}

/// Jacobi and ultraspherical forms:
///   C(n-1/2, n) a_n = t^{rn} P_n^{(-1/2,-1/2)}(a1/t^r),
///   C(n+1/2, n) b_n = (n+1) b0 t^{rn} P_n^{(1/2,1/2)}(a1/t^r),
///   b_n = b0 t^{rn} C_n^{(1)}(a1/t^r),  a_n = (n/2) t^{rn} [C_n^{(l)}/l]_{l->0}(a1/t^r).
inline bool verify_jacobi_connection(const PellFamily& fam, long n) {
  const auto& c = fam.cfg();
  long r = require_r(c);
  const auto& ctx = c.tower;
  auto idx = static_cast<std::size_t>(n);
  auto pm = jacobi_polynomials(ctx, Rational(-1, 2), Rational(-1, 2), n);
  auto pp = jacobi_polynomials(ctx, Rational(1, 2), Rational(1, 2), n);
  bool jac_a = fam.a(n) * binomial(Rational(2 * n - 1, 2), n) == homogenize(pm[idx], n, c.a1, r);
  bool jac_b = fam.b(n) * binomial(Rational(2 * n + 1, 2), n) ==
               c.b0 * homogenize(pp[idx], n, c.a1, r) * Rational(n + 1);
  auto c1 = gegenbauer_polynomials(ctx, Rational(1), n);
  bool ultra_b = fam.b(n) == c.b0 * homogenize(c1[idx], n, c.a1, r);
  bool ultra_a = true;
  if (n >= 1) {
    auto c0 = gegenbauer_limit_polynomials(ctx, n);
    ultra_a = fam.a(n) == homogenize(c0[idx], n, c.a1, r) * make_rational(n, 2);
  }
  return jac_a && jac_b && ultra_b && ultra_a;
}

/// Determinant of the n x n tridiagonal matrix with diagonal (first, d, d, ...)
/// and off-diagonal entries t^r, by expansion along the last row.
inline LaurentPoly tridiagonal_determinant(const LaurentPoly& first, const LaurentPoly& diag,
                                           const LaurentPoly& off_sq, long n) {
  LaurentPoly prev2(first.context(), Rational(1));  // D_0
  if (n == 0) return prev2;
  LaurentPoly prev1 = first;  // D_1
  for (long k = 2; k <= n; ++k) {
    LaurentPoly cur = diag * prev1 - off_sq * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

inline bool verify_determinant(const PellFamily& fam, long n) {
  if (n < 0) throw std::invalid_argument("determinant formula needs n >= 0");
  const auto& c = fam.cfg();
  long r = require_r(c);
  LaurentPoly two_a1 = c.a1 * Rational(2);
  LaurentPoly off_sq = LaurentPoly::monomial(c.tower, 2 * r);
  bool da = fam.a(n) == tridiagonal_determinant(c.a1, two_a1, off_sq, n);
  bool db = fam.b(n) == c.b0 * tridiagonal_determinant(two_a1, two_a1, off_sq, n);
  return da && db;
}

/// sqrt(pi)/Gamma(n + 1/2) = 4^n n! / (2n)!  (Legendre duplication).
inline Rational sqrt_pi_over_gamma_half(long n) {
  Integer four_n = Integer(1) << static_cast<mp_bitcnt_t>(2 * n);
  return make_rational(four_n * factorial(n), factorial(2 * n));
}

/// (-1)^n 2^n n! / (2n)!
inline Rational rodrigues_constant_a(long n) {
  Rational c = sqrt_pi_over_gamma_half(n) / Rational(Integer(1) << static_cast<mp_bitcnt_t>(n));
  return n % 2 == 0 ? c : Rational(-c);
}

/// (-1)^n (n+1) 2^{n+1} (n+1)! / (2n+2)!
inline Rational rodrigues_constant_b(long n) {
  Rational c = Rational(n + 1) * sqrt_pi_over_gamma_half(n + 1) /
               Rational(Integer(1) << static_cast<mp_bitcnt_t>(n + 1));
  return n % 2 == 0 ? c : Rational(-c);
}

struct RodriguesResult {
  AlgFuncElem a_side;
  AlgFuncElem b_side;
};

/// Evaluates both Rodrigues-type expressions in the function field.
inline RodriguesResult rodrigues_expressions(const PellConfig& c, long n) {
  long r = require_r(c);
  if (!c.b0_constant()) throw config_error("Rodrigues formula needs constant b0");
  auto field = std::make_shared<const AlgFuncField>(c.a1, r);
  if (field->derivation_degenerate()) throw config_error("a1' t - r a1 vanishes identically");
  const auto& ctx = c.tower;
  LaurentPoly zero(ctx);

  // B^{n-1}; at n = 0 the weight carries B in the denominator
  LaurentPoly wa = pow(field->B, static_cast<unsigned long>(n > 0 ? n - 1 : 0)).shift(-2 * n * r + r);
  AlgFuncElem xa(field, zero, wa, 0, n > 0 ? 0 : 1);
  LaurentPoly wb = pow(field->B, static_cast<unsigned long>(n)).shift(-2 * n * r - r);
  AlgFuncElem xb(field, zero, wb);
  for (long k = 0; k < n; ++k) {
    xa = xa.apply_d();
    xb = xb.apply_d();
  }
  AlgFuncElem a_side = AlgFuncElem::w(field) * xa * LaurentPoly::monomial(ctx, (n - 1) * r, rodrigues_constant_a(n));
  AlgFuncElem b_side = AlgFuncElem::w_inverse(field) * xb *
                       (LaurentPoly::monomial(ctx, (n + 1) * r, rodrigues_constant_b(n)) * c.b0);
  return {a_side, b_side};
}

inline bool verify_rodrigues(const PellFamily& fam, long n) {
  if (n < 0) throw std::invalid_argument("Rodrigues check needs n >= 0");
  RodriguesResult res = rodrigues_expressions(fam.cfg(), n);
  return res.a_side.equals_laurent(fam.a(n)) && res.b_side.equals_laurent(fam.b(n));
}

struct EndpointValues {
  TowerScalar at_plus_one;
  TowerScalar at_minus_one;
  TowerScalar expected;
  bool matches() const { return at_plus_one == expected && at_minus_one == expected; }
};

/// (b_n(1), b_n(-1)) against (-1)^{n/2} b0 for even n and 0 for odd n.
inline EndpointValues endpoint_values(const PellFamily& fam, long n) {
  const auto& c = fam.cfg();
  if (!c.is_djkm()) throw config_error("endpoint values are defined for the DJKM configuration");
  const auto& ctx = c.tower;
  TowerScalar one(ctx, Rational(1));
  EndpointValues ev{fam.b(n).evaluate(one), fam.b(n).evaluate(-one), TowerScalar(ctx)};
  if (n % 2 == 0) {
    TowerScalar b0 = c.b0.constant_term();
    ev.expected = (n / 2) % 2 == 0 ? b0 : -b0;
  }
  return ev;
}

}  // namespace pellpoly

#endif  // PELLPOLY_FAMILY_HPP
