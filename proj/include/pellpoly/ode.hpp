#ifndef PELLPOLY_ODE_HPP
#define PELLPOLY_ODE_HPP

// Second-order operators c2 y'' + c1 y' + c0 y annihilating a_n and b_n,
// exact Fuchsian classification, and numeric singular points.

#include "curve.hpp"
#include "laurent.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace pellpoly {

enum class OdeKind { GeneralA, GeneralB, DjkmB, DjkmA };

/// Which rendering of the general operators to build: the coefficients as
/// printed, or the operator obtained by pulling the Chebyshev equations back
/// along z = a1 / t^r.
enum class OdeForm { Printed, Derived };

inline std::string to_string(OdeKind k) {
  switch (k) {
    case OdeKind::GeneralA: return "general_a";
    case OdeKind::GeneralB: return "general_b";
    case OdeKind::DjkmB: return "djkm_b";
    case OdeKind::DjkmA: return "djkm_a";
  }
  return "?";
}

struct OdeOperator {
  LaurentPoly c2, c1, c0;
  long n = 0;
  OdeKind kind = OdeKind::GeneralA;
  /// Known factors of c2 used to refine its squarefree decomposition.
  std::vector<LaurentPoly> c2_factor_hints;
};

/// Divides all three coefficients by the common power t^k that makes them
/// polynomials with at least one nonzero constant term.
inline void clear_t_power(OdeOperator& op) {
  if (op.c2.is_zero()) throw std::domain_error("leading coefficient c2 must be nonzero");
  long k = op.c2.low_degree();
  if (!op.c1.is_zero()) k = std::min(k, op.c1.low_degree());
  if (!op.c0.is_zero()) k = std::min(k, op.c0.low_degree());
  op.c2 = op.c2.shift(-k);
  op.c1 = op.c1.shift(-k);
  op.c0 = op.c0.shift(-k);
}

inline LaurentPoly apply(const OdeOperator& op, const LaurentPoly& y) {
  LaurentPoly d1 = y.derivative();
  return op.c2 * d1.derivative() + op.c1 * d1 + op.c0 * y;
}

namespace detail {

/// Operator on f from (1 - z^2) y'' - kappa z y' + mu y = 0 with
/// z = a1 / t^r and y = t^{-rn} f.
inline OdeOperator pullback_chebyshev(const PellConfig& c, long r, long n, long kappa, const Rational& mu) {
  const auto& ctx = c.tower;
  LaurentPoly one(ctx, Rational(1));
  LaurentPoly z = c.a1.shift(-r);
  LaurentPoly one_minus_z2 = one - z * z;
  LaurentPoly phi = z.derivative();
  LaurentPoly dphi = phi.derivative();
  LaurentPoly phi2 = phi * phi;
  Rational rn(r * n);
  LaurentPoly inv_t = LaurentPoly::monomial(ctx, -1);
  LaurentPoly inv_t2 = LaurentPoly::monomial(ctx, -2);
  OdeOperator op;
  op.c2 = one_minus_z2 * phi;
  op.c1 = one_minus_z2 * (phi * inv_t * (-2 * rn) - dphi) - z * phi2 * Rational(kappa);
  op.c0 = one_minus_z2 * (phi * inv_t2 * (rn * (rn + 1)) + dphi * inv_t * rn) +
          z * phi2 * inv_t * (Rational(kappa) * rn) + phi2 * phi * mu;
  op.n = n;
  clear_t_power(op);
  return op;
}

}  // namespace detail

/// General operators for configurations with a1^2 - b0^2 p = t^{2r}.
inline OdeOperator build_general(const PellConfig& c, long n, OdeKind kind, OdeForm form = OdeForm::Derived) {
  if (!c.r) throw config_error("general operators need a1^2 - b0^2 p = t^{2r}");
  if (kind != OdeKind::GeneralA && kind != OdeKind::GeneralB)
    throw std::invalid_argument("build_general builds GeneralA or GeneralB");
  if (kind == OdeKind::GeneralB && !c.b0_constant()) throw config_error("GeneralB needs constant b0");
  const long r = *c.r;
  OdeOperator op;
  if (form == OdeForm::Derived) {
    op = kind == OdeKind::GeneralA ? detail::pullback_chebyshev(c, r, n, 1, Rational(n * n))
                                   : detail::pullback_chebyshev(c, r, n, 3, Rational(n * (n + 2)));
    op.kind = kind;
    return op;
  }
  const auto& ctx = c.tower;
  const auto& a1 = c.a1;
  LaurentPoly da1 = a1.derivative();
  LaurentPoly dda1 = da1.derivative();
  LaurentPoly t = LaurentPoly::t(ctx);
  LaurentPoly A = da1 * t - a1 * Rational(r);                        // t a1' - r a1
  LaurentPoly B = LaurentPoly::monomial(ctx, 2 * r) - a1 * a1;        // t^{2r} - a1^2
  LaurentPoly E = t * (t * dda1 - da1 * Rational(2 * r)) + a1 * Rational(r * (r + 1));
  LaurentPoly A2 = A * A;
  Rational rn(r * n);
  if (kind == OdeKind::GeneralA) {
    op.c2 = t * t * B * A;
    op.c1 = -(t * B * A * (2 * rn) + a1 * t * A2 + t * B * E);
    op.c0 = B * E * rn + a1 * A2 * rn + A2 * A * Rational(n * n) + B * A * ((rn + 1) * rn);
  } else {
    op.c2 = t * t * B * A;
    op.c1 = -(t * B * A2 * (2 * rn) + a1 * t * A2 * Rational(3) + t * B * E);
    op.c0 = A2 * A * Rational(n * (n + 2)) + a1 * A2 * (3 * rn) + B * E * rn + B * A2 * (rn * (rn + 1));
  }
  op.n = n;
  op.kind = kind;
  clear_t_power(op);
  return op;
}

/// The two DJKM operators with coefficients polynomial in t and rational in beta.
/// For DjkmA the displayed y' and y coefficients do not annihilate a_n (n >= 1);
/// OdeForm::Derived gives the pulled-back operator, which does. For DjkmB both
/// forms coincide.
inline OdeOperator build_djkm(const PellConfig& c, long n, OdeKind kind, OdeForm form = OdeForm::Printed) {
  if (!c.beta) throw config_error("DJKM operators need a DJKM configuration");
  const Rational& beta = *c.beta;
  const auto& ctx = c.tower;
  auto poly = [&](std::vector<Rational> coeffs) { return LaurentPoly::from_rationals(ctx, coeffs); };
  Rational N(n);
  OdeOperator op;
  op.n = n;
  op.kind = kind;
  LaurentPoly t = LaurentPoly::t(ctx);
  LaurentPoly t2p1 = poly({1, 0, 1});
  LaurentPoly quartic = poly({1, 0, -2 * beta, 0, 1});
  op.c2 = t * t2p1 * quartic;
  op.c2_factor_hints = {t, t2p1, quartic};
  if (kind == OdeKind::DjkmB) {
    // (2n-3) t^6 + (-4 beta n + 2n - 5) t^4 + (4 beta - 4 beta n + 2n + 3) t^2 + 2n + 1
    op.c1 = -poly({2 * N + 1, 0, 4 * beta - 4 * beta * N + 2 * N + 3, 0, -4 * beta * N + 2 * N - 5, 0, 2 * N - 3});
    // 2 (2n t^5 + n t^3 (beta + (beta+1) n + 5) + n t (-beta + (beta+1) n + 1))
    op.c0 = -poly({0, N * (-beta + (beta + 1) * N + 1), 0, N * (beta + (beta + 1) * N + 5), 0, 2 * N}) * Rational(2);
  } else if (kind == OdeKind::DjkmA && form == OdeForm::Printed) {
    // (1-2n) t^6 + (2n+3) t^4 + (-4 beta + (4 beta - 2) n - 1) t^2 - 2n + 1
    op.c1 = -poly({1 - 2 * N, 0, -4 * beta + (4 * beta - 2) * N - 1, 0, 2 * N + 3, 0, 1 - 2 * N});
    // (beta + 1) n t (n t^2 + n + t^2 - 1)
    op.c0 = -poly({0, N - 1, 0, N + 1}) * ((beta + 1) * N);
  } else if (kind == OdeKind::DjkmA) {
    // (1-2n) t^6 + (4 beta n - 2n + 3) t^4 + (4 beta n - 4 beta - 2n - 1) t^2 + 1 - 2n
    op.c1 = poly({1 - 2 * N, 0, 4 * beta * N - 4 * beta - 2 * N - 1, 0, 4 * beta * N - 2 * N + 3, 0, 1 - 2 * N});
    // -2 (beta + 1) n t (n t^2 + n + t^2 - 1)
    op.c0 = -poly({0, N - 1, 0, N + 1}) * (2 * (beta + 1) * N);
  } else {
    throw std::invalid_argument("build_djkm builds DjkmA or DjkmB");
  }
  clear_t_power(op);
  return op;
}

struct SingularFactor {
  LaurentPoly factor;
  int multiplicity = 1;
  bool regular = true;
};

struct SingularReport {
  std::vector<SingularFactor> finite_factors;
  bool infinity_regular = false;
  bool fuchsian = false;
  long deg_c2 = 0, deg_c1 = -1, deg_c0 = -1;  // -1 for a zero coefficient
};

namespace detail {

/// Splits squarefree factors along gcds with the hints.
inline std::vector<SquarefreeFactor> refine(std::vector<SquarefreeFactor> factors,
                                            const std::vector<LaurentPoly>& hints) {
  for (const auto& h : hints) {
    if (h.is_zero() || !h.is_polynomial()) continue;
    std::vector<SquarefreeFactor> next;
    for (const auto& f : factors) {
      LaurentPoly g = gcd_polynomial(f.factor, h);
      if (g.degree() > 0 && g.degree() < f.factor.degree()) {
        next.push_back({g, f.multiplicity});
        next.push_back({divide_exact(f.factor, g)->monic(), f.multiplicity});
      } else {
        next.push_back(f);
      }
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace detail

/// Pole-order criterion: a root of c2 of multiplicity m is regular iff it is a
/// root of c1 of multiplicity >= m-1 and of c0 of multiplicity >= m-2; infinity
/// is regular iff deg c1 <= deg c2 - 1 and deg c0 <= deg c2 - 2.
inline SingularReport classify_fuchsian(const OdeOperator& input) {
  OdeOperator op = input;
  clear_t_power(op);
  if (!op.c1.is_polynomial() || !op.c0.is_polynomial() || !op.c2.is_polynomial())
    throw std::invalid_argument("coefficients must be polynomials");
  SingularReport rep;
  rep.deg_c2 = op.c2.degree();
  rep.deg_c1 = op.c1.is_zero() ? -1 : op.c1.degree();
  rep.deg_c0 = op.c0.is_zero() ? -1 : op.c0.degree();
  auto factors = detail::refine(squarefree_decomposition(op.c2), op.c2_factor_hints);
  bool all_regular = true;
  for (const auto& f : factors) {
    LaurentPoly need1 = pow(f.factor, static_cast<unsigned long>(f.multiplicity - 1));
    LaurentPoly need0 = pow(f.factor, static_cast<unsigned long>(std::max(f.multiplicity - 2, 0)));
    bool regular = divides_polynomial(need1, op.c1) && divides_polynomial(need0, op.c0);
    rep.finite_factors.push_back({f.factor, f.multiplicity, regular});
    all_regular = all_regular && regular;
  }
  rep.infinity_regular = rep.deg_c1 <= rep.deg_c2 - 1 && rep.deg_c0 <= rep.deg_c2 - 2;
  rep.fuchsian = all_regular && rep.infinity_regular;
  return rep;
}

/// All complex roots of a polynomial given by ascending double coefficients
/// (Aberth-Ehrlich iteration).
inline std::vector<std::complex<double>> polynomial_roots(std::vector<double> coeffs) {
  using cd = std::complex<double>;
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  std::vector<cd> roots;
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros] == 0.0) ++zeros;
  roots.assign(zeros, cd(0.0, 0.0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(zeros));
  if (coeffs.size() <= 1) return roots;
  const std::size_t deg = coeffs.size() - 1;
  double lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  double bound = 0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(coeffs[i]));
  bound += 1.0;
  auto eval = [&](cd x) {
    cd p = 0, dp = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      dp = dp * x + p;
      p = p * x + coeffs[i];
    }
    return std::pair<cd, cd>{p, dp};
  };
  std::vector<cd> z(deg);
  for (std::size_t k = 0; k < deg; ++k)
    z[k] = std::polar(0.5 * bound, 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(deg));
  for (int iter = 0; iter < 1000; ++iter) {
    double change = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      auto [p, dp] = eval(z[k]);
      if (p == cd(0, 0)) continue;
      cd ratio = p / dp;
      cd sum = 0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      cd w = ratio / (1.0 - ratio * sum);
      z[k] -= w;
      change = std::max(change, std::abs(w));
    }
    if (change < 1e-16 * bound) break;
  }
  for (auto& x : z) {  // Newton polish
    for (int i = 0; i < 3; ++i) {
      auto [p, dp] = eval(x);
      if (dp != cd(0, 0)) x -= p / dp;
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

/// Complex roots of c2, sorted by (real, imag); reporting only.
inline std::vector<std::complex<double>> singular_points_numeric(const OdeOperator& op) {
  if (!op.c2.is_polynomial()) throw std::invalid_argument("c2 must be a polynomial");
  std::vector<double> coeffs(static_cast<std::size_t>(op.c2.degree()) + 1, 0.0);
  for (const auto& [e, c] : op.c2.terms()) coeffs[static_cast<std::size_t>(e)] = c.to_double();
  auto roots = polynomial_roots(coeffs);
  for (auto& z : roots) {
    double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.real()) < 1e-14 * scale) z.real(0.0);
    if (std::abs(z.imag()) < 1e-14 * scale) z.imag(0.0);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

}  // namespace pellpoly

#endif  // PELLPOLY_ODE_HPP
