#ifndef PELLPOLY_QUAD_HPP
#define PELLPOLY_QUAD_HPP

// Orthogonality integrals of t^-n a_n and t^-n b_n on the real oval of the
// DJKM curve, by Chebyshev-Gauss substitution and by raw tanh-sinh.

#include "family.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pellpoly {

enum class Kernel { First, Second };
enum class QuadMethod { GaussChebyshev, TanhSinh };

inline std::string to_string(Kernel k) { return k == Kernel::First ? "first" : "second"; }
inline std::string to_string(QuadMethod m) { return m == QuadMethod::GaussChebyshev ? "gauss" : "tanhsinh"; }

struct OrthoProblem {
  double beta;
  Kernel kind;
  long n, m;

  OrthoProblem(double beta_, Kernel kind_, long n_, long m_) : beta(beta_), kind(kind_), n(n_), m(m_) {
    if (!(beta > 1.0) || !std::isfinite(beta)) throw std::domain_error("orthogonality needs real beta > 1");
    if (n < 0 || m < 0) throw std::domain_error("indices must be nonnegative");
  }
  double t_lo() const { return (std::sqrt(beta + 1) - std::sqrt(beta - 1)) / std::numbers::sqrt2; }
  double t_hi() const { return (std::sqrt(beta + 1) + std::sqrt(beta - 1)) / std::numbers::sqrt2; }
  /// sqrt(2 (beta - 1)), so that a_1 / t = (t^2 - 1) / (sigma t).
  double sigma() const { return std::sqrt(2 * (beta - 1)); }
  /// b_0^2.
  double b0_squared() const { return (beta + 1) / 2; }
  /// Closed-form value of the integral.
  double expected() const {
    if (n != m) return 0.0;
    double root = std::sqrt(beta - 1);
    if (kind == Kernel::First) return n == 0 ? std::numbers::pi * root : std::numbers::pi / 2 * root;
    return std::numbers::pi / 2 * (beta + 1) * root;
  }
};

struct QuadResult {
  double value = 0;
  double abs_error_estimate = 0;
  long nodes_used = 0;
  QuadMethod method = QuadMethod::GaussChebyshev;
  bool converged = true;
};

/// z = a_1(t) / t.
inline double z_of_t(const OrthoProblem& prob, double t) { return (t * t - 1) / (prob.sigma() * t); }

/// Inverse of z_of_t on [-1, 1]: positive root of t^2 - sigma z t - 1 = 0.
inline double t_of_z(const OrthoProblem& prob, double z) {
  double s = prob.sigma();
  return (z * s + std::sqrt(s * s * z * z + 4)) / 2;
}

/// T_n(z) and U_n(z) by Clenshaw summation of the single coefficient series.
inline double clenshaw_chebyshev(long n, double z, bool second_kind) {
  // sum c_k P_k with c_n = 1; P_0 = 1, P_1 = z (T) or 2z (U), P_{k+1} = 2z P_k - P_{k-1}
  double b1 = 0, b2 = 0;
  for (long k = n; k >= 1; --k) {
    double b0 = (k == n ? 1.0 : 0.0) + 2 * z * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  double c0 = n == 0 ? 1.0 : 0.0;
  return second_kind ? c0 + 2 * z * b1 - b2 : c0 + z * b1 - b2;
}

namespace detail {

/// t^-k a_k(t) (or t^-k b_k(t) / b_0) for k = 0..n by the Pell recurrence divided by t^{k+1}.
inline std::vector<double> scaled_family(double z, long n, bool second_kind) {
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  g[0] = 1;
  if (n >= 1) g[1] = second_kind ? 2 * z : z;
  for (long k = 2; k <= n; ++k)
    g[static_cast<std::size_t>(k)] = 2 * z * g[static_cast<std::size_t>(k - 1)] - g[static_cast<std::size_t>(k - 2)];
  return g;
}

/// (t - t_lo)(t + t_lo)(t_hi - t)(t_hi + t) = -(t^4 - 2 beta t^2 + 1), from endpoint distances.
inline double minus_quartic(const OrthoProblem& prob, double t, double dist_lo, double dist_hi) {
  return dist_lo * (t + prob.t_lo()) * dist_hi * (prob.t_hi() + t);
}

}  // namespace detail

/// Integrand of the raw t-integral at an interior point given its distances to
/// the endpoints. The family values come from `eval(k, t)`, which returns t^-k a_k(t)
/// (FIRST) or t^-k b_k(t) (SECOND).
inline double kernel_value(const OrthoProblem& prob, double t, double dist_lo, double dist_hi,
                           const std::function<double(long, double)>& eval) {
  if (!(dist_lo > 0) || !(dist_hi > 0)) throw std::domain_error("kernel evaluated outside the open interval");
  double radicand = detail::minus_quartic(prob, t, dist_lo, dist_hi);
  double prod = eval(prob.n, t) * eval(prob.m, t);
  double root = std::sqrt(prob.beta - 1);
  if (prob.kind == Kernel::First) return prod * (t * t + 1) / t * root / std::sqrt(radicand);
  return prod * (t * t + 1) / (t * t * t) * std::sqrt(radicand) / root;
}

/// Family evaluation by Clenshaw at z = a_1(t) / t.
inline std::function<double(long, double)> clenshaw_evaluator(const OrthoProblem& prob) {
  if (prob.kind == Kernel::First)
    return [prob](long k, double t) { return clenshaw_chebyshev(k, z_of_t(prob, t), false); };
  double b0 = std::sqrt(prob.b0_squared());
  return [prob, b0](long k, double t) { return b0 * clenshaw_chebyshev(k, z_of_t(prob, t), true); };
}

/// Family evaluation from the exact polynomials of a DJKM family (low-index cross-check).
inline std::function<double(long, double)> exact_evaluator(const PellFamily& fam, Kernel kind) {
  return [&fam, kind](long k, double t) {
    const LaurentPoly& p = kind == Kernel::First ? fam.a(k) : fam.b(k);
    return p.evaluate(t) / std::pow(t, static_cast<double>(k));
  };
}

/// Kernel at a point t, computing endpoint distances directly.
inline double kernel_at(const OrthoProblem& prob, double t) {
  return kernel_value(prob, t, t - prob.t_lo(), prob.t_hi() - t, clenshaw_evaluator(prob));
}

inline QuadResult integrate_gauss_chebyshev(const OrthoProblem& prob, long N) {
  if (N < 1) throw std::invalid_argument("need at least one node");
  const double pi = std::numbers::pi;
  const double root = std::sqrt(prob.beta - 1);
  const long top = std::max(prob.n, prob.m);
  double sum = 0;
  for (long k = 1; k <= N; ++k) {
    double z, w;
    if (prob.kind == Kernel::First) {
      z = std::cos((2.0 * static_cast<double>(k) - 1) * pi / (2.0 * static_cast<double>(N)));
      w = pi / static_cast<double>(N);
    } else {
      double theta = static_cast<double>(k) * pi / static_cast<double>(N + 1);
      z = std::cos(theta);
      w = pi / static_cast<double>(N + 1) * std::sin(theta) * std::sin(theta);
    }
    // Values through the mapped node, to exercise the substitution.
    double t = t_of_z(prob, z);
    auto g = detail::scaled_family(z_of_t(prob, t), top, prob.kind == Kernel::Second);
    sum += w * g[static_cast<std::size_t>(prob.n)] * g[static_cast<std::size_t>(prob.m)];
  }
  QuadResult r;
  r.method = QuadMethod::GaussChebyshev;
  r.nodes_used = N;
  r.value = prob.kind == Kernel::First ? root * sum : prob.b0_squared() * 2 * root * sum;
  // Exact once 2N - 1 >= n + m; the estimate is then a rounding scale.
  long needed = (prob.n + prob.m + 2) / 2;
  r.abs_error_estimate = N >= needed ? 1e-15 * static_cast<double>(N) * std::max(1.0, std::abs(r.value)) : std::abs(r.value);
  r.converged = N >= needed;
  return r;
}

/// Double-exponential quadrature of the raw t-integral with level doubling.
inline QuadResult integrate_tanh_sinh(const OrthoProblem& prob, double tol, int max_level = 12) {
  if (!(tol >= 1e-12)) throw std::invalid_argument("tolerance must be at least 1e-12");
  const double a = prob.t_lo(), b = prob.t_hi();
  const double width = b - a;
  const double half = width / 2;
  const double u_max = 4.5;
  const double pi_2 = std::numbers::pi / 2;
  auto eval = clenshaw_evaluator(prob);
  long nodes = 0;
  auto term = [&](double u) {
    double s = pi_2 * std::sinh(u);
    double ch = std::cosh(s);
    double weight = half * pi_2 * std::cosh(u) / (ch * ch);
    double dist_lo = width / (1 + std::exp(-2 * s));
    double dist_hi = width / (1 + std::exp(2 * s));
    if (!(dist_lo > 0) || !(dist_hi > 0) || weight == 0) return 0.0;
    double t = u >= 0 ? b - dist_hi : a + dist_lo;
    ++nodes;
    return weight * kernel_value(prob, t, dist_lo, dist_hi, eval);
  };
  double h = 1.0;
  double sum = term(0.0);
  for (double u = h; u <= u_max; u += h) sum += term(u) + term(-u);
  double estimate = h * sum;
  QuadResult r;
  r.method = QuadMethod::TanhSinh;
  r.converged = false;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    for (double u = h; u <= u_max; u += 2 * h) sum += term(u) + term(-u);
    double next = h * sum;
    double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff < tol) {
      r.converged = true;
      r.abs_error_estimate = diff;
      break;
    }
    r.abs_error_estimate = diff;
  }
  r.value = estimate;
  r.nodes_used = nodes;
  return r;
}

struct EllipticCheck {
  long n = 0, m = 0;
  double tol = 1e-10;
  QuadResult first, second;
  bool passes() const { return std::abs(first.value) < tol && std::abs(second.value) < tol; }
};

/// Both raw integrals for n + m odd; each is an elliptic integral that must vanish.
inline EllipticCheck elliptic_identity_check(double beta, long n, long m, double tol = 1e-10) {
  if ((n + m) % 2 == 0) throw std::invalid_argument("elliptic identity needs n + m odd");
  EllipticCheck c;
  c.n = n;
  c.m = m;
  c.tol = tol;
  double ts_tol = std::max(1e-12, tol / 10);
  c.first = integrate_tanh_sinh(OrthoProblem(beta, Kernel::First, n, m), ts_tol);
  c.second = integrate_tanh_sinh(OrthoProblem(beta, Kernel::Second, n, m), ts_tol);
  return c;
}

struct OrthoCell {
  long n = 0, m = 0;
  bool has_gauss = false, has_tanh_sinh = false;
  QuadResult gauss, tanh_sinh;
  double expected = 0;
  double abs_err() const {
    double e = 0;
    if (has_gauss) e = std::max(e, std::abs(gauss.value - expected));
    if (has_tanh_sinh) e = std::max(e, std::abs(tanh_sinh.value - expected));
    return e;
  }
  /// |gauss - tanh-sinh|, or 0 when only one method ran.
  double method_gap() const { return has_gauss && has_tanh_sinh ? std::abs(gauss.value - tanh_sinh.value) : 0.0; }
};

struct OrthoTable {
  double beta = 0;
  Kernel kind = Kernel::First;
  long n_max = 0;
  std::vector<OrthoCell> cells;  // row-major, (n_max + 1)^2
  const OrthoCell& at(long n, long m) const { return cells[static_cast<std::size_t>(n * (n_max + 1) + m)]; }
  double max_abs_err() const {
    double e = 0;
    for (const auto& c : cells) e = std::max(e, c.abs_err());
    return e;
  }
  double max_method_gap() const {
    double e = 0;
    for (const auto& c : cells) e = std::max(e, c.method_gap());
    return e;
  }
};

struct OrthoOptions {
  bool gauss = true;
  bool tanh_sinh = true;
  double tol = 1e-12;
  long gauss_nodes = 0;  // 0 picks n_max + 2
};

inline OrthoTable ortho_table(double beta, Kernel kind, long n_max, const OrthoOptions& opt = {}) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  OrthoTable tab;
  tab.beta = beta;
  tab.kind = kind;
  tab.n_max = n_max;
  long N = opt.gauss_nodes > 0 ? opt.gauss_nodes : n_max + 2;
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= n_max; ++m) {
      OrthoProblem prob(beta, kind, n, m);
      OrthoCell cell;
      cell.n = n;
      cell.m = m;
      cell.expected = prob.expected();
      if (opt.gauss) {
        cell.gauss = integrate_gauss_chebyshev(prob, N);
        cell.has_gauss = true;
      }
      if (opt.tanh_sinh) {
        cell.tanh_sinh = integrate_tanh_sinh(prob, opt.tol);
        cell.has_tanh_sinh = true;
      }
      tab.cells.push_back(cell);
    }
  }
  return tab;
}

inline std::string ortho_csv_header() { return "kind,n,m,value_gauss,value_ts,expected,abs_err"; }

inline std::string ortho_csv_rows(const OrthoTable& tab) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& c : tab.cells) {
    os << to_string(tab.kind) << ',' << c.n << ',' << c.m << ',';
    if (c.has_gauss) os << c.gauss.value;
    os << ',';
    if (c.has_tanh_sinh) os << c.tanh_sinh.value;
    os << ',' << c.expected << ',' << c.abs_err() << '\n';
  }
  return os.str();
}

}  // namespace pellpoly

#endif  // PELLPOLY_QUAD_HPP
