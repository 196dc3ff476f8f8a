#ifndef PELLPOLY_TOWER_HPP
#define PELLPOLY_TOWER_HPP

// Exact arithmetic in the biquadratic tower Q(s1, s2) with s1^2 = sigma1 and
// s2^2 = sigma2. Elements are stored on the basis {1, s1, s2, s1*s2}.

#include "rational.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pellpoly {

class context_mismatch : public std::logic_error {
 public:
  context_mismatch() : std::logic_error("tower scalars from different contexts") {}
};

class zero_divisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Radicands of the tower together with the collapse data computed when a
/// radicand (or the product of both) is a perfect rational square.
struct TowerContext {
  Rational sigma1;
  Rational sigma2;
  std::optional<Rational> root1;       // s1 collapsed to this rational
  std::optional<Rational> root2;       // s2 collapsed to this rational
  std::optional<Rational> s2_over_s1;  // s2 = k*s1 when sigma1*sigma2 is a square

  bool same_as(const TowerContext& other) const {
    return this == &other || (sigma1 == other.sigma1 && sigma2 == other.sigma2);
  }
  bool is_rational_field() const { return root1.has_value() && root2.has_value(); }
  /// Dimension of the algebra over Q after collapsing.
  int degree() const {
    if (root1 && root2) return 1;
    if (root1 || root2 || s2_over_s1) return 2;
    return 4;
  }
};

using TowerContextPtr = std::shared_ptr<const TowerContext>;

inline TowerContextPtr make_tower(const Rational& sigma1, const Rational& sigma2) {
  if (sigma1 == 0 || sigma2 == 0) throw std::domain_error("tower radicand must be nonzero");
  auto ctx = std::make_shared<TowerContext>();
  ctx->sigma1 = sigma1;
  ctx->sigma2 = sigma2;
  ctx->root1 = exact_sqrt(sigma1);
  ctx->root2 = exact_sqrt(sigma2);
  if (!ctx->root1 && !ctx->root2) {
    Rational prod = sigma1 * sigma2;
    if (auto q = exact_sqrt(prod)) {
      // s1*s2 = +q under the real embedding; both-negative radicands give
      // i*i = -1 under the principal branch.
      Rational s1s2 = sigma1 > 0 ? *q : Rational(-*q);
      ctx->s2_over_s1 = s1s2 / sigma1;
    }
  }
  return ctx;
}

/// Q itself, embedded as a collapsed tower.
inline TowerContextPtr rational_tower() { return make_tower(Rational(1), Rational(1)); }

enum class FloatMode { Double, Extended };

class TowerScalar {
 public:
  TowerScalar() = default;
  explicit TowerScalar(TowerContextPtr ctx) : ctx_(std::move(ctx)) {}
  TowerScalar(TowerContextPtr ctx, const Rational& q) : ctx_(std::move(ctx)) { c_[0] = q; }
  TowerScalar(TowerContextPtr ctx, const Rational& c00, const Rational& c10, const Rational& c01,
              const Rational& c11)
      : ctx_(std::move(ctx)), c_{c00, c10, c01, c11} {
    normalize();
  }

  static TowerScalar s1(TowerContextPtr ctx) { return {std::move(ctx), 0, 1, 0, 0}; }
  static TowerScalar s2(TowerContextPtr ctx) { return {std::move(ctx), 0, 0, 1, 0}; }

  const TowerContextPtr& context() const { return ctx_; }
  const Rational& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::array<Rational, 4>& coords() const { return c_; }

  bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  TowerScalar& operator+=(const TowerScalar& o) {
    check(o);
    for (std::size_t i = 0; i < 4; ++i)
      if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
    return *this;
  }
  TowerScalar& operator-=(const TowerScalar& o) {
    check(o);
    for (std::size_t i = 0; i < 4; ++i)
      if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
    return *this;
  }
  TowerScalar& operator*=(const Rational& q) {
    for (auto& x : c_)
      if (sgn(x) != 0) x *= q;
    return *this;
  }
  TowerScalar& operator*=(const TowerScalar& o) { return *this = *this * o; }
  TowerScalar& operator/=(const TowerScalar& o) { return *this = *this * o.inverse(); }

  friend TowerScalar operator+(TowerScalar a, const TowerScalar& b) { return a += b; }
  friend TowerScalar operator-(TowerScalar a, const TowerScalar& b) { return a -= b; }
  friend TowerScalar operator-(TowerScalar a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend TowerScalar operator*(TowerScalar a, const Rational& q) { return a *= q; }
  friend TowerScalar operator*(const Rational& q, TowerScalar a) { return a *= q; }
  friend TowerScalar operator/(const TowerScalar& a, const TowerScalar& b) { return a * b.inverse(); }

  friend TowerScalar operator*(const TowerScalar& a, const TowerScalar& b) {
    a.check(b);
    const auto& s1 = a.ctx_->sigma1;
    const auto& s2 = a.ctx_->sigma2;
    TowerScalar r(a.ctx_);
    if (a.is_rational()) {
      r.c_ = b.c_;
      return r *= a.c_[0];
    }
    if (b.is_rational()) {
      r.c_ = a.c_;
      return r *= b.c_[0];
    }
    const auto& x = a.c_;
    const auto& y = b.c_;
    Rational t;
    auto acc = [&](Rational& out, const Rational& u, const Rational& v) {
      if (sgn(u) == 0 || sgn(v) == 0) return;
      t = u * v;
      out += t;
    };
    Rational p10, p01, p11;  // pieces scaled by sigma factors afterwards
    acc(r.c_[0], x[0], y[0]);
    acc(p10, x[1], y[1]);
    acc(p01, x[2], y[2]);
    acc(p11, x[3], y[3]);
    if (sgn(p10) != 0) r.c_[0] += s1 * p10;
    if (sgn(p01) != 0) r.c_[0] += s2 * p01;
    if (sgn(p11) != 0) r.c_[0] += s1 * s2 * p11;

    acc(r.c_[1], x[0], y[1]);
    acc(r.c_[1], x[1], y[0]);
    Rational q1;
    acc(q1, x[2], y[3]);
    acc(q1, x[3], y[2]);
    if (sgn(q1) != 0) r.c_[1] += s2 * q1;

    acc(r.c_[2], x[0], y[2]);
    acc(r.c_[2], x[2], y[0]);
    Rational q2;
    acc(q2, x[1], y[3]);
    acc(q2, x[3], y[1]);
    if (sgn(q2) != 0) r.c_[2] += s1 * q2;

    acc(r.c_[3], x[0], y[3]);
    acc(r.c_[3], x[3], y[0]);
    acc(r.c_[3], x[1], y[2]);
    acc(r.c_[3], x[2], y[1]);
    return r;
  }

  /// Conjugate sending s2 to -s2.
  TowerScalar conj2() const {
    TowerScalar r = *this;
    r.c_[2] = -r.c_[2];
    r.c_[3] = -r.c_[3];
    return r;
  }
  /// Conjugate sending s1 to -s1.
  TowerScalar conj1() const {
    TowerScalar r = *this;
    r.c_[1] = -r.c_[1];
    r.c_[3] = -r.c_[3];
    return r;
  }

  /// Inverse by rationalizing first in s2, then in s1.
  TowerScalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero tower scalar");
    if (is_rational()) return TowerScalar(ctx_, Rational(1) / c_[0]);
    TowerScalar step1 = conj2();
    TowerScalar n1 = *this * step1;  // lies in Q(s1)
    TowerScalar step2 = n1.conj1();
    TowerScalar n2 = n1 * step2;  // lies in Q
    if (!n2.is_rational()) throw std::logic_error("tower norm is not rational");
    if (sgn(n2.c_[0]) == 0) throw zero_divisor("tower scalar is a zero divisor");
    return step1 * step2 * (Rational(1) / n2.c_[0]);
  }

  friend bool operator==(const TowerScalar& a, const TowerScalar& b) {
    if (a.ctx_ && b.ctx_) a.check(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TowerScalar& a, const TowerScalar& b) { return !(a == b); }

  /// Real embedding s_i -> +sqrt(sigma_i).
  double to_double(FloatMode mode = FloatMode::Extended) const {
    if (is_rational()) return c_[0].get_d();
    if (ctx_->sigma1 < 0 || ctx_->sigma2 < 0)
      throw std::domain_error("negative radicand has no real embedding");
    if (mode == FloatMode::Double) {
      double r1 = std::sqrt(ctx_->sigma1.get_d());
      double r2 = std::sqrt(ctx_->sigma2.get_d());
      return c_[0].get_d() + c_[1].get_d() * r1 + c_[2].get_d() * r2 + c_[3].get_d() * r1 * r2;
    }
    long double r1 = std::sqrt(static_cast<long double>(ctx_->sigma1.get_d()));
    long double r2 = std::sqrt(static_cast<long double>(ctx_->sigma2.get_d()));
    long double v = static_cast<long double>(c_[0].get_d()) + c_[1].get_d() * r1 +
                    c_[2].get_d() * r2 + c_[3].get_d() * r1 * r2;
    return static_cast<double>(v);
  }

  /// "1/2", "-s2", "3*s1*s2" or "(1 + s1)" when several coordinates are set.
  std::string to_string() const {
    static const char* basis[4] = {"", "s1", "s2", "s1*s2"};
    int nonzero = 0;
    for (const auto& x : c_) nonzero += sgn(x) != 0;
    if (nonzero == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 4; ++i) {
      if (sgn(c_[i]) == 0) continue;
      Rational mag = abs(c_[i]);
      bool neg = sgn(c_[i]) < 0;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      if (i == 0)
        os << mag.get_str();
      else if (mag == 1)
        os << basis[i];
      else
        os << mag.get_str() << "*" << basis[i];
      first = false;
    }
    return nonzero > 1 ? "(" + os.str() + ")" : os.str();
  }

 private:
  void check(const TowerScalar& o) const {
    if (ctx_ == o.ctx_) return;
    if (!ctx_ || !o.ctx_ || !ctx_->same_as(*o.ctx_)) throw context_mismatch();
  }

  void normalize() {
    if (!ctx_) return;
    if (ctx_->root2) {
      if (sgn(c_[2]) != 0) c_[0] += *ctx_->root2 * c_[2];
      if (sgn(c_[3]) != 0) c_[1] += *ctx_->root2 * c_[3];
      c_[2] = 0;
      c_[3] = 0;
    } else if (ctx_->s2_over_s1) {
      const Rational& k = *ctx_->s2_over_s1;
      if (sgn(c_[2]) != 0) c_[1] += k * c_[2];
      if (sgn(c_[3]) != 0) c_[0] += k * ctx_->sigma1 * c_[3];
      c_[2] = 0;
      c_[3] = 0;
    }
    if (ctx_->root1) {
      if (sgn(c_[1]) != 0) c_[0] += *ctx_->root1 * c_[1];
      if (sgn(c_[3]) != 0) c_[2] += *ctx_->root1 * c_[3];
      c_[1] = 0;
      c_[3] = 0;
    }
  }

  TowerContextPtr ctx_;
  std::array<Rational, 4> c_{};
};

inline TowerScalar pow(TowerScalar base, unsigned long e) {
  TowerScalar r(base.context(), Rational(1));
  while (e != 0) {
    if (e & 1UL) r *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return r;
}

}  // namespace pellpoly

#endif  // PELLPOLY_TOWER_HPP
