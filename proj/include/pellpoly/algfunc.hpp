#ifndef PELLPOLY_ALGFUNC_HPP
#define PELLPOLY_ALGFUNC_HPP

// The quadratic function field K(t)[w] / (w^2 - (t^{2r} - a1^2)) with the
// derivation D = t^{r+1} / (a1' t - r a1) * d/dt.
//
// Elements are (q + s*w) / (A^i * B^j) with q, s Laurent polynomials,
// A = a1' t - r a1 and B = t^{2r} - a1^2. Every denominator produced by
// d/dt and D is of that shape, so no polynomial gcd is needed; common
// factors of A and B are cancelled by exact trial division.

#include "laurent.hpp"

#include <memory>
#include <optional>
#include <stdexcept>

namespace pellpoly {

struct AlgFuncField {
  LaurentPoly a1;
  long r = 0;
  LaurentPoly A;  // a1' t - r a1
  LaurentPoly B;  // t^{2r} - a1^2 = w^2
  LaurentPoly C;  // r t^{2r-1} - a1 a1', so that w' = C w / B

  AlgFuncField(const LaurentPoly& a1_, long r_) : a1(a1_), r(r_) {
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    const auto& ctx = a1.context();
    LaurentPoly da1 = a1.derivative();
    A = da1.shift(1) - a1 * Rational(r);
    B = LaurentPoly::monomial(ctx, 2 * r) - a1 * a1;
    C = LaurentPoly::monomial(ctx, 2 * r - 1, Rational(r)) - a1 * da1;
    if (r == 0) C = -(a1 * da1);
    if (B.is_zero()) throw std::domain_error("w^2 = t^{2r} - a1^2 vanishes identically");
  }
  bool derivation_degenerate() const { return A.is_zero(); }
};

using AlgFuncFieldPtr = std::shared_ptr<const AlgFuncField>;

class AlgFuncElem {
 public:
  AlgFuncElem(AlgFuncFieldPtr field, LaurentPoly q, LaurentPoly s, long a_pow = 0, long b_pow = 0)
      : field_(std::move(field)), q_(std::move(q)), s_(std::move(s)), a_pow_(a_pow), b_pow_(b_pow) {
    reduce();
  }
  static AlgFuncElem rational(AlgFuncFieldPtr field, const LaurentPoly& q) {
    LaurentPoly zero(q.context());
    return {std::move(field), q, zero};
  }
  /// The generator w.
  static AlgFuncElem w(AlgFuncFieldPtr field) {
    const auto& ctx = field->a1.context();
    return {field, LaurentPoly(ctx), LaurentPoly(ctx, Rational(1))};
  }
  /// w^{-1} = w / B.
  static AlgFuncElem w_inverse(AlgFuncFieldPtr field) {
    const auto& ctx = field->a1.context();
    return {field, LaurentPoly(ctx), LaurentPoly(ctx, Rational(1)), 0, 1};
  }

  const LaurentPoly& q_numerator() const { return q_; }
  const LaurentPoly& s_numerator() const { return s_; }
  long a_power() const { return a_pow_; }
  long b_power() const { return b_pow_; }
  const AlgFuncFieldPtr& field() const { return field_; }
  bool is_zero() const { return q_.is_zero() && s_.is_zero(); }
  bool w_component_zero() const { return s_.is_zero(); }

  friend AlgFuncElem operator+(const AlgFuncElem& x, const AlgFuncElem& y) { return combine(x, y, false); }
  friend AlgFuncElem operator-(const AlgFuncElem& x, const AlgFuncElem& y) { return combine(x, y, true); }

  friend AlgFuncElem operator*(const AlgFuncElem& x, const AlgFuncElem& y) {
    const auto& B = x.field_->B;
    LaurentPoly q = x.q_ * y.q_ + x.s_ * y.s_ * B;
    LaurentPoly s = x.q_ * y.s_ + x.s_ * y.q_;
    return {x.field_, std::move(q), std::move(s), x.a_pow_ + y.a_pow_, x.b_pow_ + y.b_pow_};
  }
  friend AlgFuncElem operator*(AlgFuncElem x, const LaurentPoly& f) {
    return {x.field_, x.q_ * f, x.s_ * f, x.a_pow_, x.b_pow_};
  }
  friend AlgFuncElem operator*(AlgFuncElem x, const Rational& c) {
    return {x.field_, x.q_ * c, x.s_ * c, x.a_pow_, x.b_pow_};
  }

  /// Conjugate w -> -w.
  AlgFuncElem conj() const { return {field_, q_, -s_, a_pow_, b_pow_}; }

  /// d/dt using w' = C w / B.
  AlgFuncElem derivative() const {
    const auto& f = *field_;
    LaurentPoly dA = f.A.derivative();
    LaurentPoly dB = f.B.derivative();
    // derivative of the denominator, scaled by A^{i+1} B^{j+1} / (A^i B^j)
    LaurentPoly den_term = dA * f.B * Rational(a_pow_) + dB * f.A * Rational(b_pow_);
    LaurentPoly q = f.A * f.B * q_.derivative() - q_ * den_term;
    LaurentPoly s = f.A * (f.B * s_.derivative() + s_ * f.C) - s_ * den_term;
    return {field_, std::move(q), std::move(s), a_pow_ + 1, b_pow_ + 1};
  }

  /// D = t^{r+1} / A * d/dt.
  AlgFuncElem apply_d() const {
    if (field_->derivation_degenerate())
      throw std::domain_error("derivation D is degenerate: a1' t - r a1 = 0");
    AlgFuncElem d = derivative();
    return {field_, d.q_.shift(field_->r + 1), d.s_.shift(field_->r + 1), d.a_pow_ + 1, d.b_pow_};
  }

  /// The element as a Laurent polynomial, if it has no w part and the
  /// denominator divides exactly.
  std::optional<LaurentPoly> as_laurent() const {
    if (!s_.is_zero()) return std::nullopt;
    LaurentPoly den = pow(field_->A, static_cast<unsigned long>(a_pow_)) *
                      pow(field_->B, static_cast<unsigned long>(b_pow_));
    return divide_exact(q_, den);
  }

  /// Exact equality with the Laurent polynomial f (cross-multiplied).
  bool equals_laurent(const LaurentPoly& f) const {
    if (!s_.is_zero()) return false;
    LaurentPoly den = pow(field_->A, static_cast<unsigned long>(a_pow_)) *
                      pow(field_->B, static_cast<unsigned long>(b_pow_));
    return q_ == f * den;
  }

  /// Rational-function part of (this)^2 = (q^2 + s^2 B + 2qs w) / den^2.
  AlgFuncElem square() const { return *this * *this; }

 private:
  static AlgFuncElem combine(const AlgFuncElem& x, const AlgFuncElem& y, bool subtract) {
    const auto& f = *x.field_;
    long ia = std::max(x.a_pow_, y.a_pow_);
    long ib = std::max(x.b_pow_, y.b_pow_);
    LaurentPoly sx = pow(f.A, static_cast<unsigned long>(ia - x.a_pow_)) *
                     pow(f.B, static_cast<unsigned long>(ib - x.b_pow_));
    LaurentPoly sy = pow(f.A, static_cast<unsigned long>(ia - y.a_pow_)) *
                     pow(f.B, static_cast<unsigned long>(ib - y.b_pow_));
    LaurentPoly q = x.q_ * sx;
    LaurentPoly s = x.s_ * sx;
    if (subtract) {
      q -= y.q_ * sy;
      s -= y.s_ * sy;
    } else {
      q += y.q_ * sy;
      s += y.s_ * sy;
    }
    return {x.field_, std::move(q), std::move(s), ia, ib};
  }

  void reduce() {
    if (q_.is_zero() && s_.is_zero()) {
      a_pow_ = 0;
      b_pow_ = 0;
      return;
    }
    auto strip = [this](const LaurentPoly& g, long& power) {
      while (power > 0) {
        auto dq = divide_exact(q_, g);
        if (!dq) return;
        auto ds = divide_exact(s_, g);
        if (!ds) return;
        q_ = std::move(*dq);
        s_ = std::move(*ds);
        --power;
      }
    };
    strip(field_->A, a_pow_);
    strip(field_->B, b_pow_);
  }

  AlgFuncFieldPtr field_;
  LaurentPoly q_;
  LaurentPoly s_;
  long a_pow_ = 0;
  long b_pow_ = 0;
};

}  // namespace pellpoly

#endif  // PELLPOLY_ALGFUNC_HPP
