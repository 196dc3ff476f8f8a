#ifndef PELLPOLY_RATFUNC_HPP
#define PELLPOLY_RATFUNC_HPP

#include "laurent.hpp"

#include <stdexcept>
#include <string>

namespace pellpoly {

/// Reduced quotient num/den of Laurent polynomials. After normalization the
/// denominator is a monic polynomial with nonzero constant term and
/// gcd(num, den) = 1; all t-powers live in the numerator.
class RationalFunc {
 public:
  explicit RationalFunc(const LaurentPoly& num)
      : num_(num), den_(LaurentPoly(num.context(), Rational(1))) {}
  RationalFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }

  friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunc derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
  }

  std::string to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(den_.context(), Rational(1));
      return;
    }
    auto [kn, pn] = num_.split_t_power();
    auto [kd, pd] = den_.split_t_power();
    LaurentPoly g = gcd_polynomial(pn, pd);
    if (g.degree() > 0) {
      pn = *divide_exact(pn, g);
      pd = *divide_exact(pd, g);
    }
    TowerScalar lc_inv = pd.leading_coeff().inverse();
    num_ = (pn * lc_inv).shift(kn - kd);
    den_ = pd * lc_inv;
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace pellpoly

#endif  // PELLPOLY_RATFUNC_HPP
