#ifndef PELLPOLY_LAURENT_HPP
#define PELLPOLY_LAURENT_HPP

// Sparse Laurent polynomials in t with tower-scalar coefficients.

#include "tower.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pellpoly {

class LaurentPoly {
 public:
  using Terms = std::map<long, TowerScalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(TowerContextPtr ctx) : ctx_(std::move(ctx)) {}
  LaurentPoly(TowerContextPtr ctx, const Rational& c) : ctx_(std::move(ctx)) {
    set(0, TowerScalar(ctx_, c));
  }
  explicit LaurentPoly(const TowerScalar& c, long exponent = 0) : ctx_(c.context()) {
    set(exponent, c);
  }

  static LaurentPoly monomial(TowerContextPtr ctx, long exponent, const Rational& c = 1) {
    LaurentPoly r(std::move(ctx));
    r.set(exponent, TowerScalar(r.ctx_, c));
    return r;
  }
  static LaurentPoly t(TowerContextPtr ctx) { return monomial(std::move(ctx), 1); }

  /// Builds sum_k coeffs[k] t^k from rational coefficients (ascending order).
  static LaurentPoly from_rationals(TowerContextPtr ctx, const std::vector<Rational>& coeffs,
                                    long low_exponent = 0) {
    LaurentPoly r(std::move(ctx));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      r.set(low_exponent + static_cast<long>(k), TowerScalar(r.ctx_, coeffs[k]));
    return r;
  }

  const TowerContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest exponent; throws on the zero polynomial.
  long degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
  }
  long low_degree() const {
    if (is_zero()) throw std::domain_error("low degree of zero polynomial");
    return terms_.begin()->first;
  }
  const TowerScalar& leading_coeff() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
  }
  bool is_polynomial() const { return is_zero() || low_degree() >= 0; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }

  TowerScalar coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? TowerScalar(ctx_) : it->second;
  }
  TowerScalar constant_term() const { return coeff(0); }

  void set(long exponent, const TowerScalar& c) {
    adopt(c.context());
    if (c.is_zero())
      terms_.erase(exponent);
    else
      terms_[exponent] = c;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    adopt(o.ctx_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    adopt(o.ctx_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const TowerScalar& s) {
    adopt(s.context());
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  LaurentPoly& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= q;
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(LaurentPoly a, const TowerScalar& s) { return a *= s; }
  friend LaurentPoly operator*(const TowerScalar& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& q) { return a *= q; }
  friend LaurentPoly operator*(const Rational& q, LaurentPoly a) { return a *= q; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.ctx_ ? a.ctx_ : b.ctx_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && !a.ctx_->same_as(*b.ctx_)) throw context_mismatch();
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.accumulate(ea + eb, ca * cb);
    r.prune();
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplies by t^k.
  LaurentPoly shift(long k) const {
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  LaurentPoly derivative() const {
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_)
      if (e != 0) r.terms_.emplace_hint(r.terms_.end(), e - 1, c * Rational(e));
    return r;
  }

  TowerScalar evaluate(const TowerScalar& x) const {
    TowerScalar acc(ctx_);
    if (is_zero()) return acc;
    if (low_degree() < 0 && x.is_zero()) throw std::domain_error("Laurent polynomial evaluated at 0");
    for (const auto& [e, c] : terms_) {
      TowerScalar xe = e >= 0 ? pellpoly::pow(x, static_cast<unsigned long>(e))
                              : pellpoly::pow(x.inverse(), static_cast<unsigned long>(-e));
      acc += c * xe;
    }
    return acc;
  }

  double evaluate(double x) const {
    long double acc = 0;
    for (const auto& [e, c] : terms_) acc += c.to_double() * std::pow(static_cast<long double>(x), e);
    return static_cast<double>(acc);
  }

  /// Pair (k, q) with this = t^k * q and q having a nonzero constant term.
  std::pair<long, LaurentPoly> split_t_power() const {
    if (is_zero()) return {0, *this};
    long k = low_degree();
    return {k, shift(-k)};
  }

  LaurentPoly monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
  }

  std::string to_string() const;

 private:
  void adopt(const TowerContextPtr& other) {
    if (!other) return;
    if (!ctx_) {
      ctx_ = other;
      return;
    }
    if (ctx_ != other && !ctx_->same_as(*other)) throw context_mismatch();
  }
  void add_term(long e, const TowerScalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void accumulate(long e, const TowerScalar& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  TowerContextPtr ctx_;
  Terms terms_;
};

inline LaurentPoly pow(LaurentPoly base, unsigned long e) {
  LaurentPoly r(base.context(), Rational(1));
  while (e != 0) {
    if (e & 1UL) r *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return r;
}

/// Canonical rendering: decreasing exponents, e.g. "1/2*t^4 - 2*t^2 + 1/2".
inline std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    long e = it->first;
    TowerScalar c = it->second;
    int nonzero = 0;
    int which = 0;
    for (int i = 0; i < 4; ++i)
      if (sgn(c.coord(i)) != 0) {
        ++nonzero;
        which = i;
      }
    bool negative = nonzero == 1 && sgn(c.coord(which)) < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string tpart;
    if (e == 1)
      tpart = "t";
    else if (e != 0)
      tpart = "t^" + std::to_string(e);
    if (e == 0)
      out += c.to_string();
    else if (c.is_one())
      out += tpart;
    else
      out += c.to_string() + "*" + tpart;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and gcd on genuine polynomials (all exponents >= 0).

struct DivResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Euclidean division of polynomials; both operands must have no negative exponents.
inline DivResult divmod(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!f.is_polynomial() || !g.is_polynomial())
    throw std::invalid_argument("divmod expects polynomials without negative exponents");
  LaurentPoly q(f.context() ? f.context() : g.context());
  LaurentPoly r = f;
  const long dg = g.degree();
  const TowerScalar lead_inv = g.leading_coeff().inverse();
  while (!r.is_zero() && r.degree() >= dg) {
    long shift = r.degree() - dg;
    TowerScalar c = r.leading_coeff() * lead_inv;
    LaurentPoly step(c, shift);
    q += step;
    r -= g.shift(shift) * c;
  }
  return {q, r};
}

/// Exact quotient of Laurent polynomials if g divides f in the polynomial sense
/// after aligning lowest exponents; t-powers are always invertible.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.is_zero()) return f;
  auto [kf, pf] = f.split_t_power();
  auto [kg, pg] = g.split_t_power();
  auto [q, r] = divmod(pf, pg);
  if (!r.is_zero()) return std::nullopt;
  return q.shift(kf - kg);
}

/// True divisibility on genuine polynomials: the factor t counts.
inline bool divides_polynomial(const LaurentPoly& g, const LaurentPoly& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  return divmod(f, g).remainder.is_zero();
}

/// Monic gcd of two genuine polynomials (t is a genuine factor here).
inline LaurentPoly gcd_polynomial(LaurentPoly f, LaurentPoly g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  if (!f.is_polynomial() || !g.is_polynomial())
    throw std::invalid_argument("gcd_polynomial expects polynomials");
  f = f.monic();
  g = g.monic();
  while (!g.is_zero()) {
    LaurentPoly r = divmod(f, g).remainder.monic();
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

/// Monic gcd of the polynomial parts after clearing t-powers, so the unit t
/// never contributes to the gcd.
inline LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  return gcd_polynomial(f.split_t_power().second, g.split_t_power().second);
}

struct SquarefreeFactor {
  LaurentPoly factor;
  int multiplicity;
};

/// Yun's squarefree decomposition of a genuine polynomial of positive degree.
/// Returns the nonconstant monic factors f_i with f = lc * prod f_i^i.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  if (!f.is_polynomial()) throw std::invalid_argument("squarefree decomposition expects a polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  LaurentPoly df = f.derivative();
  LaurentPoly a0 = gcd_polynomial(f, df);
  LaurentPoly b = *divide_exact(f, a0);
  LaurentPoly c = *divide_exact(df, a0);
  LaurentPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    LaurentPoly a = d.is_zero() ? b.monic() : gcd_polynomial(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = *divide_exact(b, a);
    c = *divide_exact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Substitutes the Laurent polynomial v for the variable of `poly`
/// (which must have no negative exponents): sum_k c_k v^k by Horner.
inline LaurentPoly compose(const LaurentPoly& poly, const LaurentPoly& v) {
  LaurentPoly acc(poly.context() ? poly.context() : v.context());
  if (poly.is_zero()) return acc;
  if (!poly.is_polynomial()) throw std::invalid_argument("compose expects a polynomial outer function");
  long deg = poly.degree();
  for (long k = deg; k >= 0; --k) {
    acc = acc * v;
    TowerScalar c = poly.coeff(k);
    if (!c.is_zero()) acc += LaurentPoly(c);
  }
  return acc;
}

}  // namespace pellpoly

#endif  // PELLPOLY_LAURENT_HPP
