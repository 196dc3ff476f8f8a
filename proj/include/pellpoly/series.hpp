#ifndef PELLPOLY_SERIES_HPP
#define PELLPOLY_SERIES_HPP

// Truncated power series in an auxiliary variable x with Laurent-polynomial
// coefficients, arithmetic taken modulo x^(order+1).

#include "laurent.hpp"

#include <stdexcept>
#include <vector>

namespace pellpoly {

class TruncSeries {
 public:
  TruncSeries(TowerContextPtr ctx, int order) : ctx_(std::move(ctx)) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, LaurentPoly(ctx_));
  }

  /// Series from explicit coefficients, truncated or zero-padded to `order`.
  TruncSeries(TowerContextPtr ctx, int order, const std::vector<LaurentPoly>& coeffs)
      : TruncSeries(std::move(ctx), order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = coeffs[k];
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const TowerContextPtr& context() const { return ctx_; }
  const LaurentPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  LaurentPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.ctx_, a.order());
    const int n = a.order();
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j)
        if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  friend TruncSeries operator*(TruncSeries a, const LaurentPoly& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }

  /// d/dx; the top coefficient becomes unknown and is set to zero.
  TruncSeries derivative() const {
    TruncSeries r(ctx_, order());
    for (int k = 0; k < order(); ++k) r[k] = coeffs_[static_cast<std::size_t>(k) + 1] * Rational(k + 1);
    return r;
  }

  /// Multiplies by x, dropping the coefficient pushed past the order.
  TruncSeries times_x() const {
    TruncSeries r(ctx_, order());
    for (int k = order(); k > 0; --k) r[k] = coeffs_[static_cast<std::size_t>(k) - 1];
    return r;
  }

  /// Coefficientwise equality for indices 0..through.
  bool agrees_through(const TruncSeries& o, int through) const {
    check(o);
    for (int k = 0; k <= through; ++k)
      if (!((*this)[k] == o[k])) return false;
    return true;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

 private:
  void check(const TruncSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  }

  TowerContextPtr ctx_;
  std::vector<LaurentPoly> coeffs_;
};

}  // namespace pellpoly

#endif  // PELLPOLY_SERIES_HPP
