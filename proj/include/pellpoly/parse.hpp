#ifndef PELLPOLY_PARSE_HPP
#define PELLPOLY_PARSE_HPP

// Text form of Laurent polynomials.
//
//   expr    = term { ("+" | "-") term } ;
//   term    = ["+" | "-"] power { ("*" power) | ("/" number) } ;
//   power   = primary [ "^" ["-"] integer ] ;
//   primary = number | "t" | "s1" | "s2" | "(" expr ")" ;
//   number  = digit { digit } ;
//
// Negative exponents are allowed only on monomials. Whitespace is ignored.
// The output of LaurentPoly::to_string parses back to the same polynomial.

#include "laurent.hpp"
#include "rational.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace pellpoly {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, TowerContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

  LaurentPoly parse() {
    LaurentPoly v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view text_;
  TowerContextPtr ctx_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("polynomial: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                      std::string(text_) + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPoly expr() {
    LaurentPoly v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }
  LaurentPoly term() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    LaurentPoly v = power();
    for (;;) {
      if (accept('*')) {
        v = v * power();
      } else if (accept('/')) {
        Integer d = number();
        if (d == 0) fail("division by zero");
        v = v * make_rational(Integer(1), d);
      } else {
        break;
      }
    }
    return negate ? -v : v;
  }
  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    Integer e = number();
    if (!e.fits_slong_p()) fail("exponent too large");
    long k = e.get_si();
    if (!neg) return pow(base, static_cast<unsigned long>(k));
    if (!base.is_monomial() || !base.leading_coeff().is_rational())
      fail("negative exponent needs a rational monomial");
    Rational c = base.leading_coeff().coord(0);
    Rational inv = 1 / c;
    Rational coeff = 1;
    for (long i = 0; i < k; ++i) coeff *= inv;
    return LaurentPoly::monomial(ctx_, -base.degree() * k, coeff);
  }
  LaurentPoly primary() {
    skip();
    if (accept('(')) {
      LaurentPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return LaurentPoly(ctx_, Rational(number()));
    if (text_.substr(pos_, 2) == "s1" || text_.substr(pos_, 2) == "s2") {
      bool first = text_[pos_ + 1] == '1';
      pos_ += 2;
      return LaurentPoly(first ? TowerScalar::s1(ctx_) : TowerScalar::s2(ctx_));
    }
    if (pos_ < text_.size() && text_[pos_] == 't') {
      ++pos_;
      return LaurentPoly::t(ctx_);
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
  }
};

}  // namespace detail

inline LaurentPoly parse_laurent(std::string_view text, const TowerContextPtr& ctx) {
  return detail::PolyParser(text, ctx).parse();
}

inline LaurentPoly parse_laurent(std::string_view text) { return parse_laurent(text, rational_tower()); }

}  // namespace pellpoly

#endif  // PELLPOLY_PARSE_HPP
