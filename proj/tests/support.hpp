#ifndef PELLPOLY_TESTS_SUPPORT_HPP
#define PELLPOLY_TESTS_SUPPORT_HPP

#include "pellpoly/curve.hpp"
#include "pellpoly/laurent.hpp"
#include "pellpoly/tower.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace pellpoly;

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline TowerScalar random_scalar(std::mt19937_64& rng, const TowerContextPtr& ctx) {
  return {ctx, random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, const TowerContextPtr& ctx, long lo, long hi,
                                  bool tower_coeffs = true) {
  LaurentPoly p(ctx);
  std::bernoulli_distribution keep(0.7);
  for (long e = lo; e <= hi; ++e)
    if (keep(rng)) p.set(e, tower_coeffs ? random_scalar(rng, ctx) : TowerScalar(ctx, random_rational(rng)));
  return p;
}

/// Test configurations: the three DJKM parameters and the Chebyshev baseline.
inline std::vector<PellConfigPtr> test_configs() {
  return {djkm_config(Rational(3)), djkm_config(make_rational(5, 3)), djkm_config(Rational(17)),
          chebyshev_config()};
}

inline std::vector<Rational> test_betas() { return {Rational(3), make_rational(5, 3), Rational(17)}; }

}  // namespace testing_support

#endif  // PELLPOLY_TESTS_SUPPORT_HPP
