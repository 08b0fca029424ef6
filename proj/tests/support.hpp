#pragma once

// Hand-rolled generators for the property tests. Every test seeds its own
// engine so failures reproduce.

#include "integrable/superring.hpp"

#include <random>

namespace testing_support {

using namespace integrable;

inline int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(std::mt19937_64& rng) {
  int n = pick(rng, -5, 5);
  if (n == 0) n = 1;
  return make_rational(n, pick(rng, 1, 4));
}

inline Coeff random_coeff(std::mt19937_64& rng, int min_eps = -2, int max_eps = 3) {
  Coeff c;
  for (int i = pick(rng, 1, 3); i > 0; --i) c.add_term(pick(rng, min_eps, max_eps), pick(rng, 0, 2), small_rational(rng));
  return c;
}

/// Polynomial in u-jets only, eps exponents 0..2.
inline SuperPoly random_kdv_poly(std::mt19937_64& rng, int max_jet = 2) {
  SuperPoly p;
  for (int t = pick(rng, 1, 3); t > 0; --t) {
    SuperPoly m(Coeff(small_rational(rng), 2 * pick(rng, 0, 1)));
    for (int i = pick(rng, 0, 2); i > 0; --i) m = m * SuperPoly::u(pick(rng, 0, max_jet));
    p += m;
  }
  return p;
}

/// Homogeneous element of the super ring with the given odd degree.
inline SuperPoly random_super(std::mt19937_64& rng, int odd_degree, bool exp_u = true) {
  SuperPoly p;
  for (int t = pick(rng, 1, 3); t > 0; --t) {
    SuperPoly m(Coeff(small_rational(rng), pick(rng, 0, 2), pick(rng, 0, 1)));
    for (int i = pick(rng, 0, 2); i > 0; --i) m = m * SuperPoly::u(pick(rng, 0, 2));
    for (int i = pick(rng, 0, 2); i > 0; --i) m = m * SuperPoly::v(pick(rng, 0, 2));
    if (exp_u && pick(rng, 0, 2) == 0) m = m * SuperPoly::exp_u();
    int placed = 0;
    while (placed < odd_degree) {
      SuperPoly g = pick(rng, 0, 1) ? SuperPoly::theta_u(pick(rng, 0, 2)) : SuperPoly::theta_v(pick(rng, 0, 2));
      SuperPoly next = m * g;
      if (next.is_zero()) continue;
      m = next;
      ++placed;
    }
    p += m;
  }
  if (p.is_zero()) return random_super(rng, odd_degree, exp_u);
  return p;
}

}  // namespace testing_support
