#pragma once

// Shift calculus on the super ring: E^s = exp(s*eps*d) and the operators
// built from it, all as eps-series cut at a given order.
//
// Every function taking `order` returns the exact result modulo
// eps^{order+1}, provided the input is itself exact modulo eps^{order+1} and
// has no negative eps powers.

#include "integrable/superring.hpp"

#include <functional>
#include <stdexcept>

namespace integrable {

/// Even, non-negative eps-truncation order N (results are exact mod eps^{N+1}).
class TruncOrder {
 public:
  explicit TruncOrder(int n) : n_(n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("eps order must be a non-negative even integer");
  }
  int value() const { return n_; }
  friend bool operator==(TruncOrder, TruncOrder) = default;

 private:
  int n_;
};

/// Sum_m c(m) eps^{m+eps_offset} d^m p, truncated at `order`.
SuperPoly apply_series(const SuperPoly& p, int order, const std::function<Rational(unsigned)>& c,
                       int eps_offset = 0);

/// E^s p for s in (1/2)Z.
SuperPoly shift(const Rational& s, const SuperPoly& p, int order);
/// eps^-1 (E^{1/2} - E^{-1/2})
SuperPoly nabla(const SuperPoly& p, int order);
/// E^{1/2} + E^{-1/2}
SuperPoly Delta(const SuperPoly& p, int order);
/// P = d / nabla, via the Bernoulli series.
SuperPoly pee(const SuperPoly& p, int order);
/// eps^-1 (E - E^{-1})
SuperPoly central_difference(const SuperPoly& p, int order);
/// C_u f = eps^-1 q (E^{1/2} e^u E^{1/2} - E^{-1/2} e^u E^{-1/2}) f
SuperPoly c_u(const SuperPoly& f, int order);

/// Computes x at order+1 and returns eps^-1 x truncated at order; x must
/// have vanishing eps^{-1}-coefficient after multiplication.
SuperPoly eps_inverse_of(const std::function<SuperPoly(int)>& x, int order);

/// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(unsigned n);

/// The derivation commuting with d that sends u -> vf_u, v -> vf_v and kills
/// the odd generators. vf_u and vf_v must be even. A negative order means
/// no truncation.
SuperPoly apply_evolutionary(const SuperPoly& vf_u, const SuperPoly& vf_v, const SuperPoly& p,
                             int order = -1);

}  // namespace integrable
