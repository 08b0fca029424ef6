#include "integrable/shift.hpp"

#include <mutex>
#include <vector>

namespace integrable {

namespace {

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational power(const Rational& x, unsigned n) {
  Rational r(1);
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

// Keeps only the terms whose eps exponent is at most `limit`.
SuperPoly prune(const SuperPoly& p, int limit) { return truncate_eps(p, limit); }

}  // namespace

SuperPoly apply_series(const SuperPoly& p, int order, const std::function<Rational(unsigned)>& c,
                       int eps_offset) {
  SuperPoly out;
  SuperPoly cur = prune(p, order - eps_offset);
  for (unsigned m = 0; !cur.is_zero(); ++m) {
    Rational cm = c(m);
    if (cm != 0) out += times_eps(cur, static_cast<int>(m) + eps_offset) * cm;
    // d^{m+1} terms carry eps^{m+1+offset}: anything above the cut is dropped.
    cur = prune(derive_t(cur), order - eps_offset - static_cast<int>(m) - 1);
  }
  return out;
}

SuperPoly shift(const Rational& s, const SuperPoly& p, int order) {
  Rational twice = 2 * s;
  if (twice.get_den() != 1) throw std::invalid_argument("shift amount must lie in (1/2)Z");
  if (s == 0) return truncate_eps(p, order);
  return apply_series(p, order, [&](unsigned m) -> Rational { return power(s, m) / factorial(m); });
}

SuperPoly nabla(const SuperPoly& p, int order) {
  // (2/eps) sinh(eps d / 2) = sum_j eps^{2j} d^{2j+1} / (4^j (2j+1)!)
  return apply_series(
      p, order,
      [](unsigned m) -> Rational {
        if (m % 2 == 0) return Rational(0);
        return Rational(2) * power(make_rational(1, 2), m) / factorial(m);
      },
      -1);
}

SuperPoly Delta(const SuperPoly& p, int order) {
  return apply_series(p, order, [](unsigned m) -> Rational {
    if (m % 2 != 0) return Rational(0);
    return Rational(2) * power(make_rational(1, 2), m) / factorial(m);
  });
}

SuperPoly pee(const SuperPoly& p, int order) {
  return apply_series(p, order, [](unsigned m) -> Rational {
    if (m % 2 != 0) return Rational(0);
    // (2^{1-m} - 1) B_m / m!
    Rational two_pow = (m == 0) ? Rational(2) : Rational(1) / power(Rational(2), m - 1);
    return (two_pow - 1) * bernoulli(m) / factorial(m);
  });
}

SuperPoly central_difference(const SuperPoly& p, int order) {
  return apply_series(
      p, order,
      [](unsigned m) -> Rational {
        if (m % 2 == 0) return Rational(0);
        return Rational(2) / factorial(m);
      },
      -1);
}

SuperPoly eps_inverse_of(const std::function<SuperPoly(int)>& x, int order) {
  SuperPoly raw = x(order + 1);
  SuperPoly out = truncate_eps(times_eps(raw, -1), order);
  return out;
}

SuperPoly c_u(const SuperPoly& f, int order) {
  const SuperPoly e = SuperPoly::exp_u();
  const Rational half(1, 2);
  return eps_inverse_of(
      [&](int o) {
        SuperPoly plus = shift(half, mul_truncated(e, shift(half, f, o), o), o);
        SuperPoly minus = shift(-half, mul_truncated(e, shift(-half, f, o), o), o);
        return (plus - minus) * Coeff::q();
      },
      order);
}

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    auto m = static_cast<unsigned>(table.size());
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += binomial(m + 1, k) * table[k];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[n];
}

SuperPoly apply_evolutionary(const SuperPoly& vf_u, const SuperPoly& vf_v, const SuperPoly& p,
                             int order) {
  const int cut = order < 0 ? INT32_MAX : order;
  const int top_u = std::max(p.max_jet(Kind::U), p.max_jet(Kind::ExpU));
  const int top_v = p.max_jet(Kind::V);
  std::vector<SuperPoly> du{truncate_eps(vf_u, cut)};
  std::vector<SuperPoly> dv{truncate_eps(vf_v, cut)};
  for (int n = 1; n <= top_u; ++n) du.push_back(derive_t(du.back()));
  for (int n = 1; n <= top_v; ++n) dv.push_back(derive_t(dv.back()));

  SuperPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [g, e] : m.even()) {
      if (g.kind != Kind::U && g.kind != Kind::V) continue;
      Monomial rest = m;
      rest.remove(g);
      const SuperPoly& image = (g.kind == Kind::U) ? du[g.jet] : dv[g.jet];
      out += mul_truncated(SuperPoly(rest, c * Rational(e)), image, cut);
    }
    if (m.exp_u() > 0) out += mul_truncated(SuperPoly(m, c * Rational(m.exp_u())), du[0], cut);
  }
  return out;
}

}  // namespace integrable
