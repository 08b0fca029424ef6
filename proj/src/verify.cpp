#include "integrable/verify.hpp"

#include "integrable/psdo.hpp"
#include "integrable/shift.hpp"

#include <chrono>
#include <functional>
#include <mutex>

namespace integrable {

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& it : items) n += it.pass ? 0 : 1;
  return n;
}

std::shared_ptr<const TodaLattice> toda_lattice(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const TodaLattice>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_shared<const TodaLattice>(order);
  return slot;
}

SuperPoly random_density(std::mt19937_64& rng, int odd_degree) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  SuperPoly out;
  const int terms = pick(1, 3);
  for (int t = 0; t < terms; ++t) {
    SuperPoly m(Coeff(make_rational(pick(1, 3) * (pick(0, 1) ? 1 : -1), pick(1, 3)), pick(0, 1) * 2));
    for (int i = pick(0, 2); i > 0; --i) m = m * SuperPoly::u(pick(0, 2));
    for (int i = pick(0, 2); i > 0; --i) m = m * SuperPoly::v(pick(0, 2));
    if (pick(0, 3) == 0) m = m * SuperPoly::exp_u() * Coeff::q();
    std::vector<Generator> odd;
    while (static_cast<int>(odd.size()) < odd_degree) {
      Generator g{pick(0, 1) ? Kind::ThetaU : Kind::ThetaV, static_cast<std::uint32_t>(pick(0, 2))};
      if (std::find(odd.begin(), odd.end(), g) == odd.end()) odd.push_back(g);
    }
    for (const auto& g : odd) m = m * SuperPoly::gen(g);
    out += m;
  }
  if (out.is_zero()) return random_density(rng, odd_degree);
  return out;
}

namespace {

using Residual = std::optional<std::string>;
using Params = std::map<std::string, long long>;

class Runner {
 public:
  explicit Runner(std::string suite) { report_.suite = std::move(suite); }

  void check(std::string id, Params params, const std::function<Residual()>& fn) {
    VerifyItem item;
    item.id = std::move(id);
    item.params = std::move(params);
    auto t0 = std::chrono::steady_clock::now();
    try {
      Residual r = fn();
      item.pass = !r;
      if (r) item.residual = r->empty() ? "(unspecified residual)" : *r;
    } catch (const std::exception& e) {
      item.pass = false;
      item.residual = std::string("error: ") + e.what();
    }
    item.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.items.push_back(std::move(item));
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

Residual zero(const SuperPoly& p) {
  if (p.is_zero()) return std::nullopt;
  return p.str();
}

Residual zero(const Functional& f) {
  if (f.is_zero()) return std::nullopt;
  return f.density().is_zero() ? std::string("nonzero constant") : f.density().str();
}

Residual equal(const SuperPoly& a, const SuperPoly& b) { return zero(a - b); }
Residual equal(const Functional& a, const Functional& b) { return zero(a - b); }

Residual both(Residual a, Residual b) {
  if (a && b) return *a + " ; " + *b;
  return a ? a : b;
}

std::string name_n(const std::string& prefix, long long n) { return prefix + "/n=" + std::to_string(n); }

int trials_or(const VerifyOptions& o, int dflt) { return o.trials < 0 ? dflt : o.trials; }

// ---------------------------------------------------------------- KdV

VerifyReport suite_gd(const VerifyOptions& o) {
  Runner r("gd");
  const int max_k = o.max_n.value_or(5);
  r.check("gd/f0", {{"k", 0}}, [] { return equal(gelfand_dickii_residue(0), SuperPoly::u()); });
  r.check("gd/f1", {{"k", 1}}, [] {
    SuperPoly f1 = SuperPoly::u(2) * Coeff(make_rational(1, 8), 2) + SuperPoly::u() * SuperPoly::u() * make_rational(3, 4);
    return equal(gelfand_dickii_residue(1), f1);
  });
  for (int k = 0; k <= max_k; ++k) {
    r.check(name_n("gd/residue=recursion", k), {{"k", k}},
            [k] { return equal(gelfand_dickii_residue(k), gelfand_dickii_recursion(k)); });
    r.check(name_n("gd/constant-term", k), {{"k", k}}, [k] {
      Coeff c = gelfand_dickii_residue(k).constant_term();
      return c.is_zero() ? Residual() : c.str();
    });
  }
  for (int k = 1; k <= std::min(max_k, 4); ++k) {
    r.check(name_n("gd/L-1", k), {{"k", k}}, [k] {
      return equal(kdv_L_minus1(gelfand_dickii_residue(k)),
                   gelfand_dickii_residue(k - 1) * make_rational(-(2 * k + 1), 2));
    });
    r.check(name_n("gd/L0", k), {{"k", k}}, [k] {
      return equal(kdv_L0(gelfand_dickii_residue(k)), gelfand_dickii_residue(k) * Rational(-(k + 1)));
    });
  }
  return r.take();
}

VerifyReport suite_kdv(const VerifyOptions& o) {
  Runner r("kdv");
  const int max_k = o.max_n.value_or(3);
  r.check("kdv/delta0", {{"k", 0}}, [] { return equal(kdv_flow(0, SuperPoly::u()), SuperPoly::u(1)); });
  r.check("kdv/delta1", {{"k", 1}}, [] {
    SuperPoly rhs = (SuperPoly::u(3) * Coeff::eps(2) + SuperPoly::u() * SuperPoly::u(1) * Rational(12)) * make_rational(1, 8);
    return equal(kdv_flow(1, SuperPoly::u()), rhs);
  });
  r.check("kdv/[D,L]", {{"floor", -8}}, [] {
    PsdOp c = commutator(sqrt_D(-8), PsdOp::lax());
    for (const auto& [i, a] : c.coeffs())
      if (!a.is_zero()) return Residual("d^" + std::to_string(i) + ": " + a.str());
    return Residual();
  });
  for (int m = 0; m <= max_k; ++m)
    for (int n = m + 1; n <= max_k; ++n)
      r.check("kdv/[delta_m,delta_n]u/m=" + std::to_string(m) + "/n=" + std::to_string(n), {{"m", m}, {"n", n}},
              [m, n] {
                SuperPoly lhs = kdv_flow(m, kdv_flow(n, SuperPoly::u()));
                SuperPoly rhs = kdv_flow(n, kdv_flow(m, SuperPoly::u()));
                return equal(lhs, rhs);
              });
  return r.take();
}

// ---------------------------------------------------------------- Toda

VerifyReport suite_structure(const VerifyOptions& o) {
  Runner r("structure");
  auto toda = toda_lattice(o.order);
  const int max_n = o.max_n.value_or(6);
  const int order = o.order;
  for (int n = 1; n <= max_n; ++n) {
    r.check(name_n("structure/p-1=qXp1", n), {{"n", n}}, [&, n] {
      return equal(toda->p(-1, n), mul_truncated(SuperPoly::exp_u() * Coeff::q(), toda->p(1, n), order));
    });
    r.check(name_n("structure/e(p_k)", n), {{"n", n}}, [&, n] {
      Residual acc;
      for (int k = -n; k <= n; ++k) acc = both(acc, equal(apply_e(toda->p(k, n)), toda->p(k, n - 1) * Rational(n)));
      return acc;
    });
    r.check(name_n("structure/E(p_k)", n), {{"n", n}}, [&, n] {
      Residual acc;
      for (int k = -n; k <= n; ++k) acc = both(acc, equal(apply_E(toda->p(k, n)), toda->p(k, n) * Rational(n - k)));
      return acc;
    });
    r.check(name_n("structure/origin-symmetry", n), {{"n", n}}, [&, n] {
      Residual acc;
      for (int k = 1; k <= n; ++k)
        acc = both(acc, equal(at_origin(toda->p(-k, n)), at_origin(toda->p(k, n)) * Coeff::q(k)));
      return acc;
    });
    r.check(name_n("structure/support", n), {{"n", n}}, [&, n] {
      const auto& c = toda->lax_power(n).coeffs();
      if (c.begin()->first < -n || c.rbegin()->first > n) return Residual("support outside [-n, n]");
      return equal(toda->p(n, n), SuperPoly(1));
    });
  }
  return r.take();
}

VerifyReport suite_ddd(const VerifyOptions& o) {
  Runner r("ddd");
  auto toda = toda_lattice(o.order);
  const int max_n = o.max_n.value_or(6);
  for (int n = 1; n <= max_n; ++n)
    r.check(name_n("ddd", n), {{"n", n}}, [&, n] { return zero(ddd_residual(*toda, n)); });
  r.check("ddd/h1-du", {{"n", 1}}, [&] { return equal(toda->hamiltonian(1).du(), SuperPoly::exp_u() * Coeff::q()); });
  return r.take();
}

VerifyReport suite_kupershmidt(const VerifyOptions& o) {
  Runner r("kupershmidt");
  auto toda = toda_lattice(o.order);
  const int max_n = o.max_n.value_or(5);
  for (int n = 1; n <= max_n; ++n)
    r.check(name_n("kupershmidt", n), {{"n", n}}, [&, n] {
      auto res = kupershmidt_residual(*toda, n);
      return both(zero(res.first), zero(res.second));
    });
  for (int n = 0; n <= max_n; ++n)
    r.check(name_n("kupershmidt/dh", n), {{"n", n}}, [&, n] {
      Functional h = toda->hamiltonian(n);
      return both(equal(h.dv(), toda->p(0, n)), equal(h.du(), toda->p(-1, n)));
    });
  return r.take();
}

VerifyReport suite_legendre(const VerifyOptions& o) {
  Runner r("legendre");
  auto toda = toda_lattice(o.order);
  const int max_n = o.max_n.value_or(8);
  for (int n = 0; n <= max_n; ++n)
    r.check(name_n("legendre", n), {{"n", n}},
            [&, n] { return equal(dispersionless_p0(n), truncate_eps(toda->p(0, n), 0)); });
  return r.take();
}

VerifyReport suite_commute(const VerifyOptions& o) {
  Runner r("commute");
  auto toda = toda_lattice(o.order);
  const int max_n = o.max_n.value_or(4);
  const int order = o.order;
  r.check("commute/delta1", {{"n", 1}}, [&] {
    auto vf = toda->flow_field(1);
    return both(equal(vf.u, nabla(SuperPoly::v(), order)),
                equal(vf.v, nabla(SuperPoly::exp_u() * Coeff::q(), order)));
  });
  r.check("commute/toda-equation", {{"n", 1}}, [&] {
    SuperPoly lhs = toda->flow(1, toda->flow_field(1).u);
    SuperPoly rhs = nabla(nabla(SuperPoly::exp_u() * Coeff::q(), order), order);
    return equal(lhs, rhs);
  });
  for (int m = 1; m <= max_n; ++m)
    for (int n = m + 1; n <= max_n; ++n)
      r.check("commute/m=" + std::to_string(m) + "/n=" + std::to_string(n), {{"m", m}, {"n", n}}, [&, m, n] {
        auto a = toda->flow_field(m);
        auto b = toda->flow_field(n);
        SuperPoly cu = toda->flow(m, b.u) - toda->flow(n, a.u);
        SuperPoly cv = toda->flow(m, b.v) - toda->flow(n, a.v);
        return both(zero(cu), zero(cv));
      });
  return r.take();
}

// ---------------------------------------------------------------- variational

VerifyReport suite_schouten(const VerifyOptions& o) {
  Runner r("schouten");
  const int order = o.order;
  const int trials = trials_or(o, 50);
  std::mt19937_64 rng(o.seed);
  auto deg = [&] { return std::uniform_int_distribution<int>(0, 2)(rng); };

  r.check("schouten/example", {}, [&] {
    Functional lhs = schouten_bracket(vector_field_e(), Functional(SuperPoly::v() * SuperPoly::theta_u()), order);
    return equal(lhs, Functional(SuperPoly::theta_u()));
  });
  r.check("schouten/el-of-derivative", {{"trials", trials}}, [&] {
    std::mt19937_64 local(o.seed + 1);
    for (int t = 0; t < trials; ++t) {
      SuperPoly p = random_density(local, t % 3);
      Functional f(derive_t(p));
      if (!f.is_zero()) return Residual(f.density().str());
    }
    return Residual();
  });
  for (int t = 0; t < trials; ++t) {
    int da = deg(), db = deg(), dc = deg();
    Functional f(random_density(rng, da)), g(random_density(rng, db)), h(random_density(rng, dc));
    Params params{{"trial", t}, {"deg_f", da}, {"deg_g", db}, {"deg_h", dc}};
    r.check("schouten/symmetry/trial=" + std::to_string(t), params, [&, f, g, da, db] {
      Functional fg = schouten_bracket(f, g, order);
      Functional gf = schouten_bracket(g, f, order);
      return (da * db) % 2 == 0 ? equal(fg, gf) : equal(fg, -gf);
    });
    r.check("schouten/jacobi/trial=" + std::to_string(t), params, [&, f, g, h, da, db] {
      Functional lhs = schouten_bracket(f, schouten_bracket(g, h, order), order);
      Functional first = schouten_bracket(schouten_bracket(f, g, order), h, order);
      Functional second = schouten_bracket(g, schouten_bracket(f, h, order), order);
      // with the (-1)^{|f||g|} symmetry the [[f,g],h] term carries (-1)^{|f|+1}
      if (da % 2 == 0) first = -first;
      return ((da + 1) * (db + 1)) % 2 == 0 ? equal(lhs, first + second) : equal(lhs, first - second);
    });
  }
  // delta_H is a differential and intertwines the Poisson bracket.
  const Functional hop = build_H(order);
  const int ham_trials = std::max(1, trials / 10);
  for (int t = 0; t < ham_trials; ++t) {
    Functional f(random_density(rng, 0)), g(random_density(rng, 0));
    r.check("schouten/dH^2/trial=" + std::to_string(t), {{"trial", t}}, [&, f] {
      return zero(schouten_bracket(hop, schouten_bracket(hop, f, order), order));
    });
    r.check("schouten/dH-bracket/trial=" + std::to_string(t), {{"trial", t}}, [&, f, g] {
      Functional lhs = schouten_bracket(schouten_bracket(hop, f, order), schouten_bracket(hop, g, order), order);
      Functional rhs = schouten_bracket(hop, poisson_bracket(f, g, hop, order), order);
      return equal(lhs, rhs);
    });
  }
  return r.take();
}

VerifyReport suite_bihamiltonian(const VerifyOptions& o) {
  Runner r("bihamiltonian");
  const int order = o.order;
  const Functional h = build_H(order), h0 = build_H0(order);
  const Functional e = vector_field_e(), big_e = vector_field_E();
  r.check("bihamiltonian/[H,H]", {}, [&] { return zero(schouten_bracket(h, h, order)); });
  r.check("bihamiltonian/[H,H0]", {}, [&] { return zero(schouten_bracket(h, h0, order)); });
  r.check("bihamiltonian/[H0,H0]", {}, [&] { return zero(schouten_bracket(h0, h0, order)); });
  r.check("bihamiltonian/[e,H]=H0", {}, [&] { return equal(schouten_bracket(e, h, order), h0); });
  r.check("bihamiltonian/[e,H0]", {}, [&] { return zero(schouten_bracket(e, h0, order)); });
  r.check("bihamiltonian/[E,H]", {}, [&] { return zero(schouten_bracket(big_e, h, order)); });
  r.check("bihamiltonian/[E,H0]=-H0", {}, [&] { return equal(schouten_bracket(big_e, h0, order), -h0); });
  r.check("bihamiltonian/dv-H", {}, [&] {
    return equal(h.dv(), mul_truncated(SuperPoly::theta_v(), nabla(SuperPoly::theta_u(), order), order));
  });
  return r.take();
}

VerifyReport suite_magri(const VerifyOptions& o) {
  Runner r("magri");
  const int order = o.order;
  auto toda = toda_lattice(order);
  const int max_n = o.max_n.value_or(4);
  const Functional h = build_H(order), h0 = build_H0(order);
  const Functional e = vector_field_e(), big_e = vector_field_E();
  r.check("magri/vf-h1", {{"n", 1}}, [&] {
    auto vf = hamiltonian_vf(h0, toda->hamiltonian(1), order);
    return both(equal(vf.u, nabla(SuperPoly::v(), order)),
                equal(vf.v, nabla(SuperPoly::exp_u() * Coeff::q(), order)));
  });
  r.check("magri/vf-h0", {{"n", 0}}, [&] {
    auto vf = hamiltonian_vf(h0, toda->hamiltonian(0), order);
    return both(zero(vf.u), zero(vf.v));
  });
  for (int n = 1; n <= max_n; ++n)
    r.check(name_n("magri/[H0,h_n]=[H,h_n-1]", n), {{"n", n}}, [&, n] {
      return equal(schouten_bracket(h0, toda->hamiltonian(n), order),
                   schouten_bracket(h, toda->hamiltonian(n - 1), order));
    });
  for (int k = 0; k <= max_n; ++k) {
    if (k > 0)
      r.check(name_n("magri/[e,h_k]", k), {{"k", k}}, [&, k] {
        return equal(schouten_bracket(e, toda->hamiltonian(k), order), toda->hamiltonian(k - 1) * Rational(k));
      });
    r.check(name_n("magri/[E,h_k]", k), {{"k", k}}, [&, k] {
      return equal(schouten_bracket(big_e, toda->hamiltonian(k), order), toda->hamiltonian(k) * Rational(k + 1));
    });
  }
  const int max_pb = std::min(max_n, 3);
  for (int m = 0; m <= max_pb; ++m)
    for (int n = m + 1; n <= max_pb; ++n)
      r.check("magri/{h_m,h_n}/m=" + std::to_string(m) + "/n=" + std::to_string(n), {{"m", m}, {"n", n}},
              [&, m, n] { return zero(poisson_bracket(toda->hamiltonian(m), toda->hamiltonian(n), h0, order)); });
  return r.take();
}

VerifyReport suite_gladder(const VerifyOptions& o) {
  Runner r("gladder");
  const int order = o.order;
  auto toda = toda_lattice(order);
  const int max_k = o.max_n.value_or(2) >= 2 ? 2 : 1;
  const int trials = trials_or(o, 20);
  const Functional h = build_H(order), h0 = build_H0(order);
  const Functional e = vector_field_e(), big_e = vector_field_E();
  std::vector<Functional> g{build_g0(order), build_g1(order)};
  auto hk = [&](int k) { return toda->hamiltonian(k); };

  r.check("gladder/g0-vf", {}, [&] {
    auto vf = hamiltonian_vf(h0, g[0], order);
    return both(equal(vf.u, SuperPoly::u(1)), equal(vf.v, SuperPoly::v(1)));
  });
  r.check("gladder/[H0,g1]=[H,g0-2h0]", {{"k", 1}}, [&] {
    return equal(schouten_bracket(h0, g[1], order), schouten_bracket(h, g[0] - hk(0) * Rational(2), order));
  });
  r.check("gladder/[e,g1]=g0", {{"k", 1}}, [&] { return equal(schouten_bracket(e, g[1], order), g[0]); });
  r.check("gladder/[e,g0]=int(u)", {{"k", 0}}, [&] { return equal(schouten_bracket(e, g[0], order), Functional(SuperPoly::u())); });
  r.check("gladder/solve_g(1)=g1", {{"k", 1}}, [&] {
    auto res = solve_g(1, g[0], hk(0), order);
    if (!res.nontrivial_kernel.empty()) return Residual("kernel: " + res.nontrivial_kernel.front().str());
    return equal(res.g, g[1]);
  });
  if (max_k >= 2) {
    r.check("gladder/solve_g(2)", {{"k", 2}}, [&] {
      auto res = solve_g(2, g[1], hk(1), order);
      if (!res.nontrivial_kernel.empty()) return Residual("kernel: " + res.nontrivial_kernel.front().str());
      g.push_back(res.g);
      return equal(schouten_bracket(h0, res.g, order), schouten_bracket(h, g[1] - hk(1), order));
    });
    r.check("gladder/[e,g2]=2g1", {{"k", 2}}, [&] {
      if (g.size() < 3) return Residual("g2 unavailable");
      return equal(schouten_bracket(e, g[2], order), g[1] * Rational(2));
    });
  }
  for (int k = 0; k < static_cast<int>(g.size()); ++k)
    r.check(name_n("gladder/[E,g_k]", k), {{"k", k}}, [&, k] {
      return equal(schouten_bracket(big_e, g[k], order), g[k] * Rational(k + 1) + hk(k) * Rational(2));
    });
  for (int k = 0; k < static_cast<int>(g.size()); ++k)
    for (int n = 0; n <= 3; ++n)
      r.check("gladder/{g_k,h_n}/k=" + std::to_string(k) + "/n=" + std::to_string(n), {{"k", k}, {"n", n}},
              [&, k, n] { return zero(poisson_bracket(g[k], hk(n), h0, order)); });

  // delta_0 g_0 = [H0, g0] is the translation field and is central.
  const Functional centre = schouten_bracket(h0, g[0], order);
  std::mt19937_64 rng(o.seed + 7);
  for (int t = 0; t < trials; ++t) {
    int d = t % 3;
    Functional x(random_density(rng, d));
    r.check("gladder/centre/trial=" + std::to_string(t), {{"trial", t}, {"deg", d}},
            [&, x] { return zero(schouten_bracket(centre, x, order)); });
  }
  return r.take();
}

VerifyReport suite_cohomology(const VerifyOptions& o) {
  Runner r("cohomology");
  const int order = o.order;
  const Functional h0 = build_H0(order);
  const SuperPoly u = SuperPoly::u(), v = SuperPoly::v(), tu = SuperPoly::theta_u(), tv = SuperPoly::theta_v();
  struct Rep {
    std::string name;
    SuperPoly density;
    int a, i;
  };
  const std::vector<Rep> reps{
      {"1", SuperPoly(1), -1, 0},        {"u", u, -1, 0},     {"v", v, 0, 0},
      {"tv", tv, -1, 1},                 {"tu", tu, 0, 1},    {"u*tu-v*tv", u * tu - v * tv, 0, 1},
      {"tu*tv", tu * tv, 0, 2},
  };
  for (const auto& rep : reps) {
    Params params{{"a", rep.a}, {"i", rep.i}};
    Functional f(rep.density);
    r.check("cohomology/closed/" + rep.name, params, [&, f] { return zero(schouten_bracket(h0, f, order)); });
    r.check("cohomology/weight/" + rep.name, params, [&, f, rep] {
      if (in_weight_space(f, Rational(rep.a + 1 - rep.i), order)) return Residual();
      return Residual("not in the generalized eigenspace for a=" + std::to_string(rep.a));
    });
    r.check("cohomology/nonzero/" + rep.name, params, [f] {
      return f.is_zero() ? Residual("representative is zero") : Residual();
    });
  }
  return r.take();
}

using SuiteFn = VerifyReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"gd", suite_gd},
      {"kdv", suite_kdv},
      {"structure", suite_structure},
      {"ddd", suite_ddd},
      {"kupershmidt", suite_kupershmidt},
      {"legendre", suite_legendre},
      {"commute", suite_commute},
      {"schouten", suite_schouten},
      {"bihamiltonian", suite_bihamiltonian},
      {"magri", suite_magri},
      {"gladder", suite_gladder},
      {"cohomology", suite_cohomology},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
  TruncOrder{opts.order};  // validates
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace integrable
