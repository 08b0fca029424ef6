#include "integrable/variational.hpp"

#include "integrable/antiderivative.hpp"
#include "integrable/linsolve.hpp"
#include "integrable/shift.hpp"

#include <mutex>
#include <tuple>

namespace integrable {

SuperPoly variational_derivative(Kind k, const SuperPoly& p) {
  int top = p.max_jet(k);
  if (k == Kind::U && p.max_jet(Kind::ExpU) >= 0) top = std::max(top, 0);
  if (top < 0) return {};
  // Horner: P_0 - d(P_1 - d(P_2 - ...))
  SuperPoly acc;
  for (int n = top; n >= 0; --n) {
    Generator g{k, static_cast<std::uint32_t>(n)};
    acc = partial_wrt(g, p) - derive_t(acc);
  }
  return acc;
}

VariationalDerivatives euler_lagrange(const SuperPoly& p) {
  return {variational_derivative(Kind::U, p), variational_derivative(Kind::V, p),
          variational_derivative(Kind::ThetaU, p), variational_derivative(Kind::ThetaV, p)};
}

struct Functional::State {
  explicit State(SuperPoly p) : rep(std::move(p)) {}
  SuperPoly rep;
  mutable std::once_flag once;
  mutable VariationalDerivatives el;
};

Functional::Functional() : s_(std::make_shared<State>(SuperPoly())) {}
Functional::Functional(SuperPoly density) : s_(std::make_shared<State>(std::move(density))) {}

const SuperPoly& Functional::density() const { return s_->rep; }

const VariationalDerivatives& Functional::derivatives() const {
  std::call_once(s_->once, [this] { s_->el = euler_lagrange(s_->rep); });
  return s_->el;
}

int Functional::degree() const {
  if (s_->rep.is_zero()) return 0;
  auto d = s_->rep.odd_degree();
  if (!d) throw std::invalid_argument("functional of mixed odd degree");
  return *d;
}

bool Functional::is_zero() const {
  const auto& el = derivatives();
  return el.du.is_zero() && el.dv.is_zero() && el.dtu.is_zero() && el.dtv.is_zero() &&
         constant_term().is_zero();
}

Functional Functional::operator+(const Functional& o) const { return Functional(density() + o.density()); }
Functional Functional::operator-(const Functional& o) const { return Functional(density() - o.density()); }
Functional Functional::operator-() const { return Functional(-density()); }
Functional Functional::operator*(const Coeff& c) const { return Functional(density() * c); }
Functional Functional::operator*(const Rational& r) const { return Functional(density() * r); }
Functional Functional::truncated(int order) const { return Functional(truncate_eps(density(), order)); }

std::string Functional::str() const { return "int(" + density().str() + ")"; }

bool functional_equal(const Functional& f, const Functional& g) { return (f - g).is_zero(); }

bool functional_equal(const Functional& f, const Functional& g, int order) {
  return functional_equal(f.truncated(order), g.truncated(order));
}

bool functional_equal_by_antiderivative(const Functional& f, const Functional& g) {
  SuperPoly diff = f.density() - g.density();
  if (!diff.constant_term().is_zero()) return false;
  return antiderivative(diff).has_value();
}

Functional schouten_bracket(const Functional& f, const Functional& g, int order) {
  const auto& a = f.derivatives();
  const auto& b = g.derivatives();
  SuperPoly first = mul_truncated(a.dtu, b.du, order) + mul_truncated(a.dtv, b.dv, order);
  SuperPoly second = mul_truncated(a.du, b.dtu, order) + mul_truncated(a.dv, b.dtv, order);
  if (f.degree() % 2 != 0) second = -second;
  return Functional(first + second);
}

Functional build_H(int order) {
  const SuperPoly tu = SuperPoly::theta_u();
  const SuperPoly tv = SuperPoly::theta_v();
  const Rational half(1, 2);
  SuperPoly first = eps_inverse_of([&](int o) { return mul_truncated(tu, shift(Rational(1), tu, o), o); }, order);
  SuperPoly second = mul_truncated(SuperPoly::v() * tv, nabla(tu, order), order);
  SuperPoly third = eps_inverse_of(
      [&](int o) {
        SuperPoly pair = mul_truncated(shift(-half, tv, o), shift(half, tv, o), o);
        return mul_truncated(SuperPoly::exp_u(), pair, o) * Coeff::q();
      },
      order);
  return Functional(first + second + third);
}

Functional build_H0(int order) { return Functional(mul_truncated(SuperPoly::theta_v(), nabla(SuperPoly::theta_u(), order), order)); }

Functional vector_field_e() { return Functional(SuperPoly::theta_v()); }

Functional vector_field_E() {
  return Functional(SuperPoly::v() * SuperPoly::theta_v() + SuperPoly::theta_u() * Rational(2));
}

Characteristics characteristics(const Functional& x) { return {x.dtu(), x.dtv()}; }

Characteristics hamiltonian_vf(const Functional& h, const Functional& f, int order) {
  // With left Grassmann derivatives [h, f] = int(-a theta_u - b theta_v) for the field u -> a, v -> b.
  auto c = characteristics(schouten_bracket(h, f, order));
  return {-c.u, -c.v};
}

Functional poisson_bracket(const Functional& f, const Functional& g, const Functional& h, int order) {
  return schouten_bracket(schouten_bracket(h, f, order), g, order);
}

Functional build_g0(int order) { return Functional(mul_truncated(SuperPoly::u(), pee(SuperPoly::v(), order), order)); }

Functional build_g1(int order) {
  const SuperPoly u = SuperPoly::u();
  const SuperPoly v = SuperPoly::v();
  const SuperPoly qe = SuperPoly::exp_u() * Coeff::q();
  const Rational half(1, 2);
  SuperPoly inner = v * v + Delta(qe, order);
  SuperPoly first = mul_truncated(u, pee(inner, order), order) * half;
  SuperPoly dpv = Delta(pee(v, order), order) - v * Rational(2);
  SuperPoly second = mul_truncated(v, dpv, order) * half;
  return Functional(first + second - qe * Rational(2));
}

int diagonal_weight(const Monomial& m) {
  int w = 2 * static_cast<int>(m.exp_u());
  w += static_cast<int>(m.degree(Kind::V));
  w -= static_cast<int>(m.degree(Kind::ThetaV));
  return w;
}

bool in_weight_space(const Functional& f, const Rational& lambda, int order, int max_power) {
  const Functional e = vector_field_E();
  Functional cur = f.truncated(order);
  for (int n = 0; n < max_power; ++n) {
    cur = schouten_bracket(e, cur, order) - cur * lambda;
    if (cur.is_zero()) return true;
  }
  return false;
}

SolveGResult solve_g(int k, const Functional& prev, const Functional& h_prev, int order, const SolveGOptions& opts) {
  if (k < 1) throw std::invalid_argument("solve_g needs k >= 1");
  const int max_d = opts.max_diff_order < 0 ? order : std::min(opts.max_diff_order, order);
  const int max_u = opts.max_u_degree < 0 ? k + 1 : opts.max_u_degree;
  const Functional h = build_H(order);
  const Functional h0 = build_H0(order);

  auto target = characteristics(schouten_bracket(h, prev - h_prev * make_rational(2, k), order));

  // Rows are (component, monomial, eps, q).
  using Row = std::tuple<int, Monomial, CoeffKey>;
  RowIndex<Row> rows;
  auto to_vector = [&](const Characteristics& c, bool insert) -> std::optional<SparseVector> {
    SparseVector out;
    int comp = 0;
    for (const SuperPoly* part : {&c.u, &c.v}) {
      for (const auto& [m, co] : part->terms())
        for (const auto& [key, r] : co.terms()) {
          Row row{comp, m, key};
          if (insert) {
            out[rows.id(row)] = r;
          } else {
            auto id = rows.find(row);
            if (!id) return std::nullopt;
            out[*id] = r;
          }
        }
      ++comp;
    }
    return out;
  };

  std::vector<SuperPoly> basis;
  ColumnEchelon echelon;
  const int weight = k + 1;
  for (int e = 0; 2 * e <= weight; ++e) {
    const int nv = weight - 2 * e;
    for (int nu = 0; nu <= max_u; ++nu)
      for (int d = 0; d <= max_d; ++d)
        for (auto& m : enumerate_monomials(nu, nv, 0, 0, e, d)) {
          SuperPoly b(m, Coeff(Rational(1), d, e));
          auto vf = characteristics(schouten_bracket(h0, Functional(b), order));
          echelon.add_column(*to_vector(vf, true));
          basis.push_back(std::move(b));
        }
  }

  SolveGResult result;
  result.basis_size = basis.size();
  result.equations = rows.size();
  result.rank = echelon.rank();
  auto rhs = to_vector(target, false);
  std::optional<SparseVector> x;
  if (rhs) x = echelon.solve(*rhs);
  if (!x)
    throw NoSolutionInBasis("no g_" + std::to_string(k) + " in a basis of " + std::to_string(basis.size()) +
                            " densities (rank " + std::to_string(echelon.rank()) + ")");
  SuperPoly g;
  for (const auto& [j, r] : *x) g += basis[j] * r;
  result.g = Functional(g);
  for (const auto& kv : echelon.kernel()) {
    SuperPoly z;
    for (const auto& [j, r] : kv) z += basis[j] * r;
    Functional zf(z);
    if (!zf.is_zero()) result.nontrivial_kernel.push_back(zf);
  }
  return result;
}

}  // namespace integrable
