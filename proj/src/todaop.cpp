#include "integrable/todaop.hpp"

#include "integrable/shift.hpp"

namespace integrable {

LambdaOp::LambdaOp(Coeffs coeffs, int order) : order_(order) {
  for (auto& [k, a] : coeffs) add(k, a);
}

LambdaOp LambdaOp::lambda(int power, int order) {
  LambdaOp r(order);
  r.add(power, SuperPoly(1));
  return r;
}

LambdaOp LambdaOp::scalar(const SuperPoly& a, int order) {
  LambdaOp r(order);
  r.add(0, a);
  return r;
}

LambdaOp LambdaOp::lax(int order) {
  LambdaOp r(order);
  r.add(1, SuperPoly(1));
  r.add(0, SuperPoly::v());
  r.add(-1, SuperPoly::exp_u() * Coeff::q());
  return r;
}

SuperPoly LambdaOp::at(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? SuperPoly() : it->second;
}

void LambdaOp::add(int k, const SuperPoly& a) {
  SuperPoly t = truncate_eps(a, order_);
  if (t.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, t);
  if (!inserted) {
    it->second += t;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LambdaOp& LambdaOp::operator+=(const LambdaOp& o) {
  order_ = std::min(order_, o.order_);
  for (auto& [k, a] : coeffs_) a = truncate_eps(a, order_);
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [k, a] : o.coeffs_) add(k, a);
  return *this;
}

LambdaOp& LambdaOp::operator-=(const LambdaOp& o) {
  LambdaOp neg(o.order_);
  for (const auto& [k, a] : o.coeffs_) neg.add(k, -a);
  return *this += neg;
}

LambdaOp operator*(const LambdaOp& a, const LambdaOp& b) { return lambda_mul(a, b); }

std::string LambdaOp::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ") * L^" + std::to_string(it->first);
  }
  return out;
}

LambdaOp lambda_mul(const LambdaOp& a, const LambdaOp& b) {
  const int order = std::min(a.order(), b.order());
  LambdaOp out(order);
  for (const auto& [i, ai] : a.coeffs())
    for (const auto& [j, bj] : b.coeffs()) {
      SuperPoly left = shift(make_rational(-j, 2), ai, order);
      SuperPoly right = shift(make_rational(i, 2), bj, order);
      out.add(i + j, mul_truncated(left, right, order));
    }
  return out;
}

LambdaOp lambda_commutator(const LambdaOp& a, const LambdaOp& b) {
  int da = 0, db = 0;
  for (const auto& [k, c] : a.coeffs())
    if (auto d = c.odd_degree()) da = *d;
  for (const auto& [k, c] : b.coeffs())
    if (auto d = c.odd_degree()) db = *d;
  LambdaOp ba = lambda_mul(b, a);
  if ((da * db) % 2 != 0) return lambda_mul(a, b) + ba;
  return lambda_mul(a, b) - ba;
}

Functional residue(const LambdaOp& a) { return Functional(a.at(0)); }

TodaLattice::TodaLattice(int order) : order_(TruncOrder(order).value()) {
  powers_.push_back(std::make_unique<LambdaOp>(LambdaOp::scalar(SuperPoly(1), order_)));
}

const LambdaOp& TodaLattice::lax_power(int n) const {
  if (n < 0) throw std::invalid_argument("lax_power needs n >= 0");
  std::lock_guard lock(mu_);
  const LambdaOp l = LambdaOp::lax(order_);
  while (static_cast<int>(powers_.size()) <= n)
    powers_.push_back(std::make_unique<LambdaOp>(lambda_mul(*powers_.back(), l)));
  return *powers_[n];
}

SuperPoly TodaLattice::p(int k, int n) const { return lax_power(n).at(k); }

Functional TodaLattice::hamiltonian(int n) const {
  if (n < 0) throw std::invalid_argument("h_n needs n >= 0");
  return Functional(p(0, n + 1) * make_rational(1, n + 1));
}

Characteristics TodaLattice::flow_field(int n) const {
  return {nabla(p(0, n), order_), nabla(p(-1, n), order_)};
}

SuperPoly TodaLattice::flow(int n, const SuperPoly& p) const {
  auto vf = flow_field(n);
  return apply_evolutionary(vf.u, vf.v, p, order_);
}

KupershmidtResidual kupershmidt_residual(const TodaLattice& toda, int n) {
  if (n < 1) throw std::invalid_argument("the recursion starts at n = 1");
  const int order = toda.order();
  const Functional hn = toda.hamiltonian(n);
  const Functional hp = toda.hamiltonian(n - 1);
  const SuperPoly v = SuperPoly::v();
  KupershmidtResidual r;
  r.first = nabla(hn.dv(), order) - nabla(mul_truncated(v, hp.dv(), order), order) -
            central_difference(hp.du(), order);
  r.second = nabla(hn.du(), order) - c_u(hp.dv(), order) - mul_truncated(v, nabla(hp.du(), order), order);
  return r;
}

SuperPoly ddd_residual(const TodaLattice& toda, int n) {
  const int order = toda.order();
  return toda.p(0, n) - mul_truncated(SuperPoly::v(), toda.p(0, n - 1), order) - Delta(toda.p(-1, n - 1), order);
}

SuperPoly dispersionless_p0(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const SuperPoly v = SuperPoly::v();
  const SuperPoly w = v * v - SuperPoly::exp_u() * Coeff(Rational(4), 0, 1);
  SuperPoly prev(1), cur = v;
  if (n == 0) return prev;
  for (int m = 1; m < n; ++m) {
    SuperPoly next = (v * cur * Rational(2 * m + 1) - w * prev * Rational(m)) * make_rational(1, m + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SuperPoly apply_e(const SuperPoly& p) { return apply_evolutionary(SuperPoly(), SuperPoly(1), p); }

SuperPoly apply_E(const SuperPoly& p) { return apply_evolutionary(SuperPoly(2), SuperPoly::v(), p); }

}  // namespace integrable
