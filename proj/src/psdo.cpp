#include "integrable/psdo.hpp"

#include "integrable/antiderivative.hpp"
#include "integrable/shift.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <vector>

namespace integrable {

PsdOp::PsdOp(Coeffs coeffs, std::optional<int> floor) : floor_(floor) {
  for (auto& [i, a] : coeffs) add(i, a);
}

PsdOp PsdOp::d(int power) {
  PsdOp r;
  r.add(power, SuperPoly(1));
  return r;
}

PsdOp PsdOp::lax() {
  PsdOp r;
  r.add(2, SuperPoly(Coeff(make_rational(1, 2), 2)));
  r.add(0, SuperPoly::u());
  return r;
}

PsdOp PsdOp::scalar(const SuperPoly& a) {
  PsdOp r;
  r.add(0, a);
  return r;
}

SuperPoly PsdOp::at(int i) const {
  if (floor_ && i < *floor_)
    throw FloorTooShallow("coefficient of d^" + std::to_string(i) + " lies below the floor " +
                          std::to_string(*floor_));
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? SuperPoly() : it->second;
}

void PsdOp::add(int i, const SuperPoly& a) {
  if (floor_ && i < *floor_) return;
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(i, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

int PsdOp::top() const { return coeffs_.empty() ? INT_MIN : coeffs_.rbegin()->first; }
int PsdOp::bottom() const { return coeffs_.empty() ? INT_MAX : coeffs_.begin()->first; }

PsdOp PsdOp::truncated(int m) const {
  int f = floor_ ? std::max(*floor_, m) : m;
  PsdOp r(f);
  for (const auto& [i, a] : coeffs_) r.add(i, a);
  return r;
}

namespace {

// The sum is only known where both summands are.
std::optional<int> combine_floor(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

PsdOp& PsdOp::operator+=(const PsdOp& o) {
  floor_ = combine_floor(floor_, o.floor_);
  if (floor_) coeffs_.erase(coeffs_.begin(), coeffs_.lower_bound(*floor_));
  for (const auto& [i, a] : o.coeffs_) add(i, a);
  return *this;
}

PsdOp& PsdOp::operator-=(const PsdOp& o) {
  PsdOp neg(o.floor_);
  for (const auto& [i, a] : o.coeffs_) neg.add(i, -a);
  return *this += neg;
}

PsdOp operator*(const PsdOp& a, const PsdOp& b) { return psdo_mul(a, b); }

std::string PsdOp::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ") * d^" + std::to_string(it->first);
  }
  return out;
}

Rational binomial(long n, unsigned long m) {
  Rational r(1);
  for (unsigned long t = 0; t < m; ++t) {
    r *= Rational(n - static_cast<long>(t));
    r /= Rational(static_cast<long>(t + 1));
  }
  return r;
}

PsdOp psdo_mul(const PsdOp& a, const PsdOp& b) {
  std::optional<int> floor;
  if (a.floor() && !b.coeffs().empty()) floor = *a.floor() + b.top();
  if (b.floor() && !a.coeffs().empty()) {
    int f = *b.floor() + a.top();
    floor = floor ? std::max(*floor, f) : f;
  }
  if (!floor && a.bottom() < 0 && !b.coeffs().empty())
    throw std::invalid_argument("product of exact operators with negative orders needs a floor");
  if (a.coeffs().empty() || b.coeffs().empty()) {
    // zero product; keep whatever floor information is given
    std::optional<int> f = floor;
    if (!f) f = combine_floor(a.floor(), b.floor());
    return PsdOp(f);
  }

  PsdOp out(floor);
  for (const auto& [j, bj] : b.coeffs()) {
    std::vector<SuperPoly> derivs{bj};
    for (const auto& [i, ai] : a.coeffs()) {
      for (unsigned long m = 0;; ++m) {
        if (i >= 0 && m > static_cast<unsigned long>(i)) break;
        int order = i + j - static_cast<int>(m);
        if (floor && order < *floor) break;
        while (derivs.size() <= m) derivs.push_back(derive_t(derivs.back()));
        Rational c = binomial(i, m);
        out.add(order, (ai * derivs[m]) * c);
      }
    }
  }
  return out;
}

PsdOp proj_plus(const PsdOp& a) {
  PsdOp r;
  for (const auto& [i, c] : a.coeffs())
    if (i >= 0) r.add(i, c);
  return r;
}

PsdOp proj_minus(const PsdOp& a) {
  PsdOp r(a.floor());
  for (const auto& [i, c] : a.coeffs())
    if (i < 0) r.add(i, c);
  return r;
}

PsdOp commutator(const PsdOp& a, const PsdOp& b) { return psdo_mul(a, b) - psdo_mul(b, a); }

namespace {

// Coefficient of d^k in a*b, summing every contribution that is present.
SuperPoly product_coefficient(const PsdOp& a, const PsdOp& b, int k) {
  SuperPoly out;
  for (const auto& [i, ai] : a.coeffs())
    for (const auto& [j, bj] : b.coeffs()) {
      int m = i + j - k;
      if (m < 0) continue;
      if (i >= 0 && m > i) continue;
      out += (ai * derive_t(bj, static_cast<unsigned>(m))) * binomial(i, static_cast<unsigned long>(m));
    }
  return out;
}

std::mutex d_mu;
std::map<int, PsdOp> d_cache;

}  // namespace

PsdOp sqrt_D(int m) {
  if (m > -1) throw std::invalid_argument("sqrt_D needs a floor m <= -1");
  {
    std::lock_guard lock(d_mu);
    auto it = d_cache.find(m);
    if (it != d_cache.end()) return it->second;
  }
  // target d^2 + 2 eps^-2 u
  PsdOp target;
  target.add(2, SuperPoly(1));
  target.add(0, SuperPoly(Coeff(Rational(2), -2)) * SuperPoly::u());

  PsdOp cur = PsdOp::d();
  for (int i = 0; i >= m; --i) {
    SuperPoly rest = target.at(i + 1) - product_coefficient(cur, cur, i + 1);
    cur.add(i, rest * make_rational(1, 2));
  }
  PsdOp result = cur.truncated(m);
  std::lock_guard lock(d_mu);
  d_cache.try_emplace(m, result);
  return result;
}

PsdOp lax_power_times_d(int k, int m) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  PsdOp x = sqrt_D(m);
  const PsdOp l = PsdOp::lax();
  for (int t = 0; t < k; ++t) x = psdo_mul(l, x);
  return x;
}

namespace {

std::mutex gd_mu;
std::map<int, SuperPoly> gd_residue_cache;
std::map<int, SuperPoly> gd_recursion_cache;

SuperPoly residue_at(int k, int m) {
  PsdOp x = lax_power_times_d(k, m);
  return x.at(-1) * Coeff::eps(2);
}

}  // namespace

SuperPoly gelfand_dickii_residue(int k, std::optional<int> m, bool audit) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int floor = m.value_or(gd_floor(k));
  if (floor + 2 * k > -1)
    throw FloorTooShallow("f_" + std::to_string(k) + " needs a floor <= " + std::to_string(-1 - 2 * k) +
                          ", got " + std::to_string(floor));
  const bool cacheable = !m && audit;
  if (cacheable) {
    std::lock_guard lock(gd_mu);
    auto it = gd_residue_cache.find(k);
    if (it != gd_residue_cache.end()) return it->second;
  }
  SuperPoly f = residue_at(k, floor);
  if (audit && !(residue_at(k, floor - 2) == f))
    throw FloorTooShallow("f_" + std::to_string(k) + " changes when the floor is lowered below " +
                          std::to_string(floor));
  if (cacheable) {
    std::lock_guard lock(gd_mu);
    gd_residue_cache.try_emplace(k, f);
  }
  return f;
}

SuperPoly kdv_recursion_operator(const SuperPoly& f) {
  const SuperPoly u = SuperPoly::u();
  SuperPoly df = derive_t(f);
  return derive_t(df, 2) * Coeff(make_rational(1, 8), 2) + u * df + (SuperPoly::u(1) * f) * make_rational(1, 2);
}

SuperPoly gelfand_dickii_recursion(int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k == 0) return SuperPoly::u();
  {
    std::lock_guard lock(gd_mu);
    auto it = gd_recursion_cache.find(k);
    if (it != gd_recursion_cache.end()) return it->second;
  }
  SuperPoly prev = gelfand_dickii_recursion(k - 1);
  auto f = antiderivative(kdv_recursion_operator(prev));
  if (!f) throw AntiderivativeNotFound("K f_" + std::to_string(k - 1) + " is not a total derivative");
  std::lock_guard lock(gd_mu);
  gd_recursion_cache.try_emplace(k, *f);
  return *f;
}

SuperPoly kdv_flow(int k, const SuperPoly& p) {
  SuperPoly fk = gelfand_dickii_residue(k);
  return apply_evolutionary(derive_t(fk), SuperPoly(), p);
}

SuperPoly kdv_L_minus1(const SuperPoly& p) { return -partial_wrt(Generator::u(), p); }

SuperPoly kdv_L0(const SuperPoly& p) {
  SuperPoly out;
  for (const auto& [m, c] : p.terms()) {
    Rational w(0);
    for (const auto& [g, e] : m.even())
      if (g.kind == Kind::U) w += make_rational(static_cast<long>(g.jet) + 2, 2) * Rational(e);
    if (w != 0) out.add_term(m, c * Rational(-w));
  }
  return out;
}

}  // namespace integrable
