#include "integrable/superring.hpp"

#include "integrable/text.hpp"

#include <algorithm>
#include <cctype>

namespace integrable {

// ---------------------------------------------------------------- Generator

std::string Generator::name() const {
  switch (kind) {
    case Kind::U: return "u_" + std::to_string(jet);
    case Kind::V: return "v_" + std::to_string(jet);
    case Kind::ThetaU: return "tu_" + std::to_string(jet);
    case Kind::ThetaV: return "tv_" + std::to_string(jet);
    case Kind::ExpU: return "X";
  }
  return "?";
}

Generator Generator::parse(std::string_view s) {
  if (s == "X") return exp_u();
  auto us = s.find('_');
  if (us == std::string_view::npos || us + 1 >= s.size())
    throw ParseError("unknown generator '" + std::string(s) + "'");
  std::string_view head = s.substr(0, us);
  std::string_view digits = s.substr(us + 1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad jet order in '" + std::string(s) + "'");
  auto n = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
  if (head == "u") return u(n);
  if (head == "v") return v(n);
  if (head == "tu") return theta_u(n);
  if (head == "tv") return theta_v(n);
  throw ParseError("unknown generator '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Generator g, std::uint32_t power) {
  Monomial m;
  if (power == 0) return m;
  if (g.kind == Kind::ExpU) {
    m.exp_u_ = power;
  } else if (g.is_odd()) {
    if (power > 1) throw std::invalid_argument("odd generator squared");
    m.odd_.push_back(g);
  } else {
    m.even_.emplace_back(g, power);
  }
  return m;
}

std::uint32_t Monomial::exponent(Generator g) const {
  if (g.kind == Kind::ExpU) return exp_u_;
  if (g.is_odd()) return std::binary_search(odd_.begin(), odd_.end(), g) ? 1 : 0;
  auto it = std::lower_bound(even_.begin(), even_.end(), g,
                             [](const EvenFactor& f, Generator x) { return f.first < x; });
  return (it != even_.end() && it->first == g) ? it->second : 0;
}

std::uint32_t Monomial::total_order() const {
  std::uint32_t t = 0;
  for (const auto& [g, e] : even_) t += g.jet * e;
  for (const auto& g : odd_) t += g.jet;
  return t;
}

std::uint32_t Monomial::degree(Kind k) const {
  if (k == Kind::ExpU) return exp_u_;
  std::uint32_t d = 0;
  for (const auto& [g, e] : even_)
    if (g.kind == k) d += e;
  for (const auto& g : odd_)
    if (g.kind == k) ++d;
  return d;
}

int Monomial::remove(Generator g) {
  if (g.kind == Kind::ExpU) {
    --exp_u_;
    return 1;
  }
  if (g.is_odd()) {
    auto it = std::lower_bound(odd_.begin(), odd_.end(), g);
    auto pos = it - odd_.begin();
    odd_.erase(it);
    return (pos % 2 == 0) ? 1 : -1;
  }
  auto it = std::lower_bound(even_.begin(), even_.end(), g,
                             [](const EvenFactor& f, Generator x) { return f.first < x; });
  if (--it->second == 0) even_.erase(it);
  return 1;
}

int Monomial::insert_left(Generator g) {
  if (g.kind == Kind::ExpU) {
    ++exp_u_;
    return 1;
  }
  if (g.is_odd()) {
    auto it = std::lower_bound(odd_.begin(), odd_.end(), g);
    if (it != odd_.end() && *it == g) return 0;
    auto pos = it - odd_.begin();
    odd_.insert(it, g);
    return (pos % 2 == 0) ? 1 : -1;
  }
  auto it = std::lower_bound(even_.begin(), even_.end(), g,
                             [](const EvenFactor& f, Generator x) { return f.first < x; });
  if (it != even_.end() && it->first == g) ++it->second;
  else even_.insert(it, {g, 1});
  return 1;
}

int multiply(const Monomial& a, const Monomial& b, Monomial& out) {
  out.even_.clear();
  out.odd_.clear();
  out.exp_u_ = a.exp_u_ + b.exp_u_;

  out.even_.reserve(a.even_.size() + b.even_.size());
  auto ia = a.even_.begin(), ib = b.even_.begin();
  while (ia != a.even_.end() && ib != b.even_.end()) {
    if (ia->first < ib->first) out.even_.push_back(*ia++);
    else if (ib->first < ia->first) out.even_.push_back(*ib++);
    else {
      out.even_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.even_.insert(out.even_.end(), ia, a.even_.end());
  out.even_.insert(out.even_.end(), ib, b.even_.end());

  if (b.odd_.empty()) {
    out.odd_ = a.odd_;
    return 1;
  }
  if (a.odd_.empty()) {
    out.odd_ = b.odd_;
    return 1;
  }
  out.odd_.reserve(a.odd_.size() + b.odd_.size());
  std::size_t inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.odd_.size() && j < b.odd_.size()) {
    if (a.odd_[i] < b.odd_[j]) {
      out.odd_.push_back(a.odd_[i++]);
    } else if (b.odd_[j] < a.odd_[i]) {
      inversions += a.odd_.size() - i;
      out.odd_.push_back(b.odd_[j++]);
    } else {
      return 0;
    }
  }
  out.odd_.insert(out.odd_.end(), a.odd_.begin() + static_cast<std::ptrdiff_t>(i), a.odd_.end());
  out.odd_.insert(out.odd_.end(), b.odd_.begin() + static_cast<std::ptrdiff_t>(j), b.odd_.end());
  return (inversions % 2 == 0) ? 1 : -1;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.odd_.size() <=> b.odd_.size(); c != 0) return c;
  if (auto c = a.exp_u_ <=> b.exp_u_; c != 0) return c;
  if (auto c = a.even_ <=> b.even_; c != 0) return c;
  return a.odd_ <=> b.odd_;
}

std::string Monomial::str() const {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += '*';
  };
  if (exp_u_ > 0) {
    sep();
    text::append_power(out, "X", static_cast<int>(exp_u_));
  }
  for (const auto& [g, e] : even_) {
    sep();
    text::append_power(out, g.name(), static_cast<int>(e));
  }
  for (const auto& g : odd_) {
    sep();
    out += g.name();
  }
  return out;
}

// ---------------------------------------------------------------- SuperPoly

SuperPoly::SuperPoly(const Coeff& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

SuperPoly::SuperPoly(const Monomial& m, const Coeff& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

SuperPoly SuperPoly::gen(Generator g, std::uint32_t power) {
  return SuperPoly(Monomial::of(g, power), Coeff(1));
}

std::size_t SuperPoly::summands() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n += c.size();
  return n;
}

void SuperPoly::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SuperPoly::add_term(Monomial&& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Coeff& c) {
  if (c.is_one()) return *this;
  Terms out;
  for (auto& [m, x] : terms_) {
    Coeff y = x * c;
    if (!y.is_zero()) out.emplace_hint(out.end(), m, std::move(y));
  }
  terms_ = std::move(out);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= r;
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) { return mul_truncated(a, b, INT32_MAX); }

SuperPoly SuperPoly::operator-() const {
  SuperPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Coeff SuperPoly::constant_term() const { return coefficient(Monomial{}); }

Coeff SuperPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff() : it->second;
}

int SuperPoly::min_eps() const {
  int m = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    int e = c.min_eps();
    if (first || e < m) m = e;
    first = false;
  }
  return m;
}

int SuperPoly::max_eps() const {
  int m = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    int e = c.max_eps();
    if (first || e > m) m = e;
    first = false;
  }
  return m;
}

std::optional<int> SuperPoly::odd_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.odd_degree();
  if (terms_.rbegin()->first.odd_degree() != d) return std::nullopt;
  return d;
}

bool SuperPoly::is_even() const {
  for (const auto& [m, c] : terms_)
    if (m.odd_degree() % 2 != 0) return false;
  return true;
}

int SuperPoly::max_jet(Kind k) const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    if (k == Kind::ExpU) {
      if (m.exp_u() > 0) best = 0;
      continue;
    }
    for (const auto& [g, e] : m.even())
      if (g.kind == k) best = std::max(best, static_cast<int>(g.jet));
    for (const auto& g : m.odd())
      if (g.kind == k) best = std::max(best, static_cast<int>(g.jet));
  }
  return best;
}

std::string SuperPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string mono = it->first.str();
    for (const auto& [k, r] : it->second.terms()) {
      if (first) {
        if (r < 0) out += "-";
      } else {
        out += r < 0 ? " - " : " + ";
      }
      first = false;
      Rational mag = abs(r);
      std::string body;
      bool have_factor = k.eps != 0 || k.q != 0 || !mono.empty();
      if (mag != 1 || !have_factor) body += to_string(mag);
      auto add = [&](std::string_view part) {
        if (!body.empty()) body += '*';
        body += part;
      };
      if (k.eps != 0) {
        std::string s;
        text::append_power(s, "eps", k.eps);
        add(s);
      }
      if (k.q != 0) {
        std::string s;
        text::append_power(s, "q", k.q);
        add(s);
      }
      if (!mono.empty()) add(mono);
      out += body;
    }
  }
  return out;
}

SuperPoly SuperPoly::parse(std::string_view input) {
  SuperPoly out;
  for (const auto& term : text::parse_sum(input)) {
    SuperPoly t{Coeff(term.scalar)};
    for (const auto& f : term.factors) {
      if (f.symbol == "eps") {
        t *= Coeff::eps(f.exponent);
      } else if (f.symbol == "q") {
        if (f.exponent < 0) throw ParseError("negative q exponent");
        t *= Coeff::q(f.exponent);
      } else {
        Generator g = Generator::parse(f.symbol);
        if (f.exponent < 0) throw ParseError("negative exponent on " + f.symbol);
        if (g.is_odd() && f.exponent > 1) {
          t = SuperPoly();
        } else {
          t = t * gen(g, static_cast<std::uint32_t>(f.exponent));
        }
      }
    }
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------- operations

SuperPoly super_mul(const SuperPoly& a, const SuperPoly& b) { return a * b; }

SuperPoly mul_truncated(const SuperPoly& a, const SuperPoly& b, int order) {
  SuperPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  Monomial prod;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int sign = multiply(ma, mb, prod);
      if (sign == 0) continue;
      Coeff c;
      for (const auto& [ka, ra] : ca.terms())
        for (const auto& [kb, rb] : cb.terms()) {
          int e = ka.eps + kb.eps;
          if (e > order) continue;
          c.add_term(e, ka.q + kb.q, sign > 0 ? Rational(ra * rb) : Rational(-(ra * rb)));
        }
      out.add_term(prod, c);
    }
  }
  return out;
}

SuperPoly derive_t(const SuperPoly& p) {
  SuperPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [g, e] : m.even()) {
      Monomial n = m;
      n.remove(g);
      n.insert_left(g.derived());
      out.add_term(std::move(n), c * Rational(e));
    }
    if (m.exp_u() > 0) {
      Monomial n = m;
      n.insert_left(Generator::u(1));
      out.add_term(std::move(n), c * Rational(m.exp_u()));
    }
    // d is even and raises a jet by one without crossing another odd factor,
    // so the position (and the sign) is unchanged.
    for (std::size_t i = 0; i < m.odd().size(); ++i) {
      Generator g = m.odd()[i];
      Generator h = g.derived();
      if (m.exponent(h) != 0) continue;
      Monomial n = m;
      int s1 = n.remove(g);
      int s2 = n.insert_left(h);
      out.add_term(std::move(n), (s1 * s2 > 0) ? c : -c);
    }
  }
  return out;
}

SuperPoly derive_t(const SuperPoly& p, unsigned times) {
  SuperPoly out = p;
  for (unsigned i = 0; i < times; ++i) out = derive_t(out);
  return out;
}

SuperPoly truncate_eps(const SuperPoly& p, int n) {
  SuperPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (c.max_eps() <= n) {
      out.add_term(m, c);
    } else {
      out.add_term(m, truncate_eps(c, n));
    }
  }
  return out;
}

SuperPoly times_eps(const SuperPoly& p, int k) {
  SuperPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, c.times_eps(k));
  return out;
}

SuperPoly partial_wrt(Generator g, const SuperPoly& p) {
  SuperPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.exponent(g);
    if (e > 0) {
      Monomial n = m;
      int sign = n.remove(g);
      Coeff k = c * Rational(g.is_odd() ? sign : static_cast<long>(e));
      out.add_term(std::move(n), k);
    }
    if (g == Generator::u(0) && m.exp_u() > 0) out.add_term(m, c * Rational(m.exp_u()));
  }
  return out;
}

SuperPoly at_origin(const SuperPoly& p) {
  SuperPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (!m.even().empty()) continue;
    Monomial n = m;
    n.set_exp_u(0);
    out.add_term(std::move(n), c);
  }
  return out;
}

}  // namespace integrable

namespace integrable {

namespace {

// Nondecreasing (or strictly increasing) sequences of n jet orders summing to t.
void jet_partitions(std::uint32_t n, std::uint32_t t, std::uint32_t lo, bool distinct,
                    std::vector<std::uint32_t>& cur, std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    if (t == 0) out.push_back(cur);
    return;
  }
  for (std::uint32_t j = lo;; ++j) {
    // the remaining n-1 parts are each >= j (> j when distinct)
    std::uint32_t rest = distinct ? (n - 1) * (j + 1) + (n - 1) * (n - 2) / 2 : (n - 1) * j;
    if (j + rest > t) break;
    cur.push_back(j);
    jet_partitions(n - 1, t - j, distinct ? j + 1 : j, distinct, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> jet_partitions(std::uint32_t n, std::uint32_t t, bool distinct) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  jet_partitions(n, t, 0, distinct, cur, out);
  return out;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(std::uint32_t nu, std::uint32_t nv, std::uint32_t ntu,
                                          std::uint32_t ntv, std::uint32_t exp_u, std::uint32_t order) {
  std::vector<Monomial> out;
  Monomial base;
  base.set_exp_u(exp_u);
  for (std::uint32_t tu = 0; tu <= order; ++tu)
    for (std::uint32_t tv = 0; tu + tv <= order; ++tv)
      for (std::uint32_t ttu = 0; tu + tv + ttu <= order; ++ttu) {
        std::uint32_t ttv = order - tu - tv - ttu;
        auto pu = jet_partitions(nu, tu, false);
        auto pv = jet_partitions(nv, tv, false);
        auto ptu = jet_partitions(ntu, ttu, true);
        auto ptv = jet_partitions(ntv, ttv, true);
        for (const auto& a : pu)
          for (const auto& b : pv)
            for (const auto& c : ptu)
              for (const auto& d : ptv) {
                Monomial m = base;
                for (auto j : a) m.insert_left(Generator::u(j));
                for (auto j : b) m.insert_left(Generator::v(j));
                for (auto j : c) m.insert_left(Generator::theta_u(j));
                for (auto j : d) m.insert_left(Generator::theta_v(j));
                out.push_back(std::move(m));
              }
      }
  return out;
}

}  // namespace integrable
