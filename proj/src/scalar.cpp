#include "integrable/scalar.hpp"

#include "integrable/text.hpp"

#include <algorithm>

namespace integrable {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) throw ParseError("bad rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

Coeff::Coeff(long c) {
  if (c != 0) terms_.emplace(CoeffKey{}, Rational(c));
}

Coeff::Coeff(const Rational& c) {
  if (c != 0) terms_.emplace(CoeffKey{}, c);
}

Coeff::Coeff(const Rational& c, int eps_exp, int q_exp) {
  if (q_exp < 0) throw std::invalid_argument("negative q exponent");
  if (c != 0) terms_.emplace(CoeffKey{eps_exp, q_exp}, c);
}

bool Coeff::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == CoeffKey{} && terms_.begin()->second == 1;
}

int Coeff::min_eps() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (first || k.eps < m) m = k.eps;
    first = false;
  }
  return m;
}

int Coeff::max_eps() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (first || k.eps > m) m = k.eps;
    first = false;
  }
  return m;
}

int Coeff::max_q() const {
  int m = 0;
  for (const auto& [k, v] : terms_) m = std::max(m, k.q);
  return m;
}

Rational Coeff::at(int eps_exp, int q_exp) const {
  auto it = terms_.find(CoeffKey{eps_exp, q_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Coeff::add_term(int eps_exp, int q_exp, const Rational& c) {
  if (c == 0) return;
  if (q_exp < 0) throw std::invalid_argument("negative q exponent");
  auto [it, inserted] = terms_.try_emplace(CoeffKey{eps_exp, q_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff& Coeff::operator+=(const Coeff& other) {
  for (const auto& [k, v] : other.terms_) add_term(k.eps, k.q, v);
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& other) {
  for (const auto& [k, v] : other.terms_) add_term(k.eps, k.q, -v);
  return *this;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  Coeff out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto& [ka, va] = *a.terms_.begin();
    const auto& [kb, vb] = *b.terms_.begin();
    out.terms_.emplace(CoeffKey{ka.eps + kb.eps, ka.q + kb.q}, va * vb);
    return out;
  }
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) out.add_term(ka.eps + kb.eps, ka.q + kb.q, va * vb);
  return out;
}

Coeff& Coeff::operator*=(const Coeff& other) { return *this = *this * other; }

Coeff& Coeff::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= r;
  return *this;
}

Coeff Coeff::operator-() const {
  Coeff out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

Coeff Coeff::times_eps(int shift) const {
  Coeff out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(CoeffKey{k.eps + shift, k.q}, v);
  return out;
}

std::string Coeff::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational mag = abs(v);
    if (first) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    bool have_factor = k.eps != 0 || k.q != 0;
    if (mag != 1 || !have_factor) body += to_string(mag);
    auto add = [&](std::string_view base, int e) {
      if (!body.empty()) body += '*';
      text::append_power(body, base, e);
    };
    if (k.eps != 0) add("eps", k.eps);
    if (k.q != 0) add("q", k.q);
    out += body;
  }
  return out;
}

Coeff Coeff::parse(std::string_view input) {
  Coeff out;
  for (const auto& term : text::parse_sum(input)) {
    int e = 0, q = 0;
    for (const auto& f : term.factors) {
      if (f.symbol == "eps") e += f.exponent;
      else if (f.symbol == "q") q += f.exponent;
      else throw ParseError("unexpected symbol '" + f.symbol + "' in coefficient");
    }
    if (q < 0) throw ParseError("negative q exponent");
    out.add_term(e, q, term.scalar);
  }
  return out;
}

Coeff truncate_eps(const Coeff& a, int n) {
  Coeff out;
  for (const auto& [k, v] : a.terms())
    if (k.eps <= n) out.add_term(k.eps, k.q, v);
  return out;
}

}  // namespace integrable
