#pragma once

// Super differential polynomial ring over Q[eps^±1][q] generated by the
// jets d^n u, d^n v, the exponential e^u and the odd jets d^n theta_u,
// d^n theta_v.

#include "integrable/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace integrable {

enum class Kind : std::uint8_t { U = 0, V = 1, ThetaU = 2, ThetaV = 3, ExpU = 4 };

struct Generator {
  Kind kind = Kind::U;
  std::uint32_t jet = 0;  // always 0 for ExpU

  static constexpr Generator u(std::uint32_t n = 0) { return {Kind::U, n}; }
  static constexpr Generator v(std::uint32_t n = 0) { return {Kind::V, n}; }
  static constexpr Generator theta_u(std::uint32_t n = 0) { return {Kind::ThetaU, n}; }
  static constexpr Generator theta_v(std::uint32_t n = 0) { return {Kind::ThetaV, n}; }
  static constexpr Generator exp_u() { return {Kind::ExpU, 0}; }

  constexpr bool is_odd() const { return kind == Kind::ThetaU || kind == Kind::ThetaV; }
  constexpr Generator derived() const { return {kind, jet + 1}; }

  std::string name() const;
  static Generator parse(std::string_view symbol);

  auto operator<=>(const Generator&) const = default;
};

/// Monomial in the free graded-commutative algebra. Even jets carry positive
/// exponents, e^u carries its own exponent, odd jets appear at most once and
/// are kept sorted.
class Monomial {
 public:
  using EvenFactor = std::pair<Generator, std::uint32_t>;

  Monomial() = default;
  static Monomial of(Generator g, std::uint32_t power = 1);

  const std::vector<EvenFactor>& even() const { return even_; }
  std::uint32_t exp_u() const { return exp_u_; }
  const std::vector<Generator>& odd() const { return odd_; }

  int odd_degree() const { return static_cast<int>(odd_.size()); }
  bool is_one() const { return even_.empty() && odd_.empty() && exp_u_ == 0; }

  /// Exponent of an even generator (or of e^u); 0/1 presence for odd ones.
  std::uint32_t exponent(Generator g) const;
  /// Sum of jet orders counted with multiplicity.
  std::uint32_t total_order() const;
  /// Number of factors of the given kind counted with multiplicity.
  std::uint32_t degree(Kind k) const;

  /// Removes one factor of g (caller guarantees presence). For odd g the sign
  /// of the left derivative, (-1)^{#odd factors preceding g}, is returned.
  int remove(Generator g);
  /// Inserts one factor. Returns 0 if an odd factor is already present,
  /// otherwise the Koszul sign of moving it from the left into position.
  int insert_left(Generator g);
  void set_exp_u(std::uint32_t e) { exp_u_ = e; }

  /// Product with Koszul sign: returns 0 if an odd factor repeats.
  friend int multiply(const Monomial& a, const Monomial& b, Monomial& out);

  /// Canonical order: odd degree, e^u exponent, even factors, odd factors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string str() const;

 private:
  std::vector<EvenFactor> even_;
  std::uint32_t exp_u_ = 0;
  std::vector<Generator> odd_;
};

class SuperPoly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  SuperPoly() = default;
  SuperPoly(const Coeff& c);  // NOLINT(google-explicit-constructor)
  SuperPoly(long c) : SuperPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  SuperPoly(const Monomial& m, const Coeff& c);

  static SuperPoly gen(Generator g, std::uint32_t power = 1);
  static SuperPoly u(std::uint32_t n = 0) { return gen(Generator::u(n)); }
  static SuperPoly v(std::uint32_t n = 0) { return gen(Generator::v(n)); }
  static SuperPoly theta_u(std::uint32_t n = 0) { return gen(Generator::theta_u(n)); }
  static SuperPoly theta_v(std::uint32_t n = 0) { return gen(Generator::theta_v(n)); }
  static SuperPoly exp_u(std::uint32_t power = 1) { return gen(Generator::exp_u(), power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total number of (monomial, eps, q) summands.
  std::size_t summands() const;

  void add_term(const Monomial& m, const Coeff& c);
  void add_term(Monomial&& m, const Coeff& c);

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const Coeff& c);
  SuperPoly& operator*=(const Rational& r);

  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator*(SuperPoly a, const Coeff& c) { return a *= c; }
  friend SuperPoly operator*(const Coeff& c, SuperPoly a) { return a *= c; }
  friend SuperPoly operator*(SuperPoly a, const Rational& r) { return a *= r; }
  friend SuperPoly operator*(const Rational& r, SuperPoly a) { return a *= r; }
  SuperPoly operator-() const;

  friend bool operator==(const SuperPoly& a, const SuperPoly& b) { return a.terms_ == b.terms_; }

  Coeff constant_term() const;
  Coeff coefficient(const Monomial& m) const;
  int min_eps() const;
  int max_eps() const;
  /// Odd degree if every term shares it; nullopt for zero or mixed input.
  std::optional<int> odd_degree() const;
  bool is_even() const;
  /// Largest jet order of the given kind appearing, or -1.
  int max_jet(Kind k) const;

  std::string str() const;
  static SuperPoly parse(std::string_view text);

 private:
  Terms terms_;
};

SuperPoly super_mul(const SuperPoly& a, const SuperPoly& b);
/// Product keeping only eps exponents <= order.
SuperPoly mul_truncated(const SuperPoly& a, const SuperPoly& b, int order);

/// The total derivative d.
SuperPoly derive_t(const SuperPoly& p);
SuperPoly derive_t(const SuperPoly& p, unsigned times);

SuperPoly truncate_eps(const SuperPoly& p, int n);
SuperPoly times_eps(const SuperPoly& p, int k);

/// Partial derivative by a generator. d/du includes the chain rule through
/// e^u; odd generators use the left derivative.
SuperPoly partial_wrt(Generator g, const SuperPoly& p);

/// All monomials with the given numbers of u-, v-, theta_u- and theta_v-jets,
/// e^u exponent and total jet order.
std::vector<Monomial> enumerate_monomials(std::uint32_t nu, std::uint32_t nv, std::uint32_t ntu,
                                          std::uint32_t ntv, std::uint32_t exp_u, std::uint32_t order);

/// Sets u = v = 0 in all jets (e^u -> 1); odd parts are kept.
SuperPoly at_origin(const SuperPoly& p);

}  // namespace integrable
