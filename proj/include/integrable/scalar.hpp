#pragma once

// Ground ring: exact rationals and Laurent polynomials in eps with
// non-negative powers of q.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace integrable {

/// Arbitrary precision rational, always in lowest terms.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent pair of a ground-ring monomial eps^eps * q^q.
struct CoeffKey {
  int eps = 0;
  int q = 0;
  auto operator<=>(const CoeffKey&) const = default;
};

/// Element of Q[eps, eps^-1][q]: a finite map (eps exponent, q exponent) -> rational.
/// No stored zero entries; equality is structural.
class Coeff {
 public:
  using Terms = std::map<CoeffKey, Rational>;

  Coeff() = default;
  Coeff(long c);  // NOLINT(google-explicit-constructor)
  Coeff(const Rational& c);  // NOLINT(google-explicit-constructor)
  Coeff(const Rational& c, int eps_exp, int q_exp = 0);

  static Coeff eps(int exponent = 1) { return Coeff(Rational(1), exponent, 0); }
  static Coeff q(int exponent = 1) { return Coeff(Rational(1), 0, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }

  /// Smallest / largest eps exponent present; 0 for the zero element.
  int min_eps() const;
  int max_eps() const;
  int max_q() const;

  /// Coefficient of eps^a q^b.
  Rational at(int eps_exp, int q_exp) const;

  Coeff& operator+=(const Coeff& other);
  Coeff& operator-=(const Coeff& other);
  Coeff& operator*=(const Coeff& other);
  Coeff& operator*=(const Rational& r);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator*(Coeff a, const Rational& r) { return a *= r; }
  friend Coeff operator*(const Rational& r, Coeff a) { return a *= r; }
  Coeff operator-() const;

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.terms_ == b.terms_; }

  /// Adds c * eps^a q^b in place.
  void add_term(int eps_exp, int q_exp, const Rational& c);

  /// Multiplies every term by eps^shift.
  Coeff times_eps(int shift) const;

  std::string str() const;
  static Coeff parse(std::string_view text);

 private:
  Terms terms_;
};

/// Drops all terms with eps exponent > n.
Coeff truncate_eps(const Coeff& a, int n);

}  // namespace integrable
