#pragma once

// Pseudodifferential operators sum_i a_i d^i over the KdV ring Q[eps^±1][u, u_1, ...].

#include "integrable/superring.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace integrable {

class FloorTooShallow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AntiderivativeNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent series in d, known for all orders >= floor (or exactly, when the
/// floor is absent).
class PsdOp {
 public:
  using Coeffs = std::map<int, SuperPoly>;

  PsdOp() = default;
  explicit PsdOp(std::optional<int> floor) : floor_(floor) {}
  PsdOp(Coeffs coeffs, std::optional<int> floor);

  static PsdOp d(int power = 1);
  /// The KdV Lax operator 1/2 eps^2 d^2 + u.
  static PsdOp lax();
  static PsdOp scalar(const SuperPoly& a);

  const Coeffs& coeffs() const { return coeffs_; }
  std::optional<int> floor() const { return floor_; }
  bool is_exact() const { return !floor_; }

  /// Coefficient of d^i; throws FloorTooShallow below the floor.
  SuperPoly at(int i) const;
  void add(int i, const SuperPoly& a);

  /// Largest order with a nonzero coefficient (INT32_MIN when zero).
  int top() const;
  /// Smallest order with a nonzero coefficient (INT32_MAX when zero).
  int bottom() const;

  /// Drops all orders below m and records m as floor.
  PsdOp truncated(int m) const;

  PsdOp& operator+=(const PsdOp& o);
  PsdOp& operator-=(const PsdOp& o);
  friend PsdOp operator+(PsdOp a, const PsdOp& b) { return a += b; }
  friend PsdOp operator-(PsdOp a, const PsdOp& b) { return a -= b; }
  friend PsdOp operator*(const PsdOp& a, const PsdOp& b);

  /// Equality of the known parts: both floors must agree.
  friend bool operator==(const PsdOp& a, const PsdOp& b) = default;

  std::string str() const;

 private:
  Coeffs coeffs_;
  std::optional<int> floor_;
};

/// Product by the generalized Leibniz rule. The result is known down to
/// max(floor(a) + top(b), floor(b) + top(a)).
PsdOp psdo_mul(const PsdOp& a, const PsdOp& b);
PsdOp proj_plus(const PsdOp& a);
PsdOp proj_minus(const PsdOp& a);
/// a*b - b*a
PsdOp commutator(const PsdOp& a, const PsdOp& b);

/// Generalized binomial coefficient C(n, m), n any integer, m >= 0.
Rational binomial(long n, unsigned long m);

/// The square root D = d + eps^-2 u d^-1 + ... of d^2 + 2 eps^-2 u, down to d^m.
PsdOp sqrt_D(int m);

/// Default floor used for f_k.
constexpr int gd_floor(int k) { return -(2 * k + 3); }

/// f_k = eps^2 * [d^-1] L^k D. When `m` is given, D is computed down to m.
/// The result is audited against a recomputation at a deeper floor unless
/// audit is false.
SuperPoly gelfand_dickii_residue(int k, std::optional<int> m = std::nullopt, bool audit = true);
/// L^k D with D taken down to m.
PsdOp lax_power_times_d(int k, int m);

/// f_k from K f_{k-1} = d f_k with K = 1/8 eps^2 d^3 + u d + 1/2 u_1.
SuperPoly gelfand_dickii_recursion(int k);
/// K applied to f.
SuperPoly kdv_recursion_operator(const SuperPoly& f);

/// The flow delta_k with delta_k(u_n) = d^{n+1} f_k.
SuperPoly kdv_flow(int k, const SuperPoly& p);

/// -d/du
SuperPoly kdv_L_minus1(const SuperPoly& p);
/// -sum_k (k/2 + 1) u_k d/du_k
SuperPoly kdv_L0(const SuperPoly& p);

}  // namespace integrable
