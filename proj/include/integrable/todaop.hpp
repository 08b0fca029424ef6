#pragma once

// Twisted Laurent polynomials in Lambda and the Toda lattice hierarchy.

#include "integrable/superring.hpp"
#include "integrable/variational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace integrable {

/// Finite sum of a_k Lambda^k with coefficients cut at eps^order.
class LambdaOp {
 public:
  using Coeffs = std::map<int, SuperPoly>;

  explicit LambdaOp(int order) : order_(order) {}
  LambdaOp(Coeffs coeffs, int order);

  static LambdaOp lambda(int power, int order);
  static LambdaOp scalar(const SuperPoly& a, int order);
  /// Lambda + v + q e^u Lambda^-1
  static LambdaOp lax(int order);

  int order() const { return order_; }
  const Coeffs& coeffs() const { return coeffs_; }
  SuperPoly at(int k) const;
  void add(int k, const SuperPoly& a);

  LambdaOp& operator+=(const LambdaOp& o);
  LambdaOp& operator-=(const LambdaOp& o);
  friend LambdaOp operator+(LambdaOp a, const LambdaOp& b) { return a += b; }
  friend LambdaOp operator-(LambdaOp a, const LambdaOp& b) { return a -= b; }
  friend LambdaOp operator*(const LambdaOp& a, const LambdaOp& b);
  friend bool operator==(const LambdaOp& a, const LambdaOp& b) = default;

  std::string str() const;

 private:
  Coeffs coeffs_;
  int order_;
};

/// sum (E^{-j/2} a_i)(E^{i/2} b_j) Lambda^{i+j}
LambdaOp lambda_mul(const LambdaOp& a, const LambdaOp& b);
/// a*b - (-1)^{|a||b|} b*a for homogeneous odd degree (plain commutator for even input).
LambdaOp lambda_commutator(const LambdaOp& a, const LambdaOp& b);
/// int a_0 dt
Functional residue(const LambdaOp& a);

/// The Toda hierarchy at a fixed eps order. Lax powers are memoized; the
/// object is safe to share between threads.
class TodaLattice {
 public:
  explicit TodaLattice(int order);

  int order() const { return order_; }
  /// L^n
  const LambdaOp& lax_power(int n) const;
  /// Coefficient p_k(n) of Lambda^k in L^n.
  SuperPoly p(int k, int n) const;
  /// h_n = Res(L^{n+1}) / (n+1)
  Functional hamiltonian(int n) const;
  /// delta_n u = nabla p_0(n), delta_n v = nabla p_{-1}(n)
  Characteristics flow_field(int n) const;
  /// delta_n applied to p.
  SuperPoly flow(int n, const SuperPoly& p) const;

 private:
  int order_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<LambdaOp>> powers_;
};

/// Residuals of the two bihamiltonian recursion identities at n.
struct KupershmidtResidual {
  SuperPoly first;   // nabla d_v h_n - nabla(v d_v h_{n-1}) - eps^-1(E - E^-1) d_u h_{n-1}
  SuperPoly second;  // nabla d_u h_n - C_u d_v h_{n-1} - v nabla d_u h_{n-1}
  bool ok() const { return first.is_zero() && second.is_zero(); }
};
KupershmidtResidual kupershmidt_residual(const TodaLattice& toda, int n);

/// p_0(n) - v p_0(n-1) - Delta p_{-1}(n-1)
SuperPoly ddd_residual(const TodaLattice& toda, int n);

/// The eps = 0 form of p_0(n) from the Legendre recurrence,
/// (n+1) Q_{n+1} = (2n+1) v Q_n - n (v^2 - 4 q e^u) Q_{n-1}.
SuperPoly dispersionless_p0(int n);

/// The derivation e = d/dv and the Euler field E (u -> 2, v -> v) on densities.
SuperPoly apply_e(const SuperPoly& p);
SuperPoly apply_E(const SuperPoly& p);

}  // namespace integrable
