#pragma once

// Functionals modulo total derivatives, variational derivatives, the
// Schouten bracket and the Hamiltonian structures built on it.

#include "integrable/superring.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace integrable {

struct VariationalDerivatives {
  SuperPoly du, dv;    // delta_u, delta_v
  SuperPoly dtu, dtv;  // delta^u, delta^v (Grassmann, left)
};

/// delta_g = sum_k (-d)^k d/d(d^k g) for g in {u, v, theta_u, theta_v}.
SuperPoly variational_derivative(Kind k, const SuperPoly& p);
VariationalDerivatives euler_lagrange(const SuperPoly& p);

/// The class of a density modulo total derivatives. Copies share the
/// representative and the lazily computed variational derivatives.
class Functional {
 public:
  Functional();
  explicit Functional(SuperPoly density);

  const SuperPoly& density() const;
  const VariationalDerivatives& derivatives() const;
  const SuperPoly& du() const { return derivatives().du; }
  const SuperPoly& dv() const { return derivatives().dv; }
  const SuperPoly& dtu() const { return derivatives().dtu; }
  const SuperPoly& dtv() const { return derivatives().dtv; }
  Coeff constant_term() const { return density().constant_term(); }

  /// Common odd degree of the density; 0 for the zero functional.
  int degree() const;
  /// Zero modulo total derivatives (all variational derivatives and the constant term vanish).
  bool is_zero() const;

  Functional operator+(const Functional& o) const;
  Functional operator-(const Functional& o) const;
  Functional operator-() const;
  Functional operator*(const Coeff& c) const;
  Functional operator*(const Rational& r) const;
  Functional truncated(int order) const;

  std::string str() const;

 private:
  struct State;
  std::shared_ptr<const State> s_;
};

bool functional_equal(const Functional& f, const Functional& g);
/// Equality after cutting both densities at eps^order.
bool functional_equal(const Functional& f, const Functional& g, int order);
/// Second opinion: f - g minus its constant term is a total derivative.
bool functional_equal_by_antiderivative(const Functional& f, const Functional& g);

/// [F, G] = int(d^uF d_uG + d^vF d_vG + (-1)^|F| (d_uF d^uG + d_vF d^vG)), cut at eps^order.
Functional schouten_bracket(const Functional& f, const Functional& g, int order);

/// int(eps^-1 theta_u E theta_u + v theta_v nabla theta_u + eps^-1 q e^u (E^{-1/2} theta_v)(E^{1/2} theta_v))
Functional build_H(int order);
/// int(theta_v nabla theta_u)
Functional build_H0(int order);
/// e = int theta_v (the vector field d/dv)
Functional vector_field_e();
/// Euler vector field int(v theta_v + 2 theta_u)
Functional vector_field_E();

struct Characteristics {
  SuperPoly u, v;
};

/// Characteristics of a degree-one functional X = int(a theta_u + b theta_v): (a, b) up to d.
Characteristics characteristics(const Functional& x);
/// The evolutionary vector field of f under the Hamiltonian operator h.
/// For H0 this is (nabla delta_v f, nabla delta_u f).
Characteristics hamiltonian_vf(const Functional& h, const Functional& f, int order);
/// {f, g}_h = [[h, f], g]
Functional poisson_bracket(const Functional& f, const Functional& g, const Functional& h, int order);

/// g0 = int u P v
Functional build_g0(int order);
/// g1 = int(1/2 u P(v^2 + q Delta e^u) + 1/2 v (Delta P - 2) v - 2 q e^u)
Functional build_g1(int order);

class NoSolutionInBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveGOptions {
  int max_diff_order = -1;  // -1: the eps order
  int max_u_degree = -1;    // -1: k + 1
};

struct SolveGResult {
  Functional g;
  std::size_t basis_size = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  /// Kernel directions that are not zero functionals (expected empty).
  std::vector<Functional> nontrivial_kernel;
};

/// Solves [H0, g] = [H, prev - (2/k) h_{k-1}] over densities of diagonal
/// E-weight k + 1 (v-jets 1, e^u 2), eps exponent equal to the total jet
/// order, q paired with e^u.
SolveGResult solve_g(int k, const Functional& prev, const Functional& h_prev, int order,
                     const SolveGOptions& opts = {});

/// Generalized eigenvalue check: (ad E - lambda)^n f == 0 for some n <= max_power.
bool in_weight_space(const Functional& f, const Rational& lambda, int order, int max_power = 3);

/// Eigenvalue of ad E on the diagonal part: v-jets count 1, e^u counts 2,
/// theta_v-jets count -1, u- and theta_u-jets 0.
int diagonal_weight(const Monomial& m);

}  // namespace integrable
