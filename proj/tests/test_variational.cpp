#include "integrable/shift.hpp"
#include "integrable/todaop.hpp"
#include "integrable/variational.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace integrable;
using testing_support::pick;
using testing_support::random_super;

namespace {

const SuperPoly u = SuperPoly::u(), v = SuperPoly::v(), X = SuperPoly::exp_u();
const SuperPoly tu = SuperPoly::theta_u(), tv = SuperPoly::theta_v();
const SuperPoly qX = X * Coeff::q();

Functional br(const Functional& f, const Functional& g, int n) { return schouten_bracket(f, g, n); }

}  // namespace

TEST(Variational, EulerLagrange) {
  EXPECT_TRUE(variational_derivative(Kind::U, derive_t(u * SuperPoly::u(1))).is_zero());
  const int N = 6;
  Functional h1(v * v * make_rational(1, 2) + Delta(qX, N) * make_rational(1, 2));
  EXPECT_EQ(h1.dv(), v);
  Functional h0(mul_truncated(tv, nabla(tu, N), N));
  EXPECT_EQ(h0.dtv(), nabla(tu, N));
  EXPECT_EQ(variational_derivative(Kind::ThetaV, tu * tv), -tu);
  EXPECT_EQ(variational_derivative(Kind::U, X * v), X * v);
  // delta_u(u u_2) = 2 u_2
  EXPECT_EQ(variational_derivative(Kind::U, u * SuperPoly::u(2)), SuperPoly::u(2) * Rational(2));
}

TEST(Variational, FunctionalEquality) {
  EXPECT_TRUE(functional_equal(Functional(derive_t(u * v)), Functional()));
  const int N = 6;
  Functional shifted(shift(make_rational(1, 2), X, N));
  EXPECT_TRUE(functional_equal(shifted, Functional(X), N));
  EXPECT_TRUE(functional_equal_by_antiderivative(shifted, Functional(X)));
  EXPECT_FALSE(Functional(SuperPoly(1)).is_zero());
  EXPECT_FALSE(functional_equal(Functional(SuperPoly(1)), Functional()));
  EXPECT_TRUE(Functional().is_zero());
  EXPECT_EQ(Functional(u * tu).degree(), 1);
}

TEST(VariationalProperty, EulerLagrangeKillsDerivatives) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    SuperPoly p = random_super(rng, pick(rng, 0, 2));
    auto d = euler_lagrange(derive_t(p));
    ASSERT_TRUE(d.du.is_zero() && d.dv.is_zero() && d.dtu.is_zero() && d.dtv.is_zero()) << p.str();
  }
}

TEST(VariationalProperty, EqualityAgreesWithAntiderivative) {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 60; ++i) {
    SuperPoly a = random_super(rng, pick(rng, 0, 2));
    SuperPoly b = a + derive_t(random_super(rng, a.odd_degree().value_or(0)));
    if (pick(rng, 0, 1)) b += random_super(rng, a.odd_degree().value_or(0));
    Functional fa(a), fb(b);
    ASSERT_EQ(functional_equal(fa, fb), functional_equal_by_antiderivative(fa, fb)) << a.str() << " vs " << b.str();
  }
}

TEST(Schouten, Examples) {
  const int N = 6;
  EXPECT_TRUE(functional_equal(br(vector_field_e(), Functional(v * tu), N), Functional(tu)));
  EXPECT_TRUE(functional_equal(br(vector_field_e(), build_H(N), N), build_H0(N)));
  TodaLattice toda(N);
  EXPECT_TRUE(br(build_H0(N), toda.hamiltonian(0), N).is_zero());
}

TEST(Schouten, Bihamiltonian) {
  const int N = 6;
  const Functional h = build_H(N), h0 = build_H0(N), e = vector_field_e(), big_e = vector_field_E();
  EXPECT_TRUE(br(h0, h0, N).is_zero());
  EXPECT_TRUE(br(h, h, N).is_zero());
  EXPECT_TRUE(br(h, h0, N).is_zero());
  EXPECT_TRUE(br(e, h0, N).is_zero());
  EXPECT_TRUE(br(big_e, h, N).is_zero());
  EXPECT_TRUE(functional_equal(br(big_e, h0, N), -h0));
  EXPECT_EQ(h.dv(), mul_truncated(tv, nabla(tu, N), N));
}

TEST(SchoutenProperty, GradedSymmetryAndDegree) {
  std::mt19937_64 rng(63);
  const int N = 2;
  for (int i = 0; i < 60; ++i) {
    int a = pick(rng, 0, 2), b = pick(rng, 0, 2);
    Functional f(random_super(rng, a)), g(random_super(rng, b));
    Functional fg = br(f, g, N), gf = br(g, f, N);
    ASSERT_TRUE(functional_equal(fg, (a * b) % 2 ? -gf : gf));
    if (!fg.is_zero()) ASSERT_EQ(fg.degree(), a + b - 1);
  }
}

TEST(SchoutenProperty, Jacobi) {
  // the form compatible with the (-1)^{|f||g|} symmetry; for odd |f| it is
  // [f,[g,h]] = [[f,g],h] + (-1)^{(|f|+1)(|g|+1)} [g,[f,h]]
  std::mt19937_64 rng(64);
  const int N = 2;
  for (int i = 0; i < 60; ++i) {
    int a = pick(rng, 0, 2), b = pick(rng, 0, 2), c = pick(rng, 0, 2);
    Functional f(random_super(rng, a)), g(random_super(rng, b)), h(random_super(rng, c));
    Functional lhs = br(f, br(g, h, N), N);
    Functional first = br(br(f, g, N), h, N);
    Functional second = br(g, br(f, h, N), N);
    if (a % 2 == 0) first = -first;
    if (((a + 1) * (b + 1)) % 2) second = -second;
    ASSERT_TRUE(functional_equal(lhs, first + second)) << a << b << c;
  }
}

TEST(SchoutenProperty, HamiltonianDifferential) {
  std::mt19937_64 rng(65);
  const int N = 4;
  const Functional h = build_H(N);
  for (int i = 0; i < 5; ++i) {
    Functional f(random_super(rng, 0)), g(random_super(rng, 0));
    ASSERT_TRUE(br(h, br(h, f, N), N).is_zero());
    ASSERT_TRUE(functional_equal(br(br(h, f, N), br(h, g, N), N), br(h, poisson_bracket(f, g, h, N), N)));
    ASSERT_TRUE(functional_equal(poisson_bracket(f, g, h, N), -poisson_bracket(g, f, h, N)));
  }
}

TEST(Hamiltonian, VectorFields) {
  const int N = 6;
  TodaLattice toda(N);
  const Functional h0 = build_H0(N);
  auto vf1 = hamiltonian_vf(h0, toda.hamiltonian(1), N);
  EXPECT_EQ(vf1.u, nabla(v, N));
  EXPECT_EQ(vf1.v, nabla(qX, N));
  auto vfg = hamiltonian_vf(h0, build_g0(N), N);
  EXPECT_EQ(vfg.u, SuperPoly::u(1));
  EXPECT_EQ(vfg.v, SuperPoly::v(1));
  auto vf0 = hamiltonian_vf(h0, toda.hamiltonian(0), N);
  EXPECT_TRUE(vf0.u.is_zero() && vf0.v.is_zero());
}

TEST(Hamiltonian, Involution) {
  const int N = 6;
  TodaLattice toda(N);
  const Functional h0 = build_H0(N);
  EXPECT_TRUE(poisson_bracket(toda.hamiltonian(1), toda.hamiltonian(2), h0, N).is_zero());
  EXPECT_TRUE(poisson_bracket(build_g1(N), toda.hamiltonian(1), h0, N).is_zero());
  std::mt19937_64 rng(66);
  for (int i = 0; i < 10; ++i)
    EXPECT_TRUE(poisson_bracket(toda.hamiltonian(0), Functional(random_super(rng, 0)), h0, N).is_zero());
}

TEST(Hamiltonian, MagriLadder) {
  const int N = 6;
  TodaLattice toda(N);
  const Functional h = build_H(N), h0 = build_H0(N), big_e = vector_field_E();
  for (int n = 1; n <= 5; ++n)
    EXPECT_TRUE(functional_equal(br(h0, toda.hamiltonian(n), N), br(h, toda.hamiltonian(n - 1), N))) << "n=" << n;
  for (int k = 0; k <= 4; ++k)
    EXPECT_TRUE(functional_equal(br(big_e, toda.hamiltonian(k), N), toda.hamiltonian(k) * Rational(k + 1)));
}

TEST(SecondHierarchy, ClosedForms) {
  Functional g0 = build_g0(2);
  SuperPoly expected = u * v - u * SuperPoly::v(2) * Coeff(make_rational(1, 24), 2);
  EXPECT_TRUE(functional_equal(g0, Functional(expected)));
  EXPECT_EQ(truncate_eps(g0.density(), 2), truncate_eps(expected, 2));

  const int N = 6;
  TodaLattice toda(N);
  const Functional h = build_H(N), h0 = build_H0(N), e = vector_field_e(), big_e = vector_field_E();
  const Functional g1 = build_g1(N);
  g0 = build_g0(N);
  EXPECT_TRUE(functional_equal(br(e, g1, N), g0));
  EXPECT_TRUE(functional_equal(br(e, g0, N), Functional(u)));
  EXPECT_TRUE(functional_equal(br(big_e, g0, N), g0 + toda.hamiltonian(0) * Rational(2)));
  EXPECT_TRUE(functional_equal(br(big_e, g1, N), g1 * Rational(2) + toda.hamiltonian(1) * Rational(2)));
  EXPECT_TRUE(functional_equal(br(h0, g1, N), br(h, g0 - toda.hamiltonian(0) * Rational(2), N)));
}

TEST(SecondHierarchy, Solver) {
  const int N = 4;
  TodaLattice toda(N);
  const Functional e = vector_field_e(), big_e = vector_field_E();
  auto r1 = solve_g(1, build_g0(N), toda.hamiltonian(0), N);
  EXPECT_TRUE(r1.nontrivial_kernel.empty());
  EXPECT_TRUE(functional_equal(r1.g, build_g1(N)));
  EXPECT_GT(r1.basis_size, 0u);
  auto r2 = solve_g(2, r1.g, toda.hamiltonian(1), N);
  EXPECT_TRUE(r2.nontrivial_kernel.empty());
  EXPECT_TRUE(functional_equal(br(e, r2.g, N), r1.g * Rational(2)));
  EXPECT_TRUE(functional_equal(br(big_e, r2.g, N), r2.g * Rational(3) + toda.hamiltonian(2) * Rational(2)));
  SolveGOptions tight;
  tight.max_diff_order = 0;
  EXPECT_THROW(solve_g(1, build_g0(N), toda.hamiltonian(0), N, tight), NoSolutionInBasis);
}

TEST(Cohomology, Representatives) {
  const int N = 6;
  const Functional h0 = build_H0(N);
  for (const SuperPoly& p : {SuperPoly(1), u, v, tv, tu, u * tu - v * tv, tu * tv})
    EXPECT_TRUE(br(h0, Functional(p), N).is_zero()) << p.str();
  EXPECT_TRUE(in_weight_space(Functional(v), Rational(1), N));
  EXPECT_TRUE(in_weight_space(Functional(u), Rational(0), N));
  EXPECT_FALSE(in_weight_space(Functional(v), Rational(0), N));
  EXPECT_EQ(diagonal_weight(Monomial::of(Generator::v(2), 2)), 2);
  EXPECT_EQ(diagonal_weight(Monomial::of(Generator::theta_v())), -1);
  EXPECT_EQ(diagonal_weight(Monomial::of(Generator::exp_u())), 2);
}
