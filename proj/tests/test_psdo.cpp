#include "integrable/psdo.hpp"
#include "integrable/shift.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace integrable;
using testing_support::pick;
using testing_support::random_kdv_poly;

namespace {

const SuperPoly u = SuperPoly::u();

PsdOp monomial_op(int i, const SuperPoly& a, std::optional<int> floor = std::nullopt) {
  PsdOp r(floor);
  r.add(i, a);
  return r;
}

PsdOp random_op(std::mt19937_64& rng, std::optional<int> floor) {
  PsdOp r(floor);
  const int lo = floor ? *floor : 0;
  for (int t = pick(rng, 1, 3); t > 0; --t) r.add(pick(rng, lo, 2), random_kdv_poly(rng, 1));
  return r;
}

}  // namespace

TEST(Psdo, LeibnizExamples) {
  PsdOp du = PsdOp::d() * PsdOp::scalar(u);
  EXPECT_EQ(du, monomial_op(1, u) + monomial_op(0, SuperPoly::u(1)));

  PsdOp inv = PsdOp::d(-1).truncated(-3) * PsdOp::scalar(u);
  ASSERT_EQ(inv.floor(), std::optional<int>(-3));
  EXPECT_EQ(inv.at(-1), u);
  EXPECT_EQ(inv.at(-2), -SuperPoly::u(1));
  EXPECT_EQ(inv.at(-3), SuperPoly::u(2));
  EXPECT_EQ(inv.coeffs().size(), 3u);
  EXPECT_THROW(inv.at(-4), FloorTooShallow);

  EXPECT_EQ(PsdOp::lax() * PsdOp::scalar(SuperPoly(1)), PsdOp::lax());
}

TEST(Psdo, Projections) {
  SuperPoly w = SuperPoly::u(3);
  PsdOp a = monomial_op(1, u) + monomial_op(-1, w);
  EXPECT_EQ(proj_plus(a), monomial_op(1, u));
  EXPECT_EQ(proj_minus(a), monomial_op(-1, w));
  EXPECT_TRUE(proj_minus(PsdOp::lax()).coeffs().empty());
}

TEST(Psdo, Printing) {
  EXPECT_EQ(PsdOp::lax().str(), "(1/2*eps^2) * d^2 + (u_0) * d^0");
}

TEST(Psdo, Binomial) {
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(-1, 3), Rational(-1));
  EXPECT_EQ(binomial(-2, 2), Rational(3));
  EXPECT_EQ(binomial(3, 5), Rational(0));
}

TEST(Psdo, SquareRoot) {
  PsdOp d = sqrt_D(-7);
  EXPECT_EQ(d.at(1), SuperPoly(1));
  EXPECT_TRUE(d.at(0).is_zero());
  EXPECT_EQ(d.at(-1), u * Coeff::eps(-2));
  // D^2 = d^2 + 2 eps^-2 u on the known range
  PsdOp sq = d * d;
  PsdOp target = PsdOp::d(2) + PsdOp::scalar(u * Coeff(2, -2));
  for (int i = *sq.floor(); i <= 2; ++i) ASSERT_EQ(sq.at(i), target.at(i)) << "d^" << i;
  // at u = 0 only d survives
  for (const auto& [i, a] : d.coeffs())
    if (i != 1) EXPECT_TRUE(at_origin(a).is_zero()) << "d^" << i;
}

TEST(Psdo, SquareRootCommutesWithLax) {
  PsdOp c = commutator(sqrt_D(-8), PsdOp::lax());
  for (const auto& [i, a] : c.coeffs()) EXPECT_TRUE(a.is_zero()) << "d^" << i;
}

TEST(GelfandDickii, QuotedValues) {
  EXPECT_EQ(gelfand_dickii_residue(0), u);
  SuperPoly f1 = SuperPoly::u(2) * Coeff(make_rational(1, 8), 2) + u * u * make_rational(3, 4);
  EXPECT_EQ(gelfand_dickii_residue(1), f1);
  EXPECT_EQ(gelfand_dickii_recursion(1), f1);
}

TEST(GelfandDickii, RecursionOperatorOnU) {
  SuperPoly expected = SuperPoly::u(3) * Coeff(make_rational(1, 8), 2) + u * SuperPoly::u(1) * make_rational(3, 2);
  EXPECT_EQ(kdv_recursion_operator(u), expected);
  EXPECT_EQ(expected, derive_t(gelfand_dickii_residue(1)));
}

TEST(GelfandDickii, F2FrozenFromRecursion) {
  // from K f_1 = d f_2 solved by hand
  SuperPoly f2 = SuperPoly::u(4) * Coeff(make_rational(1, 64), 4) +
                 u * SuperPoly::u(2) * Coeff(make_rational(5, 16), 2) +
                 SuperPoly::u(1) * SuperPoly::u(1) * Coeff(make_rational(5, 32), 2) + u * u * u * make_rational(5, 8);
  EXPECT_EQ(gelfand_dickii_recursion(2), f2);
  EXPECT_EQ(gelfand_dickii_residue(2), f2);
}

TEST(GelfandDickii, TwoPathsAgree) {
  for (int k = 0; k <= 5; ++k) {
    SuperPoly r = gelfand_dickii_residue(k);
    EXPECT_EQ(r, gelfand_dickii_recursion(k)) << "k=" << k;
    EXPECT_TRUE(r.constant_term().is_zero());
  }
}

TEST(GelfandDickii, FloorInsensitive) {
  for (int k = 0; k <= 3; ++k)
    EXPECT_EQ(gelfand_dickii_residue(k, gd_floor(k), false), gelfand_dickii_residue(k, gd_floor(k) - 4, false));
}

TEST(GelfandDickii, VirasoroLadder) {
  for (int k = 1; k <= 4; ++k) {
    SuperPoly fk = gelfand_dickii_residue(k);
    EXPECT_EQ(kdv_L_minus1(fk), gelfand_dickii_residue(k - 1) * make_rational(-(2 * k + 1), 2));
    EXPECT_EQ(kdv_L0(fk), fk * Rational(-(k + 1)));
  }
}

TEST(KdvFlow, Examples) {
  EXPECT_EQ(kdv_flow(0, u), SuperPoly::u(1));
  SuperPoly kdv = (SuperPoly::u(3) * Coeff::eps(2) + u * SuperPoly::u(1) * Rational(12)) * make_rational(1, 8);
  EXPECT_EQ(kdv_flow(1, u), kdv);
  EXPECT_EQ(kdv_flow(1, u * u), u * kdv * Rational(2));
}

TEST(KdvFlow, Commute) {
  for (int m = 0; m <= 3; ++m)
    for (int n = m + 1; n <= 3; ++n)
      EXPECT_EQ(kdv_flow(m, kdv_flow(n, u)), kdv_flow(n, kdv_flow(m, u))) << m << "," << n;
}

TEST(PsdoProperty, Associative) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    std::optional<int> fa, fb, fc;
    if (pick(rng, 0, 1)) fa = -3;
    if (pick(rng, 0, 1)) fb = -3;
    if (pick(rng, 0, 1)) fc = -3;
    PsdOp a = random_op(rng, fa), b = random_op(rng, fb), c = random_op(rng, fc);
    PsdOp left = (a * b) * c, right = a * (b * c);
    ASSERT_EQ(left.floor().has_value(), right.floor().has_value());
    if (!left.floor()) {
      ASSERT_EQ(left, right);
      continue;
    }
    int m = std::max(*left.floor(), *right.floor());
    ASSERT_EQ(left.truncated(m), right.truncated(m));
  }
}

TEST(PsdoProperty, DifferentialPartIsExact) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 40; ++i) {
    PsdOp a = random_op(rng, std::nullopt), b = random_op(rng, std::nullopt);
    PsdOp ab = a * b;
    EXPECT_TRUE(ab.is_exact());
    EXPECT_TRUE(proj_minus(ab).coeffs().empty());
  }
}
