#include "integrable/scalar.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace integrable;
using testing_support::random_coeff;

TEST(Rational, AlwaysReduced) {
  Rational r = make_rational(120, 2);
  EXPECT_EQ(r.get_num(), 60);
  EXPECT_EQ(r.get_den(), 1);
  EXPECT_EQ(make_rational(-6, -4), make_rational(3, 2));
  EXPECT_EQ(make_rational(3, -6).get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, NoOverflow) {
  Rational r(1);
  for (int i = 0; i < 200; ++i) r *= make_rational(1L << 40, 3);
  Rational back = r;
  for (int i = 0; i < 200; ++i) back /= make_rational(1L << 40, 3);
  EXPECT_EQ(back, Rational(1));
}

TEST(Rational, ParsePrint) {
  EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
  EXPECT_EQ(to_string(make_rational(7, 3)), "7/3");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Coeff, Examples) {
  Coeff half_eps2(make_rational(1, 2), 2);
  EXPECT_EQ(half_eps2 + half_eps2, Coeff::eps(2));
  EXPECT_EQ(Coeff::eps(-1) * (Coeff::eps() * Coeff::q()), Coeff::q());
  Coeff zero = Coeff(2, 0, 1) - Coeff(2, 0, 1);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(zero.terms().empty());
  EXPECT_EQ(zero, Coeff());
}

TEST(Coeff, Truncate) {
  Coeff c = Coeff(1) + Coeff::eps(2) + Coeff::eps(4);
  EXPECT_EQ(truncate_eps(c, 2), Coeff(1) + Coeff::eps(2));
  Coeff neg = Coeff::eps(-1) * Coeff::q();
  EXPECT_EQ(truncate_eps(neg, 0), neg);
  EXPECT_TRUE(truncate_eps(Coeff(), 5).is_zero());
}

TEST(Coeff, TextRoundTrip) {
  EXPECT_EQ(Coeff::parse("eps^-1*q"), Coeff::eps(-1) * Coeff::q());
  EXPECT_EQ(Coeff(make_rational(-3, 4), 2, 1).str(), "-3/4*eps^2*q");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Coeff c = random_coeff(rng);
    std::string s = c.str();
    Coeff back = Coeff::parse(s);
    ASSERT_EQ(back, c) << s;
    ASSERT_EQ(back.str(), s);
  }
  EXPECT_EQ(Coeff().str(), "0");
  EXPECT_THROW(Coeff::parse("eps^"), ParseError);
}

TEST(CoeffProperty, RingAxioms) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    Coeff a = random_coeff(rng), b = random_coeff(rng), c = random_coeff(rng);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(CoeffProperty, TruncationIsAnIdempotentRingMap) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    Coeff a = random_coeff(rng, 0, 5), b = random_coeff(rng, 0, 5);
    const int n = 2 * testing_support::pick(rng, 0, 2);
    ASSERT_EQ(truncate_eps(truncate_eps(a, n), n), truncate_eps(a, n));
    ASSERT_EQ(truncate_eps(a + b, n), truncate_eps(a, n) + truncate_eps(b, n));
    ASSERT_EQ(truncate_eps(a * b, n), truncate_eps(truncate_eps(a, n) * truncate_eps(b, n), n));
  }
}
