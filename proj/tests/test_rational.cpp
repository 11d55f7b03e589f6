#include <gtest/gtest.h>

#include "eckart/polynomial.hpp"
#include "eckart/rational.hpp"

using namespace eckart;

TEST(ParseRational, AcceptsFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational(" 0.125 "), Rational(1, 8));
  EXPECT_EQ(parse_rational("-.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("2."), Rational(2));
}

TEST(ParseRational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.2.3", "1e3", "/3", "-"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(ParseRational, RoundTripsThroughToString) {
  for (const char* text : {"0", "-4/3", "8/75", "12345678901234567890/7"}) {
    EXPECT_EQ(to_string(parse_rational(text)), text);
  }
}

TEST(Gaussian, FieldOperations) {
  const Gaussian a(Rational(1, 2), Rational(-3));
  const Gaussian b(Rational(2), Rational(1, 3));
  EXPECT_EQ(a * a.inverse(), Gaussian(1));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(Gaussian::i() * Gaussian::i(), Gaussian(-1));
  for (int k = -8; k <= 8; ++k) {
    Gaussian expect(1);
    for (int j = 0; j < ((k % 4) + 4) % 4; ++j) expect *= Gaussian::i();
    EXPECT_EQ(Gaussian::i_pow(k), expect) << k;
  }
  EXPECT_THROW(Gaussian(0).inverse(), std::domain_error);
  EXPECT_EQ(to_string(Gaussian(Rational(1, 2), Rational(-3))), "(1/2-3*i)");
}

TEST(Polynomial, ArithmeticAndTrimming) {
  const RationalPoly x = RationalPoly::x();
  const RationalPoly p = x * x - RationalPoly(1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.derivative(), x.scaled(Rational(2)));
  EXPECT_EQ(p(Rational(3)), Rational(8));
  EXPECT_EQ(p.rescaled_argument(Rational(2))(Rational(1)), Rational(3));
  EXPECT_NEAR(p.evaluate({0.5, 0.0}).real(), -0.75, 1e-15);
}

TEST(Polynomial, ExactDivision) {
  const RationalPoly x = RationalPoly::x();
  const RationalPoly a = x * x - RationalPoly(1);
  const RationalPoly b = x - RationalPoly(1);
  auto q = divide_exact(a, b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, x + RationalPoly(1));
  EXPECT_FALSE(divide_exact(a, x).has_value());
  EXPECT_FALSE(divide_exact(a, RationalPoly{}).has_value());
  EXPECT_TRUE(divide_exact(RationalPoly{}, b)->is_zero());
}

TEST(Polynomial, BPolyRendering) {
  const BPoly b = coupling();
  EXPECT_EQ(to_string(b.scaled(Gaussian(Rational(-4, 3)))), "-4/3*b");
  EXPECT_EQ(to_string(BPoly{}), "0");
  EXPECT_EQ(evaluate_at(b * b + BPoly(1), Rational(1, 2)), Gaussian(Rational(5, 4)));
  EXPECT_DOUBLE_EQ(coefficient_norm(b.scaled(Gaussian(Rational(3), Rational(4)))), 5.0);
}
