#include <random>

#include <gtest/gtest.h>

#include "qcf/errors.hpp"
#include "qcf/rational_function.hpp"
#include "test_support.hpp"

namespace qcf {
namespace {

using test::P;
using test::R;

TEST(RationalFunction, FieldArithmetic) {
  EXPECT_EQ(R("1", "1 + b") * R("1 + b"), RationalFunction(1));
  // N/D = 1 + (N - D)/D with N = 1 + q, D = 1.
  const RationalFunction N = R("1 + q"), D = R("1");
  EXPECT_EQ(RationalFunction(1) + (N - D) / D, R("1 + q"));
  EXPECT_EQ(R("l*q", "1 + b") + R("l*q*b", "1 + b"), R("l*q"));
  EXPECT_EQ(R("q", "1 + q") - R("q", "1 + q"), RationalFunction{});
}

TEST(RationalFunction, Equality) {
  EXPECT_TRUE(rf_equal(R("q"), R("q + -q^2", "1 + -q")));
  EXPECT_FALSE(rf_equal(R("1", "1 + b"), R("1", "1 + b*q")));
  EXPECT_FALSE(rf_equal(R("1"), RationalFunction{}));
  EXPECT_TRUE(rf_equal(RationalFunction{}, R("0", "1 + q")));
}

TEST(RationalFunction, DivisionByZero) {
  EXPECT_THROW(R("1", "0"), DivisionByZero);
  EXPECT_THROW(R("1 + q") / RationalFunction{}, DivisionByZero);
}

TEST(RationalFunction, NormalFormCancelsStructuredFactors) {
  // (1 - q^2)(1 + bq) / ((1 - q)(1 + bq)) -> 1 + q
  const RationalFunction r(P("1 + -q^2") * one_plus_b_q_pow(1), P("1 + -q") * one_plus_b_q_pow(1));
  ASSERT_TRUE(r.as_polynomial().has_value());
  EXPECT_EQ(*r.as_polynomial(), P("1 + q"));
  EXPECT_EQ(r.den(), Polynomial(1));
}

TEST(RationalFunction, NormalFormContentAndSign) {
  const RationalFunction r(P("2 + 4*q"), P("-6 + -2*b"));
  EXPECT_EQ(r.num(), P("-1 + -2*q"));
  EXPECT_EQ(r.den(), P("3 + b"));
  const RationalFunction h(Polynomial::term(Coeff(1, 2), {1, 0, 0}), Polynomial::term(Coeff(3, 4), {}));
  EXPECT_EQ(h.num(), P("2*q"));
  EXPECT_EQ(h.den(), P("3"));
}

TEST(RationalFunction, Text) {
  EXPECT_EQ(R("1 + q").to_string(), "1 + q");
  EXPECT_EQ(R("l*q", "1 + b*q").to_string(), "(q*l)/(1 + q*b)");
  EXPECT_EQ(RationalFunction{}.to_string(), "0");
}

TEST(RationalFunction, SpecializeAndEvaluate) {
  const RationalFunction r = R("1 + b + l*q", "1 + b*q");
  EXPECT_EQ(r.at_b_zero(), R("1 + l*q"));
  EXPECT_NEAR(r.evaluate(0.1, 1.0, 0.5), (1.5 + 0.1) / 1.05, 1e-15);
}

RationalFunction random_rf(std::mt19937& rng) {
  return RationalFunction(test::random_poly(rng, 4, 3), test::random_nonzero_poly(rng, 4, 3));
}

TEST(RationalFunctionProperty, EqualityIsAnEquivalence) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalFunction a = random_rf(rng);
    const Polynomial m1 = test::random_nonzero_poly(rng, 3, 2);
    const Polynomial m2 = test::random_nonzero_poly(rng, 3, 2);
    // Same value, different representations.
    const RationalFunction b(a.num() * m1, a.den() * m1);
    const RationalFunction c(a.num() * m1 * m2, a.den() * m2 * m1);
    EXPECT_TRUE(a == a);
    EXPECT_EQ(a == b, b == a);
    EXPECT_TRUE(a == b && b == c && a == c);
    const RationalFunction d = a + RationalFunction(Polynomial::q(7));
    EXPECT_FALSE(a == d);
  }
}

TEST(RationalFunctionProperty, NormalizationIsIdempotent) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial num = test::random_poly(rng, 4, 3) * one_minus_q_pow(2) * one_plus_b_q_pow(1);
    Polynomial den = test::random_nonzero_poly(rng, 4, 3) * one_minus_q_pow(2) * one_plus_b_q_pow(1);
    den = den.scaled(Coeff(-3, 7));
    const auto once = normalize(num, den);
    const auto twice = normalize(once.first, once.second);
    EXPECT_EQ(once, twice);
    EXPECT_TRUE(once.first.has_integer_coefficients());
    EXPECT_TRUE(once.second.has_integer_coefficients());
    EXPECT_GT(once.second.terms().front().second, 0);
    EXPECT_EQ(RationalFunction(once.first, once.second), RationalFunction(num, den));
  }
}

TEST(RationalFunctionProperty, FieldLaws) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

}  // namespace
}  // namespace qcf
