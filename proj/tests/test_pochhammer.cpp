#include <gtest/gtest.h>

#include "qcf/errors.hpp"
#include "qcf/pochhammer.hpp"
#include "test_support.hpp"

namespace qcf {
namespace {

using test::P;
using test::R;

constexpr auto kQ = PochBase::q_power(1);
constexpr auto kNegBQ = PochBase::neg_b_q_power(1);

TEST(Poch, Products) {
  EXPECT_EQ(poch(kQ, 0), Polynomial(1));
  EXPECT_EQ(poch(kQ, 2), P("1 + -q + -q^2 + q^3"));
  EXPECT_EQ(poch(kNegBQ, 2), P("1 + b*q + b*q^2 + b^2*q^3"));
  EXPECT_THROW(poch(kQ, -1), IndexError);
}

TEST(Poch, BaseOneVanishes) {
  const auto one = PochBase::q_power(0);
  EXPECT_EQ(poch(one, 0), Polynomial(1));
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(poch(one, k).is_zero());
}

TEST(Poch, RatioQ) {
  EXPECT_EQ(poch_ratio_q(3, 1), R("1 + -q^2") * R("1 + -q^3"));
  EXPECT_TRUE(poch_ratio_q(2, -1).is_zero());
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(poch_ratio_q(k, k), RationalFunction(1));
  EXPECT_EQ(poch_ratio_q(1, 3), R("1", "1 + -q^2") * R("1", "1 + -q^3"));
  EXPECT_THROW(poch_ratio_q(-1, 0), IndexError);
}

TEST(Poch, RatioNegB) {
  EXPECT_EQ(poch_ratio_negb(1, 0, 1), R("1", "1 + b*q"));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(poch_ratio_negb(1, k, k), RationalFunction(1));
  EXPECT_EQ(poch_ratio_negb(0, 1, 0), R("1 + b"));
  EXPECT_THROW(poch_ratio_negb(1, -1, 2), IndexError);
  EXPECT_THROW(poch_ratio_negb(1, 2, -1), IndexError);
}

TEST(PochProperty, StepRecurrence) {
  for (const PochBase base : {kQ, kNegBQ, PochBase::q_power(3), PochBase::neg_b_q_power(0)}) {
    for (int k = 0; k <= 12; ++k) {
      EXPECT_EQ(poch(base, k + 1), poch(base, k) * base.factor(static_cast<std::uint32_t>(k)));
    }
  }
}

TEST(PochProperty, RatioTimesDenominator) {
  for (int k1 = 0; k1 <= 12; ++k1) {
    for (int k2 = 0; k2 <= k1; ++k2) {
      EXPECT_EQ(poch_ratio_q(k1, k2) * RationalFunction(poch(kQ, k2)), RationalFunction(poch(kQ, k1)));
    }
  }
}

TEST(PochProperty, VanishingConvention) {
  for (int k = 0; k <= 8; ++k) {
    for (int m = -4; m <= -1; ++m) EXPECT_TRUE(poch_ratio_q(k, m).is_zero()) << k << "," << m;
  }
}

TEST(PochProperty, GaussianBinomialIsPolynomial) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto ratio = poch_ratio_q(n, n - k).as_polynomial();
      ASSERT_TRUE(ratio.has_value());
      const auto binom = try_exact_div(*ratio, poch(kQ, k));
      ASSERT_TRUE(binom.has_value()) << n << "," << k;
      // At q = 1 the Gaussian binomial is the ordinary one.
      long expected = 1;
      for (int i = 0; i < k; ++i) expected = expected * (n - i) / (i + 1);
      EXPECT_DOUBLE_EQ(binom->evaluate(1.0, 0.0, 0.0), static_cast<double>(expected));
    }
  }
}

}  // namespace
}  // namespace qcf
