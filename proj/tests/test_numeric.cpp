#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "qcf/errors.hpp"
#include "qcf/numeric.hpp"
#include "qcf/ramanujan.hpp"

namespace qcf {
namespace {

// Fixed by the series itself: K = 50 with adaptive stop, cross-checked below
// against a long-double sum with no early stop.
constexpr double kLimitQ01L1B05 = 1.09434493054267;

// Both series summed to exactly K terms in long double.
long double series_ratio_plain(double q, double l, double b, int K) {
  long double num = 0, den = 0, pq = 1, pb = 1;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      pq *= 1 - std::pow((long double)q, k);
      pb *= 1 + b * std::pow((long double)q, k);
    }
    const long double t = std::pow((long double)q, k * k) * std::pow((long double)l, k) / (pq * pb);
    num += t;
    den += t * std::pow((long double)q, k);
  }
  return num / den;
}

std::vector<NumericPoint> grid() {
  std::vector<NumericPoint> pts;
  for (double q : {0.05, 0.1, 0.3}) {
    for (double l : {-0.5, 1.0}) {
      for (double b : {0.0, 0.5, 2.0}) pts.emplace_back(q, l, b);
    }
  }
  return pts;
}

TEST(NumericPoint, RequiresUnitDisc) {
  EXPECT_THROW(NumericPoint(1.0, 1.0, 0.0), NonConvergent);
  EXPECT_THROW(NumericPoint(-1.5, 1.0, 0.0), NonConvergent);
  EXPECT_THROW(NumericPoint(std::nan(""), 1.0, 0.0), NonConvergent);
  EXPECT_NO_THROW(NumericPoint(-0.99, 1.0, 0.0));
}

TEST(SeriesRatio, TrivialPoints) {
  EXPECT_EQ(series_ratio_entry15(NumericPoint(0.4, 0.0, 0.7), 50), 1.0);
  EXPECT_EQ(series_ratio_entry15(NumericPoint(0.0, 3.0, 0.7), 50), 1.0);
  EXPECT_THROW(series_ratio_entry15(NumericPoint(0.4, 1.0, 0.0), 0), InvalidRange);
}

TEST(SeriesRatio, SelfOracle) {
  const NumericPoint pt(0.1, 1.0, 0.5);
  const double k50 = series_ratio_entry15(pt, 50);
  const double k60 = series_ratio_entry15(pt, 60);
  EXPECT_NEAR(k50, k60, 1e-14);
  EXPECT_NEAR(k50, static_cast<double>(series_ratio_plain(0.1, 1.0, 0.5, 50)), 1e-14);
  EXPECT_NEAR(k50, static_cast<double>(series_ratio_plain(0.1, 1.0, 0.5, 30)), 1e-14);
  EXPECT_NEAR(k50, kLimitQ01L1B05, 4e-16);
}

TEST(SeriesRatio, TruncationStability) {
  for (const auto& pt : grid()) {
    for (int K : {10, 20, 40}) {
      const double a = series_ratio_entry15(pt, K);
      const double c = series_ratio_entry15(pt, K + 10);
      EXPECT_LE(std::abs(a - c), 1e-13 * std::abs(c)) << pt.q << " " << pt.lambda << " " << pt.b;
    }
  }
}

TEST(SeriesRatio, VanishingFactor) {
  // 1 + b q = 0 at q = 0.5, b = -2.
  EXPECT_THROW(series_ratio_entry15(NumericPoint(0.5, 1.0, -2.0), 50), NumericBreakdown);
}

TEST(CfNumeric, Values) {
  const NumericPoint pt(0.1, 1.0, 0.5);
  EXPECT_NEAR(cf_numeric(pt, 1), 1.0 + 0.1 / 1.05, 1e-15);
  EXPECT_NEAR(cf_numeric(pt, 1), 1.0952380952380952, 1e-15);
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(cf_numeric(NumericPoint(0.3, 0.0, 0.5), n), 1.0);
  EXPECT_EQ(cf_numeric(NumericPoint(0.0, 2.0, 0.5), 5), 1.0);
  EXPECT_THROW(cf_numeric(pt, 0), InvalidRange);
}

TEST(CfNumeric, Breakdown) {
  // T_1 = 1 + b q = 0.
  EXPECT_THROW(cf_numeric(NumericPoint(0.5, 1.0, -2.0), 1), NumericBreakdown);
}

TEST(CfNumeric, MatchesExactConvergent) {
  for (int n = 1; n <= 12; ++n) {
    const RationalFunction exact = convergent(n);
    for (const auto& pt : grid()) {
      const double c = cf_numeric(pt, n);
      EXPECT_LE(std::abs(exact.evaluate(pt.q, pt.lambda, pt.b) - c), 1e-10 * std::abs(c));
    }
  }
}

TEST(ConvergenceDemo, ReferencePoint) {
  const auto report = convergence_demo(NumericPoint(0.1, 1.0, 0.5), 40, 50);
  ASSERT_EQ(report.rows.size(), 40u);
  EXPECT_LT(report.rows.back().deviation, 1e-12);
  EXPECT_GT(report.truncation_terms, 0);
  EXPECT_LE(report.truncation_terms, 50);
  for (const auto& r : report.rows) EXPECT_GE(r.deviation, 0.0);
}

TEST(ConvergenceDemo, SlowerPoint) {
  const auto report = convergence_demo(NumericPoint(0.5, 1.0, 1.0), 60, 50);
  EXPECT_LT(report.rows.back().deviation, 1e-10);
}

TEST(ConvergenceDemo, LambdaZero) {
  const auto report = convergence_demo(NumericPoint(0.3, 0.0, 0.5), 10, 50);
  for (const auto& r : report.rows) {
    EXPECT_EQ(r.convergent, 1.0);
    EXPECT_EQ(r.deviation, 0.0);
  }
}

TEST(ConvergenceDemo, DeviationDecaysOnGrid) {
  for (const auto& pt : grid()) {
    const auto report = convergence_demo(pt, 40, 50);
    const double floor = 64 * std::numeric_limits<double>::epsilon() * std::abs(report.series_ratio);
    for (int n = 5; n + 5 <= 40; ++n) {
      const double here = report.rows[n - 1].deviation;
      if (here <= floor) break;
      EXPECT_LT(report.rows[n + 4].deviation, here) << pt.q << " " << pt.lambda << " " << pt.b << " n=" << n;
    }
  }
}

TEST(ConvergenceDemo, Csv) {
  const auto report = convergence_demo(NumericPoint(0.3, 0.0, 0.5), 2, 50);
  EXPECT_EQ(report.to_csv(), "n,convergent,deviation\n1,1,0\n2,1,0\n");
}

}  // namespace
}  // namespace qcf
