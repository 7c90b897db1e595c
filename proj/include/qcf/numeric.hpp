#pragma once

// Double-precision evaluation of the continued fraction and of the two-series
// ratio it converges to for |q| < 1.

#include <string>
#include <vector>

namespace qcf {

struct NumericPoint {
  double q;
  double lambda;
  double b;
  /// Series summation stops once |term| < term_stop * |partial sum|.
  double term_stop = 1e-18;
  /// Relative tolerance used when comparing numeric values.
  double tolerance = 1e-10;

  /// Throws NonConvergent unless |q| < 1.
  NumericPoint(double q, double lambda, double b);
};

struct SeriesRatio {
  double value;
  /// Index of the last term included.
  int terms_used;
};

/// [sum_k q^{k^2} l^k / ((q;q)_k (-bq;q)_k)] / [sum_k q^{k^2+k} l^k / ((q;q)_k (-bq;q)_k)],
/// both sums over k = 0..K with an early stop on negligible terms.
SeriesRatio series_ratio_entry15_detail(const NumericPoint& pt, int K);
double series_ratio_entry15(const NumericPoint& pt, int K);

/// 1 + lq/(1 + bq + lq^2/(... + lq^n/(1 + bq^n))) by backward recurrence.
/// Throws NumericBreakdown when a tail vanishes.
double cf_numeric(const NumericPoint& pt, int n);

struct ConvergenceRow {
  int n;
  double convergent;
  double deviation;
};

struct ConvergenceReport {
  double q;
  double lambda;
  double b;
  double series_ratio;
  int truncation_terms;
  std::vector<ConvergenceRow> rows;

  /// `n,convergent,deviation` header plus one line per row, 17 significant digits.
  std::string to_csv() const;
};

/// |cf_numeric(pt, n) - series_ratio_entry15(pt, K)| for n = 1..n_max.
ConvergenceReport convergence_demo(const NumericPoint& pt, int n_max, int K = 50);

}  // namespace qcf
