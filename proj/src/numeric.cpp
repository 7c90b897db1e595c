#include "qcf/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

NumericPoint::NumericPoint(double q_, double lambda_, double b_) : q(q_), lambda(lambda_), b(b_) {
  if (!(std::abs(q) < 1.0)) {
    throw NonConvergent("numeric evaluation requires |q| < 1, got q = " + std::to_string(q));
  }
}

SeriesRatio series_ratio_entry15_detail(const NumericPoint& pt, int K) {
  if (K < 1) throw InvalidRange("series_ratio_entry15: K must be >= 1");
  if (!(std::abs(pt.q) < 1.0)) throw NonConvergent("series_ratio_entry15: |q| >= 1");

  // t_k = q^{k^2} l^k / ((q;q)_k (-bq;q)_k), u_k = q^k t_k, via
  // t_k = t_{k-1} * l q^{2k-1} / ((1 - q^k)(1 + b q^k)).
  double t = 1.0;
  double num = 1.0;
  double den = 1.0;
  double qk = 1.0;
  int k = 1;
  for (; k <= K; ++k) {
    const double q_prev = qk;
    qk *= pt.q;
    const double divisor = (1.0 - qk) * (1.0 + pt.b * qk);
    if (divisor == 0.0) {
      throw NumericBreakdown("series_ratio_entry15: vanishing factor at k = " + std::to_string(k));
    }
    t *= pt.lambda * q_prev * qk / divisor;
    const double u = t * qk;
    num += t;
    den += u;
    if (std::abs(t) < pt.term_stop * std::abs(num) && std::abs(u) < pt.term_stop * std::abs(den)) {
      break;
    }
  }
  if (std::abs(den) < kEps) throw NumericBreakdown("series_ratio_entry15: denominator series vanishes");
  return {num / den, std::min(k, K)};
}

double series_ratio_entry15(const NumericPoint& pt, int K) {
  return series_ratio_entry15_detail(pt, K).value;
}

double cf_numeric(const NumericPoint& pt, int n) {
  if (n < 1) throw InvalidRange("cf_numeric: n must be >= 1");
  std::vector<double> qpow(static_cast<std::size_t>(n) + 1, 1.0);
  for (std::size_t j = 1; j < qpow.size(); ++j) qpow[j] = qpow[j - 1] * pt.q;
  double tail = 1.0 + pt.b * qpow[n];
  for (int j = n - 1; j >= 1; --j) {
    const double a = pt.lambda * qpow[j + 1];
    const double bj = 1.0 + pt.b * qpow[j];
    if (std::abs(tail) <= kEps * (std::abs(bj) + std::abs(a))) {
      throw NumericBreakdown("cf_numeric: tail T_" + std::to_string(j + 1) + " vanishes");
    }
    tail = bj + a / tail;
  }
  const double a1 = pt.lambda * pt.q;
  if (std::abs(tail) <= kEps * (1.0 + std::abs(a1))) {
    throw NumericBreakdown("cf_numeric: tail T_1 vanishes");
  }
  return 1.0 + a1 / tail;
}

ConvergenceReport convergence_demo(const NumericPoint& pt, int n_max, int K) {
  if (n_max < 1) throw InvalidRange("convergence_demo: n_max must be >= 1");
  const SeriesRatio limit = series_ratio_entry15_detail(pt, K);
  ConvergenceReport report{pt.q, pt.lambda, pt.b, limit.value, limit.terms_used, {}};
  report.rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double c = cf_numeric(pt, n);
    report.rows.push_back({n, c, std::abs(c - limit.value)});
  }
  return report;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "n,convergent,deviation\n";
  for (const auto& r : rows) out << r.n << ',' << r.convergent << ',' << r.deviation << '\n';
  return out.str();
}

}  // namespace qcf
