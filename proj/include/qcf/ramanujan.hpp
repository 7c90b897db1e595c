#pragma once

// Convergent formulas for the continued fraction
//
//   1 + b + lq/(1 + bq) + lq^2/(1 + bq^2) + ... + lq^n/(1 + bq^n)
//
// and its b = 0 specialization (the Rogers-Ramanujan continued fraction).

#include <vector>

#include "qcf/polynomial.hpp"
#include "qcf/rational_function.hpp"

namespace qcf {

/// Numerator of the n-th Rogers-Ramanujan convergent:
/// sum_{k=0}^{[(n+1)/2]} q^{k^2} l^k (q;q)_{n-k+1} / ((q;q)_k (q;q)_{n-2k+1}).
Polynomial mu(int n);

/// Denominator of the n-th Rogers-Ramanujan convergent:
/// sum_{k=0}^{[n/2]} q^{k^2+k} l^k (q;q)_{n-k} / ((q;q)_k (q;q)_{n-2k}).
Polynomial nu(int n);

/// Index pair (n, s) with n >= 1 and 0 <= s <= n + 1.
struct GnParams {
  int n;
  int s;

  /// Throws InvalidRange outside the domain.
  GnParams(int n, int s);
};

/// g_n(s) = sum_{k=0}^{[(n-s+1)/2]}
///            q^{k^2+sk} l^k / ((q;q)_k (-bq^s;q)_k)
///          * (q;q)_{n-k-s+1} / (q;q)_{n-2k-s+1}
///          * (-bq;q)_{n-k} / (-bq;q)_n.
/// The denominator divides prod_{j=s}^{n} (1 + b q^j).
RationalFunction g(GnParams params);

/// g_n(s) - g_n(s+1), summed termwise in the telescoped form
///   sum_k q^{k^2+sk} l^k (1 - q^k)(1 + b q^{n-k+1}) / ((q;q)_k (-bq^s;q)_{k+1})
///         * (q;q)_{n-k-s} / (q;q)_{n-2k-s+1} * (-bq;q)_{n-k} / (-bq;q)_n.
/// Requires 0 <= s <= n - 1.
RationalFunction g_difference(int n, int s);

/// Finite continued fraction b_0 + a_1/(b_1 + a_2/(... + a_n/b_n)) with
/// a_j = l q^j and b_j = 1 + b q^j (generalized family, b_0 = 1 + b) or
/// b_j = 1 (Rogers-Ramanujan family, b_0 = 1).
class CFSpec {
 public:
  static CFSpec generalized(int depth);
  static CFSpec rogers_ramanujan(int depth);

  /// Accepts explicit data only when it matches one of the two families
  /// term by term; throws std::invalid_argument otherwise.
  CFSpec(int depth, Polynomial leading, std::vector<Polynomial> partial_numerators,
         std::vector<Polynomial> partial_denominators);

  int depth() const { return depth_; }
  const Polynomial& leading() const { return leading_; }
  /// a_j for 1 <= j <= depth.
  const Polynomial& partial_numerator(int j) const { return numerators_.at(j - 1); }
  /// b_j for 1 <= j <= depth.
  const Polynomial& partial_denominator(int j) const { return denominators_.at(j - 1); }

 private:
  CFSpec() = default;

  int depth_ = 0;
  Polynomial leading_;
  std::vector<Polynomial> numerators_;
  std::vector<Polynomial> denominators_;
};

/// Evaluates the tail recursion T_n = b_n, T_j = b_j + a_{j+1}/T_{j+1}; returns T_0.
RationalFunction cf_finite_backward(const CFSpec& spec);

struct ConvergentPair {
  Polynomial P;
  Polynomial Q;
  int j;
};

/// P_j, Q_j for j = 0..depth from P_j = b_j P_{j-1} + a_j P_{j-2} (Q likewise),
/// seeded with P_{-1} = 1, Q_{-1} = 0, P_0 = b_0, Q_0 = 1.
std::vector<ConvergentPair> cf_convergents_forward(const CFSpec& spec);

/// (1 + b) g_n(0) / g_n(1) - b, the n-th convergent of
/// 1 + lq/(1 + bq) + ... + lq^n/(1 + bq^n).
RationalFunction convergent(int n);

/// Al-Salam-Ismail U_n(x; a, B) at a = bq, B = -l q^2:
/// sum_k (-a;q)_{n-k} (q;q)_{n-k} / ((-a;q)_k (q;q)_k (q;q)_{n-2k}) x^{n-2k} (-B)^k q^{k(k-1)}.
RationalFunction asi_u_at(int n, const RationalFunction& x);

/// asi_u_at(n, 1).
RationalFunction asi_u(int n);

}  // namespace qcf
