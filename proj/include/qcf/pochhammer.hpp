#pragma once

// q-rising factorials (a;q)_k = (1 - a)(1 - aq)...(1 - aq^{k-1}) for the two
// base shapes a = q^m and a = -b q^m.

#include <cstdint>

#include "qcf/polynomial.hpp"
#include "qcf/rational_function.hpp"

namespace qcf {

enum class PochKind { QPower, NegBQPower };

struct PochBase {
  PochKind kind;
  std::uint32_t m;

  static constexpr PochBase q_power(std::uint32_t m) { return {PochKind::QPower, m}; }
  static constexpr PochBase neg_b_q_power(std::uint32_t m) { return {PochKind::NegBQPower, m}; }

  /// The factor 1 - a q^j.
  Polynomial factor(std::uint32_t j) const;
};

/// (a;q)_k for k >= 0. Throws IndexError for negative k.
Polynomial poch(PochBase a, int k);

/// (q;q)_{k_num} / (q;q)_{k_den}. A negative k_den yields zero
/// (1/(q;q)_m = 0 for m = -1, -2, ...). Throws IndexError for k_num < 0.
RationalFunction poch_ratio_q(int k_num, int k_den);

/// (-b q^m;q)_{k_num} / (-b q^m;q)_{k_den}. Negative indices throw IndexError.
RationalFunction poch_ratio_negb(std::uint32_t m_base, int k_num, int k_den);

/// prod_{j=lo}^{hi} (1 - a q^j); empty product when hi < lo.
Polynomial poch_factor_range(PochBase a, int lo, int hi);

}  // namespace qcf
