#include "qcf/pochhammer.hpp"

#include <string>

#include "qcf/errors.hpp"

namespace qcf {

Polynomial PochBase::factor(std::uint32_t j) const {
  switch (kind) {
    case PochKind::QPower:
      // m + j == 0 gives 1 - 1 = 0.
      return Polynomial(1) - Polynomial::q(m + j);
    case PochKind::NegBQPower:
      return one_plus_b_q_pow(m + j);
  }
  return {};
}

Polynomial poch_factor_range(PochBase a, int lo, int hi) {
  Polynomial p(1);
  for (int j = lo; j <= hi; ++j) p *= a.factor(static_cast<std::uint32_t>(j));
  return p;
}

Polynomial poch(PochBase a, int k) {
  if (k < 0) throw IndexError("poch: negative index " + std::to_string(k));
  return poch_factor_range(a, 0, k - 1);
}

RationalFunction poch_ratio_q(int k_num, int k_den) {
  if (k_num < 0) throw IndexError("poch_ratio_q: negative numerator index " + std::to_string(k_num));
  if (k_den < 0) return {};
  // (q;q)_k = prod_{j=1}^{k} (1 - q^j); the base q has factor(j) = 1 - q^{j+1}.
  const auto base = PochBase::q_power(1);
  if (k_den <= k_num) return RationalFunction(poch_factor_range(base, k_den, k_num - 1));
  return RationalFunction(Polynomial(1), poch_factor_range(base, k_num, k_den - 1));
}

RationalFunction poch_ratio_negb(std::uint32_t m_base, int k_num, int k_den) {
  if (k_num < 0 || k_den < 0) {
    throw IndexError("poch_ratio_negb: negative index (" + std::to_string(k_num) + ", " +
                     std::to_string(k_den) + ")");
  }
  const auto base = PochBase::neg_b_q_power(m_base);
  if (k_den <= k_num) return RationalFunction(poch_factor_range(base, k_den, k_num - 1));
  return RationalFunction(Polynomial(1), poch_factor_range(base, k_num, k_den - 1));
}

}  // namespace qcf
