#include "qcf/ramanujan.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "qcf/errors.hpp"
#include "qcf/pochhammer.hpp"

namespace qcf {

namespace {

constexpr auto kQBase = PochBase::q_power(1);

void require_positive(int n, const char* what) {
  if (n < 1) throw InvalidRange(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
}

Polynomial monomial(std::uint32_t eq, std::uint32_t el) { return Polynomial::term(1, {eq, el, 0}); }

// (q;q)_{top} / ((q;q)_k (q;q)_{top-k}) as a polynomial; the division by
// (q;q)_k must be exact.
Polynomial q_binomial(int top, int k) {
  auto ratio = poch_ratio_q(top, top - k).as_polynomial();
  assert(ratio);
  return exact_div(*ratio, poch(kQBase, k));
}

// Sums rational terms whose denominators all divide common_den.
RationalFunction sum_over(const std::vector<RationalFunction>& terms, const Polynomial& common_den) {
  Polynomial num;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    num += t.num() * exact_div(common_den, t.den());
  }
  return RationalFunction(std::move(num), common_den);
}

}  // namespace

Polynomial mu(int n) {
  require_positive(n, "mu");
  Polynomial sum;
  for (int k = 0; k <= (n + 1) / 2; ++k) {
    const auto ku = static_cast<std::uint32_t>(k);
    sum += monomial(ku * ku, ku) * q_binomial(n - k + 1, k);
  }
  return sum;
}

Polynomial nu(int n) {
  require_positive(n, "nu");
  Polynomial sum;
  for (int k = 0; k <= n / 2; ++k) {
    const auto ku = static_cast<std::uint32_t>(k);
    sum += monomial(ku * ku + ku, ku) * q_binomial(n - k, k);
  }
  return sum;
}

GnParams::GnParams(int n_, int s_) : n(n_), s(s_) {
  if (n < 1) throw InvalidRange("g: n must be >= 1, got " + std::to_string(n));
  if (s < 0 || s > n + 1) {
    throw InvalidRange("g: s must lie in [0, n+1] = [0, " + std::to_string(n + 1) + "], got " +
                       std::to_string(s));
  }
}

RationalFunction g(GnParams params) {
  const int n = params.n;
  const int s = params.s;
  const auto su = static_cast<std::uint32_t>(s);
  const int kmax = (n - s + 1) / 2;
  // Past kmax, 1/(q;q)_{n-2k-s+1} vanishes.
  assert(n - (kmax + 1) - s + 1 < 0 || poch_ratio_q(n - (kmax + 1) - s + 1, n - 2 * (kmax + 1) - s + 1).is_zero());

  std::vector<RationalFunction> terms;
  for (int k = 0; k <= kmax; ++k) {
    const auto ku = static_cast<std::uint32_t>(k);
    const auto qpart = poch_ratio_q(n - k - s + 1, n - 2 * k - s + 1).as_polynomial();
    assert(qpart);
    const Polynomial top = monomial(ku * ku + su * ku, ku) * exact_div(*qpart, poch(kQBase, k));
    const RationalFunction bpart = poch_ratio_negb(1, n - k, n);
    terms.emplace_back(top * bpart.num(),
                       bpart.den() * poch(PochBase::neg_b_q_power(su), k));
  }
  return sum_over(terms, poch_factor_range(PochBase::neg_b_q_power(0), s, n));
}

RationalFunction g_difference(int n, int s) {
  require_positive(n, "g_difference");
  if (s < 0 || s > n - 1) {
    throw InvalidRange("g_difference: s must lie in [0, n-1], got " + std::to_string(s));
  }
  const auto su = static_cast<std::uint32_t>(s);
  std::vector<RationalFunction> terms;
  // The k = 0 term carries the factor 1 - q^0 = 0.
  for (int k = 1; k <= (n - s + 1) / 2; ++k) {
    const auto ku = static_cast<std::uint32_t>(k);
    const auto qpart = poch_ratio_q(n - k - s, n - 2 * k - s + 1).as_polynomial();
    assert(qpart);
    const Polynomial top = monomial(ku * ku + su * ku, ku) *
                           exact_div(*qpart * one_minus_q_pow(ku), poch(kQBase, k));
    const RationalFunction bpart = poch_ratio_negb(1, n - k, n);
    terms.emplace_back(top * bpart.num() * one_plus_b_q_pow(static_cast<std::uint32_t>(n - k + 1)),
                       bpart.den() * poch(PochBase::neg_b_q_power(su), k + 1));
  }
  return sum_over(terms, poch_factor_range(PochBase::neg_b_q_power(0), s, n));
}

CFSpec CFSpec::generalized(int depth) {
  require_positive(depth, "CFSpec");
  CFSpec spec;
  spec.depth_ = depth;
  spec.leading_ = one_plus_b_q_pow(0);
  for (int j = 1; j <= depth; ++j) {
    const auto ju = static_cast<std::uint32_t>(j);
    spec.numerators_.push_back(monomial(ju, 1));
    spec.denominators_.push_back(one_plus_b_q_pow(ju));
  }
  return spec;
}

CFSpec CFSpec::rogers_ramanujan(int depth) {
  require_positive(depth, "CFSpec");
  CFSpec spec;
  spec.depth_ = depth;
  spec.leading_ = Polynomial(1);
  for (int j = 1; j <= depth; ++j) {
    spec.numerators_.push_back(monomial(static_cast<std::uint32_t>(j), 1));
    spec.denominators_.push_back(Polynomial(1));
  }
  return spec;
}

CFSpec::CFSpec(int depth, Polynomial leading, std::vector<Polynomial> partial_numerators,
               std::vector<Polynomial> partial_denominators)
    : depth_(depth),
      leading_(std::move(leading)),
      numerators_(std::move(partial_numerators)),
      denominators_(std::move(partial_denominators)) {
  if (depth_ < 1 || numerators_.size() != static_cast<std::size_t>(depth_) ||
      denominators_.size() != static_cast<std::size_t>(depth_)) {
    throw std::invalid_argument("CFSpec: sequence lengths must equal depth >= 1");
  }
  auto same_data = [this](const CFSpec& ref) {
    return leading_ == ref.leading_ && numerators_ == ref.numerators_ &&
           denominators_ == ref.denominators_;
  };
  if (!same_data(generalized(depth_)) && !same_data(rogers_ramanujan(depth_))) {
    throw std::invalid_argument(
        "CFSpec: partial quotients must be a_j = l*q^j with b_j = 1 + b*q^j (b_0 = 1 + b) "
        "or b_j = 1 (b_0 = 1)");
  }
}

RationalFunction cf_finite_backward(const CFSpec& spec) {
  const int n = spec.depth();
  RationalFunction tail(spec.partial_denominator(n));
  for (int j = n - 1; j >= 0; --j) {
    const Polynomial& bj = j == 0 ? spec.leading() : spec.partial_denominator(j);
    // Every tail is 1 + O(q, l, b), hence never zero.
    if (tail.num().coefficient({}) == 0) {
      throw DivisionByZero("cf_finite_backward: tail with vanishing constant term");
    }
    tail = RationalFunction(bj) + RationalFunction(spec.partial_numerator(j + 1)) / tail;
  }
  return tail;
}

std::vector<ConvergentPair> cf_convergents_forward(const CFSpec& spec) {
  std::vector<ConvergentPair> out;
  out.reserve(static_cast<std::size_t>(spec.depth()) + 1);
  Polynomial p_prev(1), q_prev(0);
  out.push_back({spec.leading(), Polynomial(1), 0});
  for (int j = 1; j <= spec.depth(); ++j) {
    const auto& last = out.back();
    const Polynomial& a = spec.partial_numerator(j);
    const Polynomial& bj = spec.partial_denominator(j);
    ConvergentPair next{bj * last.P + a * p_prev, bj * last.Q + a * q_prev, j};
    p_prev = last.P;
    q_prev = last.Q;
    out.push_back(std::move(next));
  }
  return out;
}

RationalFunction convergent(int n) {
  require_positive(n, "convergent");
  const RationalFunction one_plus_b(one_plus_b_q_pow(0));
  return one_plus_b * g({n, 0}) / g({n, 1}) - RationalFunction(Polynomial::b());
}

RationalFunction asi_u_at(int n, const RationalFunction& x) {
  if (n < 0) throw InvalidRange("asi_u: n must be >= 0, got " + std::to_string(n));
  RationalFunction sum;
  for (int k = 0; k <= n / 2; ++k) {
    const auto ku = static_cast<std::uint32_t>(k);
    // (-a;q)_m with a = bq is (-bq;q)_m; (-B)^k q^{k(k-1)} = l^k q^{k^2+k}.
    const RationalFunction apart = poch_ratio_negb(1, n - k, k);
    RationalFunction term = apart * RationalFunction(monomial(ku * ku + ku, ku) * q_binomial(n - k, k));
    for (int e = 0; e < n - 2 * k; ++e) term *= x;
    sum += term;
  }
  return sum;
}

RationalFunction asi_u(int n) { return asi_u_at(n, RationalFunction(1)); }

}  // namespace qcf
