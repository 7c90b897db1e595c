#include "qcf/verify.hpp"

#include <stdexcept>
#include <string>

#include "qcf/errors.hpp"
#include "qcf/pochhammer.hpp"

namespace qcf {

namespace {

CaseResult compare(int n, std::optional<int> s, const RationalFunction& lhs,
                   const RationalFunction& rhs) {
  if (lhs == rhs) return {n, s, true, std::nullopt};
  auto [l, r] = cross_products(lhs, rhs);
  return {n, s, false, Witness{l.to_string(), r.to_string()}};
}

// First failing comparison wins; all pass otherwise.
CaseResult compare_all(int n, std::optional<int> s,
                       std::initializer_list<std::pair<RationalFunction, RationalFunction>> pairs) {
  for (const auto& [lhs, rhs] : pairs) {
    CaseResult c = compare(n, s, lhs, rhs);
    if (!c.pass) return c;
  }
  return {n, s, true, std::nullopt};
}

void require_n_max(int n_max) {
  if (n_max < 1) throw InvalidRange("n_max must be >= 1, got " + std::to_string(n_max));
}

RationalFunction bq(std::uint32_t j) { return RationalFunction(one_plus_b_q_pow(j)); }

RationalFunction lq(std::uint32_t j) { return RationalFunction(Polynomial::term(1, {j, 1, 0})); }

}  // namespace

void VerificationReport::add(CaseResult c) {
  (c.pass ? passed_ : failed_) += 1;
  cases_.push_back(std::move(c));
}

const std::vector<std::string>& fault_names() {
  static const std::vector<std::string> names = {
      "mu", "nu", "g", "g_difference", "cf_backward", "cf_forward", "asi", "division"};
  return names;
}

Formulas corrupted_formulas(std::string_view target) {
  Formulas f;
  if (target == "mu") {
    f.mu = [](int n) {
      Polynomial p = qcf::mu(n);
      return n == 3 ? p + Polynomial::lambda() : p;
    };
  } else if (target == "nu") {
    f.nu = [](int n) {
      Polynomial p = qcf::nu(n);
      return n == 3 ? p + Polynomial::term(1, {5, 1, 0}) : p;
    };
  } else if (target == "g") {
    f.g = [](GnParams p) {
      RationalFunction r = qcf::g(p);
      return p.n == 2 ? r + RationalFunction(Polynomial::term(1, {7, 2, 0})) : r;
    };
  } else if (target == "g_difference") {
    f.g_difference = [](int n, int s) {
      RationalFunction r = qcf::g_difference(n, s);
      return n == 2 && s == 0 ? r + RationalFunction(Polynomial::q(3)) : r;
    };
  } else if (target == "cf_backward") {
    f.cf_backward = [](const CFSpec& spec) {
      RationalFunction r = qcf::cf_finite_backward(spec);
      return spec.depth() == 2 ? r + RationalFunction(Polynomial::lambda(3)) : r;
    };
  } else if (target == "cf_forward") {
    f.cf_forward = [](const CFSpec& spec) {
      auto pairs = qcf::cf_convergents_forward(spec);
      if (pairs.size() > 2) pairs[2].P += Polynomial::q(2);
      return pairs;
    };
  } else if (target == "asi") {
    f.asi_u = [](int n) {
      RationalFunction r = qcf::asi_u(n);
      return n == 2 ? r + RationalFunction(Polynomial::lambda()) : r;
    };
  } else if (target == "division") {
    f.division_step = [](const RationalFunction& N, const RationalFunction& D) {
      return RationalFunction(1) + (N - D) / D + RationalFunction(Polynomial::q()) / D;
    };
  } else {
    throw std::invalid_argument("unknown fault target: " + std::string(target));
  }
  return f;
}

VerificationReport check_entry16(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("entry16");
  for (int n = 1; n <= n_max; ++n) {
    report.add(compare(n, std::nullopt, RationalFunction(f.mu(n), f.nu(n)),
                       f.cf_backward(CFSpec::rogers_ramanujan(n))));
  }
  return report;
}

VerificationReport check_theorem1(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("theorem1");
  for (int n = 1; n <= n_max; ++n) {
    const RationalFunction lhs = bq(0) * f.g({n, 0}) / f.g({n, 1});
    report.add(compare(n, std::nullopt, lhs, f.cf_backward(CFSpec::generalized(n))));
  }
  return report;
}

VerificationReport check_recursion(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("recursion");
  for (int n = 1; n <= n_max; ++n) {
    std::vector<RationalFunction> gs;
    for (int s = 0; s <= n + 1; ++s) gs.push_back(f.g({n, s}));

    for (int s = 0; s <= n - 1; ++s) {
      const auto su = static_cast<std::uint32_t>(s);
      const RationalFunction lhs = bq(su) * gs[s] / gs[s + 1];
      const RationalFunction rhs = bq(su) + lq(su + 1) * gs[s + 2] / (bq(su + 1) * gs[s + 1]);
      report.add(compare(n, s, lhs, rhs));
    }

    // Iterate from the endpoint seed (1 + bq^n) g_n(n)/g_n(n+1) down to s = 0.
    const auto nu_ = static_cast<std::uint32_t>(n);
    const RationalFunction seed = bq(nu_) * gs[n] / gs[n + 1];
    RationalFunction ratio = seed;
    for (int s = n - 1; s >= 0; --s) {
      const auto su = static_cast<std::uint32_t>(s);
      ratio = bq(su) + lq(su + 1) / ratio;
    }
    report.add(compare_all(n, std::nullopt,
                           {{seed, bq(nu_)},
                            {ratio, f.cf_backward(CFSpec::generalized(n))},
                            {ratio, bq(0) * gs[0] / gs[1]}}));
  }
  return report;
}

VerificationReport check_telescoping(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("telescoping");
  for (int n = 1; n <= n_max; ++n) {
    for (int s = 0; s <= n - 1; ++s) {
      const auto su = static_cast<std::uint32_t>(s);
      const RationalFunction termwise = f.g_difference(n, s);
      const RationalFunction direct = f.g({n, s}) - f.g({n, s + 1});
      const RationalFunction closed = lq(su + 1) / (bq(su) * bq(su + 1)) * f.g({n, s + 2});
      report.add(compare_all(n, s, {{termwise, direct}, {termwise, closed}}));
    }
  }
  return report;
}

VerificationReport check_endpoints(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("endpoints");
  for (int n = 1; n <= n_max; ++n) {
    report.add(compare(n, n, f.g({n, n}), RationalFunction(1)));
    report.add(compare(n, n + 1, f.g({n, n + 1}), RationalFunction(1)));
  }
  return report;
}

VerificationReport check_b0_reduction(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("reduction");
  for (int n = 1; n <= n_max; ++n) {
    report.add(compare(n, 0, f.g({n, 0}).at_b_zero(), RationalFunction(f.mu(n))));
    report.add(compare(n, 1, f.g({n, 1}).at_b_zero(), RationalFunction(f.nu(n))));
  }
  return report;
}

VerificationReport check_asi(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("asi");
  // g_0(1) is the single k = 0 term, an empty product.
  report.add(compare(0, std::nullopt, f.asi_u(0), RationalFunction(1)));
  for (int n = 1; n <= n_max; ++n) {
    const RationalFunction rhs = f.g({n, 1}) * RationalFunction(poch(PochBase::neg_b_q_power(1), n));
    report.add(compare(n, std::nullopt, f.asi_u(n), rhs));
  }
  return report;
}

VerificationReport check_cf_oracle(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("cf_oracle");
  for (int n = 1; n <= n_max; ++n) {
    const CFSpec spec = CFSpec::generalized(n);
    const ConvergentPair last = f.cf_forward(spec).back();
    report.add(compare(n, std::nullopt, RationalFunction(last.P, last.Q), f.cf_backward(spec)));
  }
  return report;
}

VerificationReport check_determinant(int n_max, const Formulas& f) {
  require_n_max(n_max);
  VerificationReport report("determinant");
  const auto pairs = f.cf_forward(CFSpec::generalized(n_max));
  for (int j = 1; j <= n_max; ++j) {
    const auto ju = static_cast<std::uint32_t>(j);
    const Polynomial det = pairs[j].P * pairs[j - 1].Q - pairs[j - 1].P * pairs[j].Q;
    const Polynomial expected = Polynomial::term(j % 2 == 1 ? 1 : -1, {ju * (ju + 1) / 2, ju, 0});
    if (det == expected) {
      report.add({j, std::nullopt, true, std::nullopt});
    } else {
      report.add({j, std::nullopt, false, Witness{det.to_string(), expected.to_string()}});
    }
  }
  return report;
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_terms, int max_degree, int coeff_bound) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> exponent(0, static_cast<std::uint32_t>(max_degree));
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::vector<Polynomial::Term> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const Monomial m{exponent(rng), exponent(rng), exponent(rng)};
    terms.emplace_back(m, Coeff(coeff(rng)));
  }
  return Polynomial::from_terms(std::move(terms));
}

VerificationReport check_division_step(int samples, std::uint64_t seed, const Formulas& f) {
  if (samples < 1) throw InvalidRange("samples must be >= 1, got " + std::to_string(samples));
  VerificationReport report("division");
  std::mt19937_64 rng(seed);
  auto nonzero = [&rng] {
    Polynomial p;
    while (p.is_zero()) p = random_polynomial(rng, 4, 3, 9);
    return p;
  };
  for (int i = 1; i <= samples; ++i) {
    const RationalFunction N(nonzero(), nonzero());
    const RationalFunction D(nonzero(), nonzero());
    report.add(compare(i, std::nullopt, N / D, f.division_step(N, D)));
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "entry16",   "theorem1", "recursion", "telescoping", "endpoints",
      "reduction", "asi",      "cf_oracle", "determinant", "division"};
  return names;
}

VerificationReport run_suite(std::string_view name, int n_max, std::uint64_t seed,
                             const Formulas& f) {
  if (name == "entry16") return check_entry16(n_max, f);
  if (name == "theorem1") return check_theorem1(n_max, f);
  if (name == "recursion") return check_recursion(n_max, f);
  if (name == "telescoping") return check_telescoping(n_max, f);
  if (name == "endpoints") return check_endpoints(n_max, f);
  if (name == "reduction") return check_b0_reduction(n_max, f);
  if (name == "asi") return check_asi(n_max, f);
  if (name == "cf_oracle") return check_cf_oracle(n_max, f);
  if (name == "determinant") return check_determinant(n_max, f);
  if (name == "division") return check_division_step(n_max, seed, f);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::vector<VerificationReport> run_all(int n_max, std::uint64_t seed, const Formulas& f) {
  require_n_max(n_max);
  std::vector<VerificationReport> reports;
  for (const auto& name : suite_names()) {
    reports.push_back(run_suite(name, name == "division" ? 64 : n_max, seed, f));
  }
  return reports;
}

}  // namespace qcf
