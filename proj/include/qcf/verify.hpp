#pragma once

// Exact identity checks over parameter ranges. Each check returns a report
// with one case per parameter point; failures carry the two cross-products
// that differed.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qcf/polynomial.hpp"
#include "qcf/ramanujan.hpp"
#include "qcf/rational_function.hpp"

namespace qcf {

struct Witness {
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CaseResult {
  int n;
  std::optional<int> s;
  bool pass;
  std::optional<Witness> witness;

  friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void add(CaseResult c);

  const std::string& suite() const { return suite_; }
  const std::vector<CaseResult>& cases() const { return cases_; }
  int passed() const { return passed_; }
  int failed() const { return failed_; }
  bool all_passed() const { return failed_ == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

 private:
  std::string suite_;
  std::vector<CaseResult> cases_;
  int passed_ = 0;
  int failed_ = 0;
};

/// The formulas a check calls. Defaults are the library implementations;
/// tests swap individual entries to confirm that each check can fail.
struct Formulas {
  std::function<Polynomial(int)> mu = [](int n) { return qcf::mu(n); };
  std::function<Polynomial(int)> nu = [](int n) { return qcf::nu(n); };
  std::function<RationalFunction(GnParams)> g = [](GnParams p) { return qcf::g(p); };
  std::function<RationalFunction(int, int)> g_difference = [](int n, int s) {
    return qcf::g_difference(n, s);
  };
  std::function<RationalFunction(const CFSpec&)> cf_backward = [](const CFSpec& spec) {
    return qcf::cf_finite_backward(spec);
  };
  std::function<std::vector<ConvergentPair>(const CFSpec&)> cf_forward = [](const CFSpec& spec) {
    return qcf::cf_convergents_forward(spec);
  };
  std::function<RationalFunction(int)> asi_u = [](int n) { return qcf::asi_u(n); };
  /// Right-hand side of N/D = 1 + (N - D)/D.
  std::function<RationalFunction(const RationalFunction&, const RationalFunction&)> division_step =
      [](const RationalFunction& N, const RationalFunction& D) {
        return RationalFunction(1) + (N - D) / D;
      };
};

/// Names accepted by corrupted_formulas.
const std::vector<std::string>& fault_names();

/// Formulas with one entry deliberately broken: "mu" (mu(3) + l), "nu" (nu(3) + l q^5),
/// "g" (every g_2(s) + l^2 q^7), "g_difference" (at (2, 0)), "cf_backward" (depth 2),
/// "cf_forward" (P_2), "asi" (U_2), "division". Throws std::invalid_argument otherwise.
Formulas corrupted_formulas(std::string_view target);

/// mu(n)/nu(n) against the b = 0 continued fraction, n = 1..n_max.
VerificationReport check_entry16(int n_max, const Formulas& f = {});
/// (1 + b) g_n(0)/g_n(1) against the depth-n continued fraction.
VerificationReport check_theorem1(int n_max, const Formulas& f = {});
/// (1 + bq^s) g_n(s)/g_n(s+1) = 1 + bq^s + lq^{s+1}/((1 + bq^{s+1}) g_n(s+1)/g_n(s+2))
/// for 0 <= s <= n-1, plus one case per n (s = null) that iterates this
/// recursion from the endpoint seed down to s = 0 and compares with the
/// continued fraction.
VerificationReport check_recursion(int n_max, const Formulas& f = {});
/// g_n(s) - g_n(s+1) = lq^{s+1}/((1 + bq^s)(1 + bq^{s+1})) g_n(s+2), with the
/// termwise difference compared against both sides.
VerificationReport check_telescoping(int n_max, const Formulas& f = {});
/// g_n(n) = 1 = g_n(n+1).
VerificationReport check_endpoints(int n_max, const Formulas& f = {});
/// g_n(0) = mu(n) and g_n(1) = nu(n) at b = 0 (cases s = 0 and s = 1).
VerificationReport check_b0_reduction(int n_max, const Formulas& f = {});
/// U_n(1; bq, -lq^2) = g_n(1) (-bq;q)_n for n = 0..n_max.
VerificationReport check_asi(int n_max, const Formulas& f = {});
/// P_n/Q_n from the forward recurrence against the backward evaluation.
VerificationReport check_cf_oracle(int n_max, const Formulas& f = {});
/// P_j Q_{j-1} - P_{j-1} Q_j = (-1)^{j-1} l^j q^{j(j+1)/2}, j = 1..n_max.
VerificationReport check_determinant(int n_max, const Formulas& f = {});
/// N/D = 1 + (N - D)/D on seeded random rational functions.
VerificationReport check_division_step(int samples, std::uint64_t seed, const Formulas& f = {});

/// Every check above; division uses 64 samples. Throws InvalidRange for n_max < 1.
std::vector<VerificationReport> run_all(int n_max, std::uint64_t seed = 0, const Formulas& f = {});

/// Names accepted by run_suite, in run_all order.
const std::vector<std::string>& suite_names();

/// Runs one named check ("entry16", "theorem1", ...). For "division", n_max is
/// the sample count. Throws std::invalid_argument for unknown names.
VerificationReport run_suite(std::string_view name, int n_max, std::uint64_t seed = 0,
                             const Formulas& f = {});

/// Up to max_terms random terms with exponents in [0, max_degree] and
/// coefficients in [-coeff_bound, coeff_bound].
Polynomial random_polynomial(std::mt19937_64& rng, int max_terms, int max_degree, int coeff_bound);

}  // namespace qcf
