#pragma once

// Sparse polynomials in the three indeterminates q, l (lambda) and b with
// arbitrary-precision rational coefficients.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qcf {

using Coeff = mpq_class;

/// q^eq * l^el * b^eb. Ordered lexicographically with precedence q, l, b.
struct Monomial {
  std::uint32_t eq = 0;
  std::uint32_t el = 0;
  std::uint32_t eb = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const {
    return {eq + o.eq, el + o.el, eb + o.eb};
  }
  bool divides(const Monomial& o) const {
    return eq <= o.eq && el <= o.el && eb <= o.eb;
  }
  // Requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    return {o.eq - eq, o.el - el, o.eb - eb};
  }
  bool is_one() const { return eq == 0 && el == 0 && eb == 0; }
};

class Polynomial {
 public:
  using Term = std::pair<Monomial, Coeff>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor): integer literals
  explicit Polynomial(const Coeff& c);

  static Polynomial term(const Coeff& c, Monomial m);
  /// Canonicalizes: sorts, merges repeated monomials, drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  static Polynomial q(std::uint32_t e = 1) { return term(1, {e, 0, 0}); }
  static Polynomial lambda(std::uint32_t e = 1) { return term(1, {0, e, 0}); }
  static Polynomial b(std::uint32_t e = 1) { return term(1, {0, 0, e}); }

  /// Terms in ascending monomial order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }
  bool has_integer_coefficients() const;

  Coeff coefficient(const Monomial& m) const;
  /// Highest monomial in the lex order. Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.back(); }

  std::uint32_t degree_q() const;
  std::uint32_t degree_lambda() const;
  std::uint32_t degree_b() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& o) { return a += o; }
  friend Polynomial operator-(Polynomial a, const Polynomial& o) { return a -= o; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& o);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial scaled(const Coeff& c) const;
  Polynomial pow(unsigned e) const;

  /// Substitutes b = 0.
  Polynomial at_b_zero() const;

  /// Floating-point evaluation; Horner in q over precomputed powers of l, b.
  double evaluate(double q, double lambda, double b) const;

  /// Canonical text: terms in ascending monomial order joined by " + ",
  /// each `<coef>*q^e*l^e*b^e` with unit coefficient and exponents elided.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Returns c with c * d == a, or nullopt when d does not divide a.
/// Throws DivisionByZero for d == 0.
std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& d);

/// As try_exact_div but throws NotDivisible on a nonzero remainder.
Polynomial exact_div(const Polynomial& a, const Polynomial& d);

/// 1 - q^j, for j >= 1.
Polynomial one_minus_q_pow(std::uint32_t j);
/// 1 + b q^j, for j >= 0.
Polynomial one_plus_b_q_pow(std::uint32_t j);

/// Exact tests for divisibility by the structured factors above, in time
/// linear in the number of terms (no division performed).
bool divisible_by_one_minus_q_pow(const Polynomial& p, std::uint32_t j);
bool divisible_by_one_plus_b_q_pow(const Polynomial& p, std::uint32_t j);

std::string to_string(const Coeff& c);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace qcf
