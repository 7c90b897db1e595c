#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qcf/polynomial.hpp"

namespace qcf {

/// num/den over Q[q, l, b], kept in a normal form:
///  - factors (1 - q^j) and (1 + b q^j) common to num and den are cancelled
///    (j bounded by the q-degree of den); no general gcd is taken;
///  - num and den have integer coefficients with joint content 1;
///  - den's coefficient at its smallest monomial is positive.
/// The form is not canonical, so equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p);                 // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// The polynomial value when den is a constant.
  std::optional<Polynomial> as_polynomial() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& o) { return a += o; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& o) { return a -= o; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& o) { return a *= o; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& o) { return a /= o; }
  RationalFunction operator-() const;

  /// Cross-multiplicative equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  RationalFunction at_b_zero() const;
  double evaluate(double q, double lambda, double b) const;

  /// `num` when den == 1, otherwise `(num)/(den)`.
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

bool rf_equal(const RationalFunction& a, const RationalFunction& b);

/// The two cross-products num(a)*den(b) and num(b)*den(a).
std::pair<Polynomial, Polynomial> cross_products(const RationalFunction& a,
                                                 const RationalFunction& b);

/// Brings a (num, den) pair into the normal form described on RationalFunction.
/// Throws DivisionByZero when den is zero.
std::pair<Polynomial, Polynomial> normalize(Polynomial num, Polynomial den);

}  // namespace qcf
