#include "qcf/rational_function.hpp"

#include <ostream>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

void cancel_structured_factors(Polynomial& num, Polynomial& den) {
  if (den.is_constant() || num.is_zero()) return;
  const std::uint32_t jmax = den.degree_q();
  // Largest j first: the q-Pochhammer products that reach this point are
  // products of distinct factors, and peeling the largest one off keeps the
  // remaining denominator a product of the same shape.
  if (den.degree_b() > 0) {
    for (std::uint32_t j = jmax + 1; j-- > 0;) {
      while (divisible_by_one_plus_b_q_pow(den, j) && divisible_by_one_plus_b_q_pow(num, j)) {
        const Polynomial f = one_plus_b_q_pow(j);
        den = exact_div(den, f);
        num = exact_div(num, f);
      }
    }
  }
  for (std::uint32_t j = den.degree_q(); j >= 1; --j) {
    while (j <= den.degree_q() && divisible_by_one_minus_q_pow(den, j) &&
           divisible_by_one_minus_q_pow(num, j)) {
      const Polynomial f = one_minus_q_pow(j);
      den = exact_div(den, f);
      num = exact_div(num, f);
    }
  }
}

void reduce_content(Polynomial& num, Polynomial& den) {
  mpz_class lcm_den = 1;
  mpz_class gcd_num = 0;
  for (const Polynomial* p : {&num, &den}) {
    for (const auto& [m, c] : p->terms()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num().get_mpz_t());
    }
  }
  Coeff scale(lcm_den, gcd_num);
  scale.canonicalize();
  // Sign anchor: den's coefficient at its smallest monomial.
  if (den.terms().front().second < 0) scale = -scale;
  if (scale != 1) {
    num = num.scaled(scale);
    den = den.scaled(scale);
  }
}

}  // namespace

std::pair<Polynomial, Polynomial> normalize(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return {Polynomial{}, Polynomial(1)};
  cancel_structured_factors(num, den);
  reduce_content(num, den);
  return {std::move(num), std::move(den)};
}

RationalFunction::RationalFunction(Polynomial p) : den_(1) {
  if (!p.is_zero()) std::tie(num_, den_) = normalize(std::move(p), Polynomial(1));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  std::tie(num_, den_) = normalize(std::move(num), std::move(den));
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
  if (!den_.is_constant()) return std::nullopt;
  return num_.scaled(1 / den_.terms()[0].second);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::pair<Polynomial, Polynomial> cross_products(const RationalFunction& a,
                                                 const RationalFunction& b) {
  return {a.num() * b.den(), b.num() * a.den()};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto [lhs, rhs] = cross_products(a, b);
  return lhs == rhs;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
  return os << r.to_string();
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) { return a == b; }

RationalFunction RationalFunction::at_b_zero() const {
  return RationalFunction(num_.at_b_zero(), den_.at_b_zero());
}

double RationalFunction::evaluate(double q, double lambda, double b) const {
  return num_.evaluate(q, lambda, b) / den_.evaluate(q, lambda, b);
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qcf
