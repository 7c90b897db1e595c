#include "qcf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <tuple>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

bool is_integer(const Coeff& c) { return c.get_den() == 1; }

// Product through a dense accumulator over the exponent box. Both operands
// must have integer coefficients.
std::vector<Polynomial::Term> dense_integer_product(const Polynomial& a, const Polynomial& b,
                                                    std::size_t dl, std::size_t db,
                                                    std::size_t cells) {
  std::vector<mpz_class> acc(cells);
  std::vector<bool> touched(cells, false);
  for (const auto& [ma, ca] : a.terms()) {
    const mpz_class& za = ca.get_num();
    for (const auto& [mb, cb] : b.terms()) {
      const Monomial m = ma * mb;
      const std::size_t idx = (static_cast<std::size_t>(m.eq) * dl + m.el) * db + m.eb;
      mpz_addmul(acc[idx].get_mpz_t(), za.get_mpz_t(), cb.get_num().get_mpz_t());
      touched[idx] = true;
    }
  }
  std::vector<Polynomial::Term> out;
  for (std::size_t idx = 0; idx < cells; ++idx) {
    if (!touched[idx] || acc[idx] == 0) continue;
    Monomial m;
    m.eb = static_cast<std::uint32_t>(idx % db);
    m.el = static_cast<std::uint32_t>((idx / db) % dl);
    m.eq = static_cast<std::uint32_t>(idx / (db * dl));
    out.emplace_back(m, Coeff(acc[idx]));
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Coeff(c));
}

Polynomial::Polynomial(const Coeff& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Polynomial Polynomial::term(const Coeff& c, Monomial m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return is_integer(t.second); });
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::uint32_t Polynomial::degree_q() const {
  return terms_.empty() ? 0 : terms_.back().first.eq;
}

std::uint32_t Polynomial::degree_lambda() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.el);
  return d;
}

std::uint32_t Polynomial::degree_b() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.eb);
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      merged.push_back(*j++);
    } else {
      Coeff c = i->second + j->second;
      if (c != 0) merged.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].first.is_one() && a.terms_[0].second == 1) return b;
  if (b.size() == 1 && b.terms_[0].first.is_one() && b.terms_[0].second == 1) return a;

  const std::size_t dq = std::size_t{a.degree_q()} + b.degree_q() + 1;
  const std::size_t dl = std::size_t{a.degree_lambda()} + b.degree_lambda() + 1;
  const std::size_t db = std::size_t{a.degree_b()} + b.degree_b() + 1;
  const std::size_t cells = dq * dl * db;
  const std::size_t pairs = a.size() * b.size();

  Polynomial out;
  if (a.has_integer_coefficients() && b.has_integer_coefficients() &&
      cells <= 8 * pairs + 4096 && cells <= (std::size_t{1} << 24)) {
    out.terms_ = dense_integer_product(a, b, dl, db, cells);
    return out;
  }
  std::map<Monomial, Coeff> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  }
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.emplace_back(m, std::move(c));
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::at_b_zero() const {
  Polynomial p;
  for (const auto& t : terms_) {
    if (t.first.eb == 0) p.terms_.push_back(t);
  }
  return p;
}

double Polynomial::evaluate(double q, double lambda, double b) const {
  if (terms_.empty()) return 0.0;
  std::vector<double> lpow(degree_lambda() + 1, 1.0);
  std::vector<double> bpow(degree_b() + 1, 1.0);
  for (std::size_t i = 1; i < lpow.size(); ++i) lpow[i] = lpow[i - 1] * lambda;
  for (std::size_t i = 1; i < bpow.size(); ++i) bpow[i] = bpow[i - 1] * b;

  // Walk q-exponent groups from the top down.
  double acc = 0.0;
  std::uint32_t prev_eq = terms_.back().first.eq;
  auto it = terms_.rbegin();
  while (it != terms_.rend()) {
    const std::uint32_t eq = it->first.eq;
    double group = 0.0;
    for (; it != terms_.rend() && it->first.eq == eq; ++it) {
      group += it->second.get_d() * lpow[it->first.el] * bpow[it->first.eb];
    }
    acc = acc * std::pow(q, static_cast<double>(prev_eq - eq)) + group;
    prev_eq = eq;
  }
  return acc * std::pow(q, static_cast<double>(prev_eq));
}

std::string to_string(const Coeff& c) { return c.get_str(); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m.is_one()) {
      out += qcf::to_string(c);
      continue;
    }
    if (c == -1) {
      out += "-";
    } else if (c != 1) {
      out += qcf::to_string(c) + "*";
    }
    std::string factors;
    auto put = [&factors](const char* sym, std::uint32_t e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "*";
      factors += sym;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    put("q", m.eq);
    put("l", m.el);
    put("b", m.eb);
    out += factors;
  }
  return out;
}

std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& d) {
  if (d.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  if (a.is_zero()) return Polynomial{};
  if (d.is_constant()) return a.scaled(1 / d.terms()[0].second);

  const auto& [dm, dc] = d.leading_term();
  std::map<Monomial, Coeff> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.first, t.second);

  std::vector<Polynomial::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!dm.divides(top->first)) return std::nullopt;
    const Monomial qm = dm.quotient_of(top->first);
    const Coeff qc = top->second / dc;
    for (const auto& [m, c] : d.terms()) {
      auto [it, inserted] = rem.try_emplace(qm * m, 0);
      it->second -= qc * c;
      if (it->second == 0) rem.erase(it);
    }
    quotient.emplace_back(qm, qc);
  }
  std::reverse(quotient.begin(), quotient.end());
  return Polynomial::from_terms(std::move(quotient));
}

Polynomial exact_div(const Polynomial& a, const Polynomial& d) {
  auto c = try_exact_div(a, d);
  if (!c) throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + d.to_string() + ")");
  return std::move(*c);
}

Polynomial one_minus_q_pow(std::uint32_t j) { return Polynomial(1) - Polynomial::q(j); }

Polynomial one_plus_b_q_pow(std::uint32_t j) {
  return Polynomial(1) + Polynomial::term(1, {j, 0, 1});
}

// p is divisible by 1 - q^j iff p reduces to zero modulo q^j = 1, i.e. every
// residue class of q-exponents mod j sums to zero for each (l, b) exponent pair.
bool divisible_by_one_minus_q_pow(const Polynomial& p, std::uint32_t j) {
  if (j == 0) return false;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Coeff> sums;
  for (const auto& [m, c] : p.terms()) sums[{m.el, m.eb, m.eq % j}] += c;
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

// 1 + b q^j is primitive and linear in b, so it divides p iff p vanishes under
// b -> -q^{-j} (as a Laurent polynomial in q).
bool divisible_by_one_plus_b_q_pow(const Polynomial& p, std::uint32_t j) {
  std::map<std::pair<std::uint32_t, std::int64_t>, Coeff> sums;
  for (const auto& [m, c] : p.terms()) {
    const std::int64_t qexp = std::int64_t{m.eq} - std::int64_t{j} * m.eb;
    auto& s = sums[{m.el, qexp}];
    if (m.eb % 2 == 0) {
      s += c;
    } else {
      s -= c;
    }
  }
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace qcf
