#include "qcf/json_io.hpp"

#include <stdexcept>

namespace qcf {

using nlohmann::json;

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"c", to_string(c)}, {"q", m.eq}, {"l", m.el}, {"b", m.eb}});
  }
  return terms;
}

Polynomial polynomial_from_json(const json& j) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : j) {
    Coeff c(t.at("c").get<std::string>());
    c.canonicalize();
    terms.emplace_back(Monomial{t.at("q").get<std::uint32_t>(), t.at("l").get<std::uint32_t>(),
                                t.at("b").get<std::uint32_t>()},
                       std::move(c));
  }
  return Polynomial::from_terms(std::move(terms));
}

json to_json(const RationalFunction& r) {
  return {{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

RationalFunction rational_function_from_json(const json& j) {
  return RationalFunction(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

json to_json(const VerificationReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases()) {
    json w = nullptr;
    if (c.witness) w = {{"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
    cases.push_back({{"n", c.n},
                     {"s", c.s ? json(*c.s) : json(nullptr)},
                     {"pass", c.pass},
                     {"witness", w}});
  }
  return {{"suite", r.suite()},
          {"cases", cases},
          {"summary", {{"pass", r.passed()}, {"fail", r.failed()}}}};
}

VerificationReport verification_report_from_json(const json& j) {
  VerificationReport report(j.at("suite").get<std::string>());
  for (const auto& c : j.at("cases")) {
    CaseResult result{c.at("n").get<int>(), std::nullopt, c.at("pass").get<bool>(), std::nullopt};
    if (!c.at("s").is_null()) result.s = c.at("s").get<int>();
    if (!c.at("witness").is_null()) {
      result.witness = Witness{c.at("witness").at("lhs").get<std::string>(),
                               c.at("witness").at("rhs").get<std::string>()};
    }
    report.add(std::move(result));
  }
  const auto& summary = j.at("summary");
  if (summary.at("pass").get<int>() != report.passed() ||
      summary.at("fail").get<int>() != report.failed()) {
    throw std::invalid_argument("report summary does not match its cases");
  }
  return report;
}

json to_json(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

json to_json(const ConvergenceReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n}, {"convergent", row.convergent}, {"deviation", row.deviation}});
  }
  return {{"q", r.q},
          {"lambda", r.lambda},
          {"b", r.b},
          {"series_ratio", r.series_ratio},
          {"truncation_terms", r.truncation_terms},
          {"rows", rows}};
}

ConvergenceReport convergence_report_from_json(const json& j) {
  ConvergenceReport r{j.at("q").get<double>(),
                      j.at("lambda").get<double>(),
                      j.at("b").get<double>(),
                      j.at("series_ratio").get<double>(),
                      j.at("truncation_terms").get<int>(),
                      {}};
  for (const auto& row : j.at("rows")) {
    r.rows.push_back({row.at("n").get<int>(), row.at("convergent").get<double>(),
                      row.at("deviation").get<double>()});
  }
  return r;
}

}  // namespace qcf
