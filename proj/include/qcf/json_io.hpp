#pragma once

// JSON encodings.
//
//   RationalFunction  {"num":[{"c":"<int>","q":eq,"l":el,"b":eb},...],"den":[...]}
//   VerificationReport {"suite":..., "cases":[{"n":..,"s":..|null,"pass":..,
//                       "witness":null|{"lhs":..,"rhs":..}}], "summary":{"pass":..,"fail":..}}
//   ConvergenceReport {"q":..,"lambda":..,"b":..,"series_ratio":..,"truncation_terms":..,
//                      "rows":[{"n":..,"convergent":..,"deviation":..}]}
//
// Terms are listed in ascending monomial order; coefficients are decimal strings.

#include <vector>

#include <json.hpp>

#include "qcf/numeric.hpp"
#include "qcf/polynomial.hpp"
#include "qcf/rational_function.hpp"
#include "qcf/verify.hpp"

namespace qcf {

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalFunction& r);
RationalFunction rational_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
/// Throws std::invalid_argument when the summary disagrees with the cases.
VerificationReport verification_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

nlohmann::json to_json(const ConvergenceReport& r);
ConvergenceReport convergence_report_from_json(const nlohmann::json& j);

}  // namespace qcf
