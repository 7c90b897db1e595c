// qcf: construct, verify and numerically evaluate the convergents of
//   1 + lq/(1 + bq) + lq^2/(1 + bq^2) + lq^3/(1 + bq^3) + ...
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcf/errors.hpp"
#include "qcf/json_io.hpp"
#include "qcf/numeric.hpp"
#include "qcf/ramanujan.hpp"
#include "qcf/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "text";
  std::string path;

  int emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot open " << path << " for writing\n";
      return kExitUsage;
    }
    out << text;
    return kExitOk;
  }
};

void add_output_flags(CLI::App* cmd, Output& out, std::vector<std::string> formats) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Write output to this file instead of stdout");
}

std::string render(const qcf::RationalFunction& r, const std::string& format) {
  if (format == "json") return qcf::to_json(r).dump() + "\n";
  return r.to_string() + "\n";
}

std::string render_text(const qcf::VerificationReport& r) {
  std::ostringstream out;
  out << r.suite() << ": " << r.passed() << "/" << r.cases().size() << " pass";
  if (r.failed() > 0) out << ", " << r.failed() << " FAIL";
  out << "\n";
  for (const auto& c : r.cases()) {
    if (c.pass) continue;
    out << "  FAIL n=" << c.n;
    if (c.s) out << " s=" << *c.s;
    out << "\n";
    if (c.witness) {
      out << "    lhs: " << c.witness->lhs << "\n";
      out << "    rhs: " << c.witness->rhs << "\n";
    }
  }
  return out.str();
}

std::string render_text(const qcf::ConvergenceReport& r) {
  char line[128];
  std::string out;
  std::snprintf(line, sizeof line, "q = %.17g, lambda = %.17g, b = %.17g\n", r.q, r.lambda, r.b);
  out += line;
  std::snprintf(line, sizeof line, "series ratio = %.17g (terms: %d)\n", r.series_ratio,
                r.truncation_terms);
  out += line;
  std::snprintf(line, sizeof line, "%4s  %-24s  %s\n", "n", "convergent", "deviation");
  out += line;
  for (const auto& row : r.rows) {
    std::snprintf(line, sizeof line, "%4d  %-24.17g  %.6e\n", row.n, row.convergent, row.deviation);
    out += line;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact convergents of Ramanujan's generalized Rogers-Ramanujan continued fraction"};
  app.require_subcommand(1);

  // convergent
  int conv_n = 0;
  Output conv_out;
  auto* conv = app.add_subcommand("convergent", "Print the n-th convergent as a rational function");
  conv->add_option("--n", conv_n, "Depth n >= 1")->required()->check(CLI::PositiveNumber);
  add_output_flags(conv, conv_out, {"text", "json"});

  // series
  std::string which;
  int series_n = 0;
  int series_s = 0;
  Output series_out;
  auto* series = app.add_subcommand("series", "Print mu(n), nu(n), g_n(s) or U_n(1; bq, -lq^2)");
  series->add_option("--which", which, "Object to build")
      ->required()
      ->check(CLI::IsMember({"mu", "nu", "g", "asi"}));
  series->add_option("--n", series_n, "Index n")->required();
  series->add_option("--s", series_s, "Shift s for g (0 <= s <= n+1)")->capture_default_str();
  add_output_flags(series, series_out, {"text", "json"});

  // verify
  std::string suite = "all";
  int n_max = 10;
  int samples = 64;
  std::uint64_t seed = 0;
  std::string fault;
  Output verify_out;
  std::vector<std::string> suites = qcf::suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run exact identity checks");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember(suites))
      ->capture_default_str();
  verify->add_option("--n-max", n_max, "Largest n checked")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--samples", samples, "Random samples for the division suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--inject-fault", fault, "Corrupt one formula (self-test of the checks)")
      ->check(CLI::IsMember(qcf::fault_names()));
  add_output_flags(verify, verify_out, {"text", "json"});

  // eval
  double q = 0.0;
  double lambda = 1.0;
  double b = 0.0;
  int eval_n_max = 10;
  int k_terms = 50;
  Output eval_out;
  auto* eval = app.add_subcommand("eval", "Tabulate numeric convergents against the series ratio");
  eval->add_option("--q", q, "q with |q| < 1")->required();
  eval->add_option("--lambda", lambda, "lambda")->capture_default_str();
  eval->add_option("--b", b, "b")->capture_default_str();
  eval->add_option("--n-max", eval_n_max, "Largest depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--k", k_terms, "Series truncation K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flags(eval, eval_out, {"text", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*conv) {
      return conv_out.emit(render(qcf::convergent(conv_n), conv_out.format));
    }
    if (*series) {
      qcf::RationalFunction r;
      if (which == "mu") {
        r = qcf::mu(series_n);
      } else if (which == "nu") {
        r = qcf::nu(series_n);
      } else if (which == "g") {
        r = qcf::g({series_n, series_s});
      } else {
        r = qcf::asi_u(series_n);
      }
      return series_out.emit(render(r, series_out.format));
    }
    if (*verify) {
      const qcf::Formulas f = fault.empty() ? qcf::Formulas{} : qcf::corrupted_formulas(fault);
      std::vector<qcf::VerificationReport> reports;
      if (suite == "all") {
        reports = qcf::run_all(n_max, seed, f);
      } else {
        reports.push_back(qcf::run_suite(suite, suite == "division" ? samples : n_max, seed, f));
      }
      bool ok = true;
      std::string text;
      for (const auto& r : reports) {
        ok = ok && r.all_passed();
        if (verify_out.format == "text") text += render_text(r);
      }
      if (verify_out.format == "json") {
        text = (reports.size() == 1 ? qcf::to_json(reports.front()) : qcf::to_json(reports)).dump() + "\n";
      }
      const int rc = verify_out.emit(text);
      if (rc != kExitOk) return rc;
      return ok ? kExitOk : kExitFail;
    }
    if (*eval) {
      const qcf::NumericPoint pt(q, lambda, b);
      const auto report = qcf::convergence_demo(pt, eval_n_max, k_terms);
      std::string text;
      if (eval_out.format == "json") {
        text = qcf::to_json(report).dump() + "\n";
      } else if (eval_out.format == "csv") {
        text = report.to_csv();
      } else {
        text = render_text(report);
      }
      return eval_out.emit(text);
    }
  } catch (const qcf::InvalidRange& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qcf::NonConvergent& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qcf::NumericBreakdown& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
