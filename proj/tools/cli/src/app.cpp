#include "gw/cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "gw/brst.hpp"
#include "gw/cli/expr.hpp"
#include "gw/cli/serialize.hpp"
#include "gw/cli/suites.hpp"
#include "gw/vertex.hpp"

namespace gw::cli {

namespace {

struct Options {
  bool json = false;
  std::string out_path;

  std::string lambda = "2";
  std::string expr_a;
  std::string expr_b;
  int circle_n = 0;

  int jmax = 0;
  int imin = -2;
  int imax = 4;

  std::string suite;
  std::optional<int> kmax;
  std::optional<std::string> verify_lambda;
  std::uint64_t seed = SuiteOptions{}.seed;
  int cases = SuiteOptions{}.cases;

  int nmax = 0;
};

Scalar lambda_value(const std::string& text) {
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--lambda: " + std::string(e.what()));
  }
}

State evaluate(const std::string& text, const Scalar& lambda) {
  return eval(parse(text), GradingScheme{lambda, 2, 1});
}

// Prints the JSON document when --json is set and writes it to --out.
void emit(const Options& o, std::ostream& out, const nlohmann::json& doc, const std::string& text) {
  if (o.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw std::runtime_error("cannot write " + o.out_path);
    file << doc.dump(2) << '\n';
  }
}

int cmd_ope(const Options& o, std::ostream& out) {
  const Scalar lambda = lambda_value(o.lambda);
  const auto poles = ope_singular(evaluate(o.expr_a, lambda), evaluate(o.expr_b, lambda));
  std::ostringstream text;
  if (poles.empty()) text << "regular\n";
  for (auto it = poles.rbegin(); it != poles.rend(); ++it) {
    text << "(z-w)^-" << it->first + 1 << ": " << to_string(it->second) << '\n';
  }
  emit(o, out, ope_to_json(poles), text.str());
  return 0;
}

int cmd_circle(const Options& o, std::ostream& out) {
  const Scalar lambda = lambda_value(o.lambda);
  const State value = circle(evaluate(o.expr_a, lambda), o.circle_n, evaluate(o.expr_b, lambda));
  emit(o, out, state_to_json(value), to_string(value) + "\n");
  return 0;
}

int expected_dim(int bc, int) { return bc == 0 || bc == 1 ? 1 : 0; }

int cmd_dims(const Options& o, std::ostream& out) {
  if (o.jmax < 0) throw UsageError("--jmax must be nonnegative");
  if (o.imin > o.imax) throw UsageError("--imin exceeds --imax");
  const Scalar lambda = lambda_value(o.lambda);
  const BrstContext ctx = brst_context(lambda);
  if (ctx.central_charge != 26) {
    throw UsageError("Q does not square to zero at lambda " + to_string(lambda) + " (central charge " +
                     to_string(ctx.central_charge) + ")");
  }
  const WeilComplex complex(ctx);
  const CohomologyTable table = complex.cohomology_table(o.imin, o.imax, o.jmax);

  bool matches = true;
  std::ostringstream text;
  text << "dim H^{i,j}, weight 0\n" << std::setw(6) << "j\\i";
  for (int i = o.imin; i <= o.imax; ++i) text << std::setw(4) << i;
  text << '\n';
  for (int j = 0; j <= o.jmax; ++j) {
    text << std::setw(6) << j;
    for (int i = o.imin; i <= o.imax; ++i) {
      const int dim = table.at({i, j}).dim;
      matches = matches && dim == expected_dim(i, j);
      text << std::setw(4) << dim;
    }
    text << '\n';
  }
  text << (matches ? "matches" : "DOES NOT match") << " the expected table (1 at i = 0, 1; 0 elsewhere) on this window\n";
  emit(o, out, dims_to_json(table), text.str());
  return matches ? 0 : 1;
}

nlohmann::json check_json(const Check& c) {
  nlohmann::json j = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
  if (c.lhs) j["lhs"] = c.lhs->json;
  if (c.rhs) j["rhs"] = c.rhs->json;
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions options;
  if (o.verify_lambda) options.lambda = lambda_value(*o.verify_lambda);
  options.kmax = o.kmax;
  options.seed = o.seed;
  options.cases = o.cases;
  const auto reports = run_suite(o.suite, options);

  bool all_passed = true;
  nlohmann::json suites = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& report : reports) {
    all_passed = all_passed && report.passed();
    int passed = 0;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
      passed += c.passed ? 1 : 0;
      checks.push_back(check_json(c));
    }
    text << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << report.checks.size()
         << " checks)\n";
    for (const auto& c : report.checks) {
      text << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) text << ": " << c.detail;
      text << '\n';
    }
    if (const Check* bad = report.first_failure()) {
      text << "  first failure: " << bad->name << '\n';
      if (bad->lhs) text << "    lhs: " << bad->lhs->text << '\n';
      if (bad->rhs) text << "    rhs: " << bad->rhs->text << '\n';
    }
    suites.push_back({{"suite", report.suite}, {"passed", report.passed()}, {"checks", std::move(checks)}});
  }
  emit(o, out, {{"passed", all_passed}, {"suites", std::move(suites)}}, text.str());
  return all_passed ? 0 : 1;
}

int cmd_bracket_table(const Options& o, std::ostream& out) {
  const auto table = bracket_table(o.nmax);
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& row : table) {
    rows.push_back({{"family", row.family},
                    {"n", row.n},
                    {"m", row.m},
                    {"computed", to_string(row.computed)},
                    {"expected", to_string(row.expected)}});
    const bool odd_target = row.family == "yx^n,yx^m";
    std::string lhs = row.family;
    lhs.replace(lhs.find("^n"), 2, "^" + std::to_string(row.n));
    lhs.replace(lhs.find("^m"), 2, "^" + std::to_string(row.m));
    const std::string target = row.family == "x^n,x^m" ? "0"
                                                       : (odd_target ? "yx^" : "x^") + std::to_string(row.n + row.m);
    text << "{" << lhs << "} = " << to_string(row.computed) << (row.family == "x^n,x^m" ? "" : " " + target)
         << "   expected " << to_string(row.expected) << (row.computed == row.expected ? "" : "   MISMATCH") << '\n';
  }
  emit(o, out, {{"brackets", std::move(rows)}}, text.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symbolic bc / beta-gamma ghost vertex algebra engine and semi-infinite Weil complex prover", "ghostweil"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_option("--out", o.out_path, "Also write the JSON document to this file");

  auto* ope = app.add_subcommand("ope", "Singular part of the OPE of two field expressions");
  ope->add_option("A", o.expr_a)->required();
  ope->add_option("B", o.expr_b)->required();
  ope->add_option("--lambda", o.lambda, "lambda of the beta-gamma system used by J");

  auto* circ = app.add_subcommand("circle", "One circle product A o_n B");
  circ->add_option("n", o.circle_n)->required();
  circ->add_option("A", o.expr_a)->required();
  circ->add_option("B", o.expr_b)->required();
  circ->add_option("--lambda", o.lambda, "lambda of the beta-gamma system used by J");

  auto* weil = app.add_subcommand("weil", "Semi-infinite Weil complex of the Virasoro algebra");
  weil->require_subcommand(1);
  weil->fallthrough();
  auto* dims = weil->add_subcommand("dims", "Table of dim H^{i,j} on the weight-zero subcomplex");
  dims->add_option("--jmax", o.jmax, "Largest beta-gamma ghost number j")->required();
  dims->add_option("--imin", o.imin, "Smallest bc ghost number i (default -2)");
  dims->add_option("--imax", o.imax, "Largest bc ghost number i (default 4)");
  dims->add_option("--lambda", o.lambda, "lambda of the beta-gamma system (default 2)");

  auto* verify = weil->add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--kmax", o.kmax, "Degree bound of the suite (suite-specific default)");
  verify->add_option("--lambda", o.verify_lambda, "Single lambda for virasoro / anomaly; other suites need 2");
  verify->add_option("--seed", o.seed, "Seed for the sampled identities");
  verify->add_option("--cases", o.cases, "Number of sampled triples for the identities suite");

  auto* table = weil->add_subcommand("bracket-table", "Computed bracket structure constants");
  table->add_option("--nmax", o.nmax, "Largest n and m")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (ope->parsed()) return cmd_ope(o, out);
    if (circ->parsed()) return cmd_circle(o, out);
    if (dims->parsed()) return cmd_dims(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_bracket_table(o, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
    return 2;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace gw::cli
