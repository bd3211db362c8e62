#include "surprise/cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "surprise/analysis.hpp"
#include "surprise/csv.hpp"
#include "surprise/decision_tree.hpp"
#include "surprise/errors.hpp"
#include "surprise/figures.hpp"
#include "surprise/oracle.hpp"
#include "surprise/scenarios.hpp"
#include "surprise/tree_file.hpp"

namespace surprise::cli {

namespace {

// Bad input that CLI11 cannot see, e.g. a malformed --param.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  return value;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, double> params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    params[key] = parse_number(item.substr(eq + 1), "--param " + key);
  }
  return params;
}

struct EvalArgs {
  std::string tree;
  double r = 0.0;
  double k = 0.0;
  std::optional<double> status_quo;
};

struct ScenarioEvalArgs {
  std::string name;
  std::vector<std::string> params;
  double r = 0.0;
  double k = 0.0;
};

struct SweepArgs {
  std::string scenario;
  std::vector<std::string> params;
  std::string option_a;
  std::string option_b;
  double r_min = 0.0, r_max = 0.0, k_min = 0.0, k_max = 0.0;
  std::size_t r_steps = 0, k_steps = 0;
  std::string out;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  const DecisionTree tree = io::parse_tree_file(a.tree);
  const SurpriseSpec spec = SurpriseSpec::power(a.r, a.k);
  const double value = a.status_quo ? with_status_quo(tree, spec, *a.status_quo)
                                    : surprise_tree(tree, spec);
  out << io::format_decimal(value) << '\n';
  return kSuccess;
}

int run_scenario_list(std::ostream& out) {
  for (const auto& info : scenarios::catalog()) {
    out << info.name;
    for (const auto& [key, value] : info.defaults) {
      out << ' ' << key << '=' << io::format_decimal(value);
    }
    out << "  " << info.summary << '\n';
  }
  return kSuccess;
}

int run_scenario_eval(const ScenarioEvalArgs& a, std::ostream& out) {
  const Scenario s = scenarios::make_scenario(a.name, parse_params(a.params));
  const SurpriseSpec spec = SurpriseSpec::power(a.r, a.k);
  out << "option,delta,expected\n";
  for (const auto& option : s.options()) {
    out << option.label << ',' << io::format_decimal(surprise_tree(option.tree, spec))
        << ',' << io::format_decimal(annotate(option.tree).expectation) << '\n';
  }
  const auto& first = s.options()[0];
  const auto& second = s.options()[1];
  const auto pref = analysis::preference(first.tree, second.tree, spec);
  out << "verdict," << analysis::verdict_code(pref.verdict) << ',';
  switch (pref.verdict) {
    case analysis::Verdict::A: out << first.label; break;
    case analysis::Verdict::B: out << second.label; break;
    case analysis::Verdict::Indifferent: out << "indifferent"; break;
  }
  out << '\n';
  return kSuccess;
}

int run_sweep(const SweepArgs& a) {
  if (a.r_steps == 0 || a.k_steps == 0) {
    throw UsageError("--r-steps and --k-steps must be positive");
  }
  const Scenario s = scenarios::make_scenario(a.scenario, parse_params(a.params));
  const auto map = analysis::region_map(
      s, a.option_a, a.option_b, analysis::linspace(a.k_min, a.k_max, a.k_steps),
      analysis::linspace(a.r_min, a.r_max, a.r_steps));
  io::emit_csv(io::region_map_table(map), a.out);
  return kSuccess;
}

int run_verify(const std::string& grid, std::ostream& out) {
  const auto kind = grid == "fine" ? oracle::GridKind::Fine : oracle::GridKind::Coarse;
  const auto report = oracle::verify_appendices(kind);
  out << oracle::format_report(report);
  return report.passed() ? kSuccess : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Evaluate risky options by anticipated surprise", "surprise"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Surprise value of a JSON tree file");
  eval_cmd->add_option("--tree", eval.tree, "Tree file")->required();
  eval_cmd->add_option("--r", eval.r, "Exponent of f(z) = z^r")->required();
  eval_cmd->add_option("--k", eval.k, "Loss multiplier")->required();
  eval_cmd->add_option("--status-quo", eval.status_quo, "Reference outcome");

  auto* scenario_cmd = app.add_subcommand("scenario", "Built-in decision problems");
  scenario_cmd->require_subcommand(1);
  auto* list_cmd = scenario_cmd->add_subcommand("list", "Scenario names and defaults");
  ScenarioEvalArgs sc;
  auto* sc_eval_cmd = scenario_cmd->add_subcommand("eval", "Evaluate each option");
  sc_eval_cmd->add_option("--name", sc.name, "Scenario name")->required();
  sc_eval_cmd->add_option("--param", sc.params, "Parameter override key=value");
  sc_eval_cmd->add_option("--r", sc.r, "Exponent of f(z) = z^r")->required();
  sc_eval_cmd->add_option("--k", sc.k, "Loss multiplier")->required();

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Region map over a (k, r) grid");
  sweep_cmd->add_option("--scenario", sw.scenario, "Scenario name")->required();
  sweep_cmd->add_option("--param", sw.params, "Parameter override key=value");
  sweep_cmd->add_option("--option-a", sw.option_a)->required();
  sweep_cmd->add_option("--option-b", sw.option_b)->required();
  sweep_cmd->add_option("--r-min", sw.r_min)->required();
  sweep_cmd->add_option("--r-max", sw.r_max)->required();
  sweep_cmd->add_option("--r-steps", sw.r_steps)->required();
  sweep_cmd->add_option("--k-min", sw.k_min)->required();
  sweep_cmd->add_option("--k-max", sw.k_max)->required();
  sweep_cmd->add_option("--k-steps", sw.k_steps)->required();
  sweep_cmd->add_option("--out", sw.out, "CSV path")->required();

  std::string figure_id;
  std::string figure_out;
  auto* figure_cmd = app.add_subcommand("figure", "Figure data at default parameters");
  figure_cmd->add_option("--id", figure_id)
      ->required()
      ->check(CLI::IsMember(io::figure_ids()));
  figure_cmd->add_option("--out", figure_out, "CSV path")->required();

  std::string grid = "coarse";
  auto* verify_cmd = app.add_subcommand("verify", "Run the inequality suite");
  verify_cmd->add_option("--grid", grid)->check(CLI::IsMember({"coarse", "fine"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*eval_cmd) return run_eval(eval, out);
    if (*list_cmd) return run_scenario_list(out);
    if (*sc_eval_cmd) return run_scenario_eval(sc, out);
    if (*sweep_cmd) return run_sweep(sw);
    if (*figure_cmd) {
      io::emit_csv(io::figure_table(figure_id), figure_out);
      return kSuccess;
    }
    if (*verify_cmd) return run_verify(grid, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    // Tree files, scenario parameters, labels, grids and output paths.
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace surprise::cli
