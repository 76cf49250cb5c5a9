// Copyright 2026 The contract_forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "contract_forge/advisor.hpp"
#include "contract_forge/regimes.hpp"
#include "contract_forge/render.hpp"
#include "contract_forge/scenario_json.hpp"
#include "contract_forge/sweep.hpp"

namespace contract_forge::cli {
namespace {

struct CommonFlags {
  std::string scenario_path;
  std::string format = "table";
  std::optional<double> alpha;
  std::string method = "closed-form";
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("scenario", flags.scenario_path, "Scenario JSON file")
      ->required();
  cmd.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--alpha", flags.alpha,
                 "Override the producer's bargaining power");
  cmd.add_option("--method", flags.method, "Effort solver")
      ->check(CLI::IsMember({"closed-form", "bisection"}))
      ->capture_default_str();
}

// Builds regime options from flags and the environment. Throws
// ValidationError on bad values.
RegimeOptions regime_options(const CommonFlags& flags) {
  RegimeOptions options;
  std::vector<Violation> violations;
  if (flags.alpha) {
    if (!std::isfinite(*flags.alpha) || !(*flags.alpha > 0.0)) {
      violations.push_back({"--alpha", "alpha > 0 violated"});
    } else {
      options.alpha_override = flags.alpha;
    }
  }
  if (flags.method == "bisection") {
    options.solver.method = SolveMethod::kBisection;
  }
  if (const char* tol = std::getenv(kToleranceEnv); tol != nullptr) {
    char* end = nullptr;
    const double value = std::strtod(tol, &end);
    if (end == tol || *end != '\0' || !std::isfinite(value) || !(value > 0.0)) {
      violations.push_back(
          {kToleranceEnv, "must be a positive finite number"});
    } else {
      options.solver.tolerance = value;
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return options;
}

Format output_format(const CommonFlags& flags) {
  return format_from_string(flags.format).value_or(Format::kTable);
}

std::vector<RegimeResult> solve_regimes(const Scenario& scenario,
                                        const std::string& regime,
                                        const RegimeOptions& options) {
  static const std::map<std::string, std::vector<RegimeTag>> kSelectors = {
      {"complete", {RegimeTag::kCompleteInfo}},
      {"asymmetric", {RegimeTag::kAsymmetricNoIntermediary}},
      {"intermediary", {RegimeTag::kIntermediaryUnlimited}},
      {"intermediary-limited",
       {RegimeTag::kIntermediaryLimitedEncouragement,
        RegimeTag::kIntermediaryLimitedExclusion}},
      {"all",
       {RegimeTag::kCompleteInfo, RegimeTag::kAsymmetricNoIntermediary,
        RegimeTag::kIntermediaryUnlimited,
        RegimeTag::kIntermediaryLimitedEncouragement,
        RegimeTag::kIntermediaryLimitedExclusion}},
  };
  std::vector<RegimeResult> results;
  for (RegimeTag tag : kSelectors.at(regime)) {
    results.push_back(eval_regime(scenario, tag, options));
  }
  return results;
}

void print_violations(const ValidationError& e, std::ostream& err) {
  err << "validation failed:\n";
  for (const Violation& v : e.violations()) {
    err << "  " << v.field << ": " << v.message << "\n";
  }
}

bool any_failed(const ComparisonReport& report) {
  for (const ComparisonRow& row : report.rows) {
    if (row.failed) return true;
  }
  return false;
}

void report_failures(const ComparisonReport& report, std::ostream& err) {
  for (const ComparisonRow& row : report.rows) {
    if (row.failed) err << "solver failure for " << row.producer << ": "
                        << row.error << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Corruption-free contract schemes between a principal, producers and "
      "an intermediary",
      "contract-forge"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::string regime = "all";
  CLI::App* solve = app.add_subcommand("solve", "Solve one or all regimes");
  add_common(*solve, solve_flags);
  solve->add_option("--regime", regime, "Regime to solve")
      ->check(CLI::IsMember(
          {"complete", "asymmetric", "intermediary", "intermediary-limited",
           "all"}))
      ->capture_default_str();

  CommonFlags compare_flags;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Compare regimes and recommend");
  add_common(*compare_cmd, compare_flags);

  CommonFlags sweep_flags;
  SweepSpec spec;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter");
  add_common(*sweep, sweep_flags);
  sweep->add_option("--param", spec.param,
                    "intermediary.mu, intermediary.alpha, producers[k].pi, "
                    "producers[k].p or producers[k].h_min")
      ->required();
  sweep->add_option("--from", spec.from, "First grid value")->required();
  sweep->add_option("--to", spec.to, "Last grid value")->required();
  sweep->add_option("--steps", spec.steps, "Number of grid points (>= 2)")
      ->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("contract-forge");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const CommonFlags& flags = solve->parsed()     ? solve_flags
                             : compare_cmd->parsed() ? compare_flags
                                                     : sweep_flags;
  try {
    const RegimeOptions options = regime_options(flags);
    const Scenario scenario = load_scenario(flags.scenario_path);
    const Format format = output_format(flags);

    if (solve->parsed()) {
      const std::vector<RegimeResult> results =
          solve_regimes(scenario, regime, options);
      out << render(results, format);
      return kExitOk;
    }
    if (compare_cmd->parsed()) {
      const ComparisonReport report = compare(scenario, options);
      out << render(report, format);
      report_failures(report, err);
      return any_failed(report) ? kExitSolver : kExitOk;
    }
    const SweepResult result = run_sweep(scenario, spec, options);
    out << render(result, format);
    bool failed = false;
    for (const SweepPoint& point : result.points) {
      if (!point.valid) {
        err << "grid point " << point.index << " invalid: " << point.error
            << "\n";
      }
      failed = failed || (point.valid && any_failed(point.report));
    }
    return failed ? kExitSolver : kExitOk;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    print_violations(e, err);
    return kExitValidation;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace contract_forge::cli
