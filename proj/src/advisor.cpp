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

#include "contract_forge/advisor.hpp"

#include <algorithm>
#include <numeric>

namespace contract_forge {
namespace {

constexpr double kCoverTolerance = 1e-9;

ComparisonRow compare_producer(const ProducerSpec& prod,
                               const IntermediarySpec& inter,
                               const RegimeOptions& options) {
  ComparisonRow row;
  row.producer = prod.name;

  const ProducerOutcome complete = complete_info_outcome(prod, options);
  const ProducerOutcome asym = asym_outcome(prod, options);
  const ProducerOutcome enc =
      limited_outcome(prod, inter, LimitedBranch::kEncouragement, options);
  const ProducerOutcome exc =
      limited_outcome(prod, inter, LimitedBranch::kExclusion, options);

  const double alpha = options.alpha_override.value_or(inter.alpha);
  row.h_opt1 = complete.principal_payoff;
  row.h_opt2 = asym.principal_payoff;
  row.h_lim_encouragement = enc.principal_payoff;
  row.h_lim_exclusion = exc.principal_payoff;
  row.switch_rule = encouragement_preferred(prod.p, prod.pi, inter.mu, alpha);

  if (row.h_lim_encouragement > row.h_lim_exclusion) {
    row.branch = LimitedBranch::kEncouragement;
  } else if (row.h_lim_exclusion > row.h_lim_encouragement) {
    row.branch = LimitedBranch::kExclusion;
  } else {
    row.branch = row.switch_rule.branch();
  }
  row.branch_disagreement = row.branch != row.switch_rule.branch();

  const ProducerOutcome& chosen =
      row.branch == LimitedBranch::kEncouragement ? enc : exc;
  row.h_lim = chosen.principal_payoff;
  row.rent_delta = row.h_opt1 - row.h_opt2;
  row.intermediary_delta = row.h_lim - row.h_opt2;
  row.recommendation = row.h_lim > row.h_opt2
                           ? Recommendation::kUseIntermediary
                           : Recommendation::kDirectContract;
  row.asym_flags = asym.flags;
  row.limited_flags = chosen.flags;
  row.corruption = corruption_exposure(*chosen.menu, inter.mu, alpha);
  return row;
}

}  // namespace

std::string_view to_string(Recommendation rec) {
  return rec == Recommendation::kUseIntermediary ? "use_intermediary"
                                                 : "direct_contract";
}

CorruptionDiagnostics corruption_exposure(const ContractMenu& menu, double mu,
                                          double alpha) {
  const double h1 = menu.favourable.producer_payoff;
  const double h2 = menu.unfavourable.producer_payoff;
  const double h3 = menu.unknown[0].producer_payoff;
  const double h4 = menu.unknown[1].producer_payoff;

  CorruptionDiagnostics out;
  out.bribe_incentive = std::max(0.0, h3 - h1);
  out.blackmail_exposure = std::max(0.0, h2 - h4);
  out.max_rational_bribe = out.bribe_incentive;
  out.intermediary_bribe_value = (1.0 - mu) * out.max_rational_bribe;
  out.intermediary_blackmail_value = (1.0 - mu) * out.blackmail_exposure;
  out.bribe_covered = menu.favourable.legal_transfer >=
                      out.intermediary_bribe_value - kCoverTolerance;
  out.blackmail_covered = alpha * menu.unfavourable.legal_transfer >=
                          out.intermediary_blackmail_value - kCoverTolerance;
  return out;
}

ComparisonReport compare(const Scenario& scenario,
                         const RegimeOptions& options) {
  ComparisonReport report;
  report.mu = scenario.intermediary.mu;
  report.alpha = options.alpha_override.value_or(scenario.intermediary.alpha);
  report.rows.reserve(scenario.producers.size());
  for (const ProducerSpec& prod : scenario.producers) {
    try {
      report.rows.push_back(
          compare_producer(prod, scenario.intermediary, options));
    } catch (const SolverError& e) {
      ComparisonRow failed;
      failed.producer = prod.name;
      failed.failed = true;
      failed.error = e.what();
      report.rows.push_back(std::move(failed));
      continue;
    }
    const ComparisonRow& row = report.rows.back();
    report.total_h_opt1 += row.h_opt1;
    report.total_h_opt2 += row.h_opt2;
    report.total_h_lim += row.h_lim;
    report.total_best += row.best_contribution();
  }
  report.ranking = rank_producers(report);
  return report;
}

std::vector<std::string> rank_producers(const ComparisonReport& report) {
  std::vector<std::size_t> order(report.rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     const ComparisonRow& a = report.rows[i];
                     const ComparisonRow& b = report.rows[j];
                     if (a.failed != b.failed) return !a.failed;
                     if (a.failed) return false;
                     return a.best_contribution() > b.best_contribution();
                   });
  std::vector<std::string> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(report.rows[i].producer);
  return out;
}

}  // namespace contract_forge
