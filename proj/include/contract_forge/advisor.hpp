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

#ifndef CONTRACT_FORGE_ADVISOR_HPP_
#define CONTRACT_FORGE_ADVISOR_HPP_

// Regime comparison and the hire-the-intermediary recommendation.

#include <string>
#include <string_view>
#include <vector>

#include "contract_forge/model.hpp"
#include "contract_forge/regimes.hpp"

namespace contract_forge {

enum class Recommendation { kUseIntermediary, kDirectContract };

std::string_view to_string(Recommendation rec);

struct CorruptionDiagnostics {
  double bribe_incentive = 0.0;     // max(0, H3 - H1)
  double blackmail_exposure = 0.0;  // max(0, H2 - H4)
  // A producer never pays more than it saves by concealment.
  double max_rational_bribe = 0.0;
  // What that bribe is worth to the intermediary after concealment costs.
  double intermediary_bribe_value = 0.0;
  double intermediary_blackmail_value = 0.0;
  bool bribe_covered = true;      // s_bar1 >= (1 - mu) * bribe_incentive
  bool blackmail_covered = true;  // alpha * s_bar2 >= (1 - mu) * exposure
  bool corruption_free() const { return bribe_covered && blackmail_covered; }
};

// Reads H1..H4 and the legal transfers off a menu. `alpha` scales the
// blackmail cover: with bargaining power alpha the minimal cover is
// (1 - mu) * exposure / alpha.
CorruptionDiagnostics corruption_exposure(const ContractMenu& menu, double mu,
                                          double alpha = 1.0);

struct ComparisonRow {
  std::string producer;
  bool failed = false;
  std::string error;

  double h_opt1 = 0.0;  // complete information
  double h_opt2 = 0.0;  // asymmetric, no intermediary
  double h_lim_encouragement = 0.0;
  double h_lim_exclusion = 0.0;
  double h_lim = 0.0;   // better of the two limited branches
  double rent_delta = 0.0;          // h_opt1 - h_opt2
  double intermediary_delta = 0.0;  // h_lim - h_opt2

  LimitedBranch branch = LimitedBranch::kEncouragement;  // argmax branch
  SwitchRule switch_rule;
  // The payoff-maximizing branch differs from the switch rule's choice.
  // Only happens when a transfer clamp bites.
  bool branch_disagreement = false;
  Recommendation recommendation = Recommendation::kDirectContract;

  OutcomeFlags asym_flags;
  OutcomeFlags limited_flags;  // of the chosen branch
  CorruptionDiagnostics corruption;  // of the chosen branch's menu

  // Principal's payoff under the recommended arrangement.
  double best_contribution() const {
    return recommendation == Recommendation::kUseIntermediary ? h_lim : h_opt2;
  }
  bool deviation() const {
    return branch_disagreement || asym_flags.any() || limited_flags.any();
  }
};

struct ComparisonReport {
  double mu = 0.0;
  double alpha = 1.0;
  std::vector<ComparisonRow> rows;
  // Sums over rows that did not fail.
  double total_h_opt1 = 0.0;
  double total_h_opt2 = 0.0;
  double total_h_lim = 0.0;
  double total_best = 0.0;
  std::vector<std::string> ranking;
};

// Runs every regime for each producer. A producer whose solve fails gets a
// failed row; the others are unaffected.
ComparisonReport compare(const Scenario& scenario,
                         const RegimeOptions& options = {});

// Producer names by descending best_contribution(); ties keep input order
// and failed rows go last.
std::vector<std::string> rank_producers(const ComparisonReport& report);

}  // namespace contract_forge

#endif  // CONTRACT_FORGE_ADVISOR_HPP_
