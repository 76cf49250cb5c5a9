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

#include "contract_forge/regimes.hpp"

#include <algorithm>
#include <functional>

namespace contract_forge {
namespace {

// Expected producer payoffs below this count as a participation violation.
constexpr double kParticipationSlack = 1e-12;

struct Clamped {
  double value;
  double raw;
  bool clamped;
};

Clamped clamp_transfer(double raw) {
  return raw < 0.0 ? Clamped{0.0, raw, true} : Clamped{raw, raw, false};
}

double effective_alpha(const IntermediarySpec& inter,
                       const RegimeOptions& options) {
  return options.alpha_override.value_or(inter.alpha);
}

// Fills e_f, e_d and the complete-information funding.
ProducerOutcome first_best(const ProducerSpec& prod) {
  ProducerOutcome out;
  out.name = prod.name;
  out.e_f = first_best_effort(prod.beta_f, prod.cost).effort;
  out.e_d = first_best_effort(prod.beta_d, prod.cost).effort;
  out.s_f = prod.cost.phi(out.e_f);
  out.s_d = prod.cost.phi(out.e_d);
  return out;
}

void set_distorted_effort(ProducerOutcome& out, const EffortSolution& sol) {
  out.e4 = sol.effort;
  out.flags.shutdown = sol.shutdown;
}

// Expected producer payoff under the state probabilities of a regime in
// which the intermediary observes with probability `pi`.
void set_participation(ProducerOutcome& out, double p, double pi) {
  const StateDistribution dist = state_distribution(p, pi);
  double mh = 0.0;
  for (int k = 0; k < 4; ++k) mh += dist.q[k] * out.payoff[k];
  out.expected_producer_payoff = mh;
  out.flags.participation_violated = mh < -kParticipationSlack;
}

RegimeResult assemble(
    RegimeTag tag, const Scenario& scenario,
    const std::function<ProducerOutcome(const ProducerSpec&)>& eval) {
  RegimeResult result;
  result.tag = tag;
  result.producers.reserve(scenario.producers.size());
  for (const ProducerSpec& prod : scenario.producers) {
    result.producers.push_back(eval(prod));
    result.total_principal_payoff += result.producers.back().principal_payoff;
  }
  return result;
}

}  // namespace

std::string_view to_string(LimitedBranch branch) {
  return branch == LimitedBranch::kEncouragement ? "encouragement"
                                                 : "exclusion";
}

RegimeTag regime_tag(LimitedBranch branch) {
  return branch == LimitedBranch::kEncouragement
             ? RegimeTag::kIntermediaryLimitedEncouragement
             : RegimeTag::kIntermediaryLimitedExclusion;
}

SwitchRule encouragement_preferred(double p, double pi, double mu,
                                   double alpha) {
  SwitchRule rule;
  rule.lhs = (1.0 - mu) * pi * p + (1.0 - pi);
  rule.rhs = pi * (1.0 - p) * (1.0 - mu) / alpha;
  rule.encouragement = rule.lhs >= rule.rhs;
  return rule;
}

double switch_alpha(double p, double pi, double mu) {
  return pi * (1.0 - p) * (1.0 - mu) / ((1.0 - mu) * pi * p + (1.0 - pi));
}

double expected_surplus(const ProducerSpec& prod, double e_f, double e) {
  const CostFunction& c = prod.cost;
  return prod.p * (prod.beta_f * e_f - c.phi(e_f)) +
         (1.0 - prod.p) * (prod.beta_d * e - c.phi(e));
}

ProducerOutcome complete_info_outcome(const ProducerSpec& prod,
                                      const RegimeOptions&) {
  ProducerOutcome out = first_best(prod);
  out.e4 = out.e_d;
  out.payoff = {0.0, 0.0, 0.0, 0.0};
  out.expected_producer_payoff = 0.0;
  out.principal_payoff = expected_surplus(prod, out.e_f, out.e_d);
  return out;
}

ProducerOutcome asym_outcome(const ProducerSpec& prod,
                             const RegimeOptions& options) {
  ProducerOutcome out = first_best(prod);
  set_distorted_effort(out, solve_asym_effort(prod, options.solver));

  const double theta = bonus(prod.cost, prod.ratio(), out.e4);
  const double h4 = prod.h_min;
  const double h3 = h4 + theta;
  // No report exists, so the observed states mirror the unobserved ones.
  out.payoff = {h3, h4, h3, h4};
  set_participation(out, prod.p, 0.0);
  out.principal_payoff =
      expected_surplus(prod, out.e_f, out.e4) - (prod.p * theta + h4);
  return out;
}

ProducerOutcome unlimited_outcome(const ProducerSpec& prod,
                                  const IntermediarySpec& inter,
                                  const RegimeOptions& options) {
  ProducerOutcome out = first_best(prod);
  const EffortSolution sol =
      options.unlimited_effort == UnlimitedEffortPolicy::kLimitedCondition
          ? solve_limited_effort(prod, inter.mu, options.solver)
          : solve_asym_effort(prod, options.solver);
  set_distorted_effort(out, sol);

  const double theta = bonus(prod.cost, prod.ratio(), out.e4);
  const double h4 = prod.h_min;
  const double h2 = prod.h_min;
  const double h3 = h4 + theta;
  double h1 = prod.h_min;
  if (options.unlimited_h1 == FavourablePayoffPolicy::kZero) {
    h1 = std::max(prod.h_min, std::min(0.0, h3));
  }
  out.payoff = {h1, h2, h3, h4};

  const Clamped s1 = clamp_transfer((1.0 - inter.mu) * (h3 - h1));
  out.s_bar1 = s1.value;
  out.s_bar1_raw = s1.raw;
  out.flags.s_bar1_clamped = s1.clamped;

  set_participation(out, prod.p, prod.pi);

  const double p = prod.p;
  const double informed = p * (prod.beta_f * out.e_f - prod.cost.phi(out.e_f) - h1) +
                          (1.0 - p) * (prod.beta_d * out.e_d -
                                       prod.cost.phi(out.e_d) - h2) -
                          p * out.s_bar1;
  const double uninformed =
      expected_surplus(prod, out.e_f, out.e4) - (p * theta + h4);
  out.principal_payoff = prod.pi * informed + (1.0 - prod.pi) * uninformed;
  out.menu = build_contract_menu(out);
  return out;
}

ProducerOutcome limited_outcome(const ProducerSpec& prod,
                                const IntermediarySpec& inter,
                                LimitedBranch branch,
                                const RegimeOptions& options) {
  ProducerOutcome out = first_best(prod);
  set_distorted_effort(out, solve_limited_effort(prod, inter.mu, options.solver));

  const double mu = inter.mu;
  const double alpha = effective_alpha(inter, options);
  const double p = prod.p;
  const double theta = bonus(prod.cost, prod.ratio(), out.e4);
  const double h_opt1 = expected_surplus(prod, out.e_f, out.e_d);
  const double surplus_f = prod.beta_f * out.e_f - prod.cost.phi(out.e_f);
  const double surplus_4 = prod.beta_d * out.e4 - prod.cost.phi(out.e4);

  // Encouragement keeps H4 at the floor and pays the intermediary not to
  // blackmail; exclusion lifts H4 to H2 = 0 so there is nothing to
  // blackmail about.
  const double h4 =
      branch == LimitedBranch::kEncouragement ? prod.h_min : 0.0;
  const double h3 = h4 + theta;
  out.payoff = {0.0, 0.0, h3, h4};

  const Clamped s1 = clamp_transfer((1.0 - mu) * h3);
  const Clamped s2 = branch == LimitedBranch::kEncouragement
                         ? clamp_transfer(-(1.0 / alpha) * (1.0 - mu) * prod.h_min)
                         : Clamped{0.0, 0.0, false};
  out.s_bar1 = s1.value;
  out.s_bar1_raw = s1.raw;
  out.flags.s_bar1_clamped = s1.clamped;
  out.s_bar2 = s2.value;
  out.s_bar2_raw = s2.raw;
  out.flags.s_bar2_clamped = s2.clamped;

  set_participation(out, p, prod.pi);

  const double informed = h_opt1 - (p * out.s_bar1 + (1.0 - p) * out.s_bar2);
  const double uninformed = p * (surplus_f - h3) + (1.0 - p) * (surplus_4 - h4);
  out.principal_payoff = prod.pi * informed + (1.0 - prod.pi) * uninformed;
  out.menu = build_contract_menu(out);
  return out;
}

ContractMenu build_contract_menu(const ProducerOutcome& outcome) {
  ContractMenu menu;
  menu.producer = outcome.name;
  menu.favourable = {ReportEntry::kFavourable, outcome.e_f, outcome.payoff[0],
                     outcome.s_bar1};
  menu.unfavourable = {ReportEntry::kUnfavourable, outcome.e_d,
                       outcome.payoff[1], outcome.s_bar2};
  menu.unknown[0] = {ReportEntry::kUnknown, outcome.e_f, outcome.payoff[2],
                     0.0};
  menu.unknown[1] = {ReportEntry::kUnknown, outcome.e4, outcome.payoff[3], 0.0};
  return menu;
}

RegimeResult eval_complete_info(const Scenario& scenario,
                                const RegimeOptions& options) {
  return assemble(RegimeTag::kCompleteInfo, scenario,
                  [&](const ProducerSpec& prod) {
                    return complete_info_outcome(prod, options);
                  });
}

RegimeResult eval_asym_no_intermediary(const Scenario& scenario,
                                       const RegimeOptions& options) {
  return assemble(RegimeTag::kAsymmetricNoIntermediary, scenario,
                  [&](const ProducerSpec& prod) {
                    return asym_outcome(prod, options);
                  });
}

RegimeResult eval_intermediary_unlimited(const Scenario& scenario,
                                         const RegimeOptions& options) {
  return assemble(RegimeTag::kIntermediaryUnlimited, scenario,
                  [&](const ProducerSpec& prod) {
                    return unlimited_outcome(prod, scenario.intermediary,
                                             options);
                  });
}

RegimeResult eval_intermediary_limited(const Scenario& scenario,
                                       LimitedBranch branch,
                                       const RegimeOptions& options) {
  return assemble(regime_tag(branch), scenario, [&](const ProducerSpec& prod) {
    return limited_outcome(prod, scenario.intermediary, branch, options);
  });
}

RegimeResult eval_regime(const Scenario& scenario, RegimeTag tag,
                         const RegimeOptions& options) {
  switch (tag) {
    case RegimeTag::kCompleteInfo:
      return eval_complete_info(scenario, options);
    case RegimeTag::kAsymmetricNoIntermediary:
      return eval_asym_no_intermediary(scenario, options);
    case RegimeTag::kIntermediaryUnlimited:
      return eval_intermediary_unlimited(scenario, options);
    case RegimeTag::kIntermediaryLimitedEncouragement:
      return eval_intermediary_limited(scenario, LimitedBranch::kEncouragement,
                                       options);
    case RegimeTag::kIntermediaryLimitedExclusion:
      return eval_intermediary_limited(scenario, LimitedBranch::kExclusion,
                                       options);
  }
  return {};
}

}  // namespace contract_forge
