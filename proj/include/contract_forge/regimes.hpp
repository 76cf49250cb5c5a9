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

#ifndef CONTRACT_FORGE_REGIMES_HPP_
#define CONTRACT_FORGE_REGIMES_HPP_

// Contracting regimes, evaluated producer by producer.
//
//   complete       the principal observes types; zero producer rent.
//   asymmetric     no intermediary; favourable types earn the bonus as
//                  information rent and the unfavourable effort is distorted.
//   intermediary   a corruptible intermediary reports; legal transfers buy
//                  truthful reports. Only asymmetric information binds.
//   limited        as above, plus external limits H1, H2 >= 0. Blackmail is
//                  either bought off (encouragement) or designed away
//                  (exclusion).
//
// The principal's objective is additively separable across producers, so a
// scenario result is the per-producer results in input order plus their sum.

#include <optional>

#include "contract_forge/kernel.hpp"
#include "contract_forge/model.hpp"

namespace contract_forge {

// How the unlimited-intermediary regime picks the distorted effort.
enum class UnlimitedEffortPolicy {
  kLimitedCondition,     // amplified multiplier, as with external limits
  kAsymmetricCondition,  // plain p / (1 - p) multiplier
};

// Payoff of an observed favourable producer in the unlimited regime. Any
// value in [h_min, H3] is an equilibrium.
enum class FavourablePayoffPolicy {
  kBankruptcyFloor,  // H1 = h_min
  kZero,             // H1 = min(0, H3), clipped at h_min from below
};

struct RegimeOptions {
  SolverOptions solver;
  UnlimitedEffortPolicy unlimited_effort =
      UnlimitedEffortPolicy::kLimitedCondition;
  FavourablePayoffPolicy unlimited_h1 = FavourablePayoffPolicy::kBankruptcyFloor;
  std::optional<double> alpha_override;
};

enum class LimitedBranch { kEncouragement, kExclusion };

std::string_view to_string(LimitedBranch branch);
RegimeTag regime_tag(LimitedBranch branch);

// Switch rule between the two anti-blackmail policies. Encouragement is
// preferred iff lhs >= rhs, with
//   lhs = (1 - mu) pi p + (1 - pi)
//   rhs = pi (1 - p) (1 - mu) / alpha.
// Both sides are returned so the choice can be audited.
struct SwitchRule {
  bool encouragement = true;
  double lhs = 0.0;
  double rhs = 0.0;

  LimitedBranch branch() const {
    return encouragement ? LimitedBranch::kEncouragement
                         : LimitedBranch::kExclusion;
  }
};

SwitchRule encouragement_preferred(double p, double pi, double mu,
                                   double alpha);

// alpha at which lhs == rhs; encouragement is preferred for alpha above it.
double switch_alpha(double p, double pi, double mu);

// Expected surplus p (beta_f e_f - phi(e_f)) + (1 - p)(beta_d e - phi(e)).
double expected_surplus(const ProducerSpec& prod, double e_f, double e);

// Per-producer evaluation. These throw SolverError when a first-best effort
// does not exist.
ProducerOutcome complete_info_outcome(const ProducerSpec& prod,
                                      const RegimeOptions& options = {});
ProducerOutcome asym_outcome(const ProducerSpec& prod,
                             const RegimeOptions& options = {});
ProducerOutcome unlimited_outcome(const ProducerSpec& prod,
                                  const IntermediarySpec& inter,
                                  const RegimeOptions& options = {});
ProducerOutcome limited_outcome(const ProducerSpec& prod,
                                const IntermediarySpec& inter,
                                LimitedBranch branch,
                                const RegimeOptions& options = {});

// Report-contingent menu from an evaluated outcome:
//   favourable report    (e_f, H1, s_bar1)
//   unfavourable report  (e_d, H2, s_bar2)
//   no report            (e_f, H3, 0) and (e4, H4, 0)
ContractMenu build_contract_menu(const ProducerOutcome& outcome);

RegimeResult eval_complete_info(const Scenario& scenario,
                                const RegimeOptions& options = {});
RegimeResult eval_asym_no_intermediary(const Scenario& scenario,
                                       const RegimeOptions& options = {});
RegimeResult eval_intermediary_unlimited(const Scenario& scenario,
                                         const RegimeOptions& options = {});
RegimeResult eval_intermediary_limited(const Scenario& scenario,
                                       LimitedBranch branch,
                                       const RegimeOptions& options = {});

// Dispatch on a regime tag.
RegimeResult eval_regime(const Scenario& scenario, RegimeTag tag,
                         const RegimeOptions& options = {});

}  // namespace contract_forge

#endif  // CONTRACT_FORGE_REGIMES_HPP_
