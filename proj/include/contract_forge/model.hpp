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

#ifndef CONTRACT_FORGE_MODEL_HPP_
#define CONTRACT_FORGE_MODEL_HPP_

// Domain types of the principal / producers / intermediary contracting game.
//
// A scenario is a list of producers with private productivity types plus one
// (possibly corrupt) intermediary. All types are plain values: once a
// Scenario has passed validate_scenario() it is never mutated.

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace contract_forge {

// Production cost phi(e) = a*e^2 + b*e with a > 0.
//
// b may be negative, in which case phi'(e) < 0 below e = -b / (2a).
class QuadraticCost {
 public:
  constexpr QuadraticCost() = default;
  constexpr QuadraticCost(double a, double b) : a_(a), b_(b) {}

  constexpr double a() const { return a_; }
  constexpr double b() const { return b_; }

  constexpr double phi(double e) const { return a_ * e * e + b_ * e; }
  constexpr double phi_prime(double e) const { return 2.0 * a_ * e + b_; }

  friend constexpr bool operator==(const QuadraticCost&,
                                   const QuadraticCost&) = default;

 private:
  double a_ = 1.0;
  double b_ = 0.0;
};

// Anything exposing a strictly convex phi and its derivative. The generic
// (bisection) solvers in kernel.hpp accept any CostModel; the closed forms
// are specific to QuadraticCost.
template <typename C>
concept CostModel = requires(const C& c, double e) {
  { c.phi(e) } -> std::convertible_to<double>;
  { c.phi_prime(e) } -> std::convertible_to<double>;
};

using CostFunction = QuadraticCost;

struct ProducerSpec {
  std::string name;
  double beta_f = 0.0;  // productivity, favourable state (goods / effort)
  double beta_d = 0.0;  // productivity, unfavourable state
  double p = 0.0;       // P(favourable)
  double pi = 0.0;      // P(intermediary learns the state)
  double h_min = 0.0;   // bankruptcy floor on producer payoff, <= 0
  CostFunction cost;

  // beta_d / beta_f, the mimicking ratio used by the bonus function.
  double ratio() const { return beta_d / beta_f; }

  friend bool operator==(const ProducerSpec&, const ProducerSpec&) = default;
};

struct IntermediarySpec {
  double mu = 0.0;     // share of a bribe lost to concealment costs
  double alpha = 1.0;  // producer's bargaining power; intermediary's is 1

  friend bool operator==(const IntermediarySpec&,
                         const IntermediarySpec&) = default;
};

struct Scenario {
  std::vector<ProducerSpec> producers;
  IntermediarySpec intermediary;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Violation {
  std::string field;    // e.g. "producers[0].beta_d"
  std::string message;  // e.g. "beta_d < beta_f violated"
};

// Thrown by validate_scenario() and by the scenario reader. Carries every
// violation found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Returns every invariant violation of `spec`; `path` prefixes field names.
std::vector<Violation> check_producer(const ProducerSpec& spec,
                                      std::string_view path);
std::vector<Violation> check_intermediary(const IntermediarySpec& spec,
                                          std::string_view path);

// Returns `raw` unchanged iff every invariant holds; throws ValidationError
// listing all violations otherwise.
Scenario validate_scenario(Scenario raw);

// ---------------------------------------------------------------------------
// Reports

// What the intermediary tells the principal about one producer. The
// enumerator order is the lexicographic order used by enumerate_reports().
enum class ReportEntry { kFavourable = 0, kUnfavourable = 1, kUnknown = 2 };

std::string_view to_string(ReportEntry entry);

// One entry per producer.
using ReportTriple = std::vector<ReportEntry>;

// All 3^n report tuples in lexicographic order. Throws std::invalid_argument
// for n == 0.
std::vector<ReportTriple> enumerate_reports(std::size_t n_producers);

// ---------------------------------------------------------------------------
// States

// Per-producer state probabilities:
//   1: favourable, observed    2: unfavourable, observed
//   3: favourable, unobserved  4: unfavourable, unobserved
struct StateDistribution {
  std::array<double, 4> q{};

  double sum() const { return q[0] + q[1] + q[2] + q[3]; }
};

StateDistribution state_distribution(double p, double pi);
StateDistribution state_distribution(const ProducerSpec& spec);

// ---------------------------------------------------------------------------
// Contracts and regime results

struct ContractLine {
  ReportEntry report_case = ReportEntry::kUnknown;
  double effort = 0.0;
  double producer_payoff = 0.0;
  double legal_transfer = 0.0;  // to the intermediary
};

// Report-contingent contract for one producer: one line each for the
// Favourable and Unfavourable reports, two for Unknown (favourable type
// first, then unfavourable).
struct ContractMenu {
  std::string producer;
  ContractLine favourable;
  ContractLine unfavourable;
  std::array<ContractLine, 2> unknown;

  std::vector<ContractLine> lines() const {
    return {favourable, unfavourable, unknown[0], unknown[1]};
  }
};

enum class RegimeTag {
  kCompleteInfo,
  kAsymmetricNoIntermediary,
  kIntermediaryUnlimited,
  kIntermediaryLimitedEncouragement,
  kIntermediaryLimitedExclusion,
};

std::string_view to_string(RegimeTag tag);
std::optional<RegimeTag> regime_tag_from_string(std::string_view name);

// Solver / formula events worth surfacing next to a number.
struct OutcomeFlags {
  bool shutdown = false;               // distorted effort hit the 0 corner
  bool s_bar1_clamped = false;         // raw transfer was negative
  bool s_bar2_clamped = false;
  bool participation_violated = false; // expected producer payoff < 0

  bool any() const {
    return shutdown || s_bar1_clamped || s_bar2_clamped ||
           participation_violated;
  }
};

struct ProducerOutcome {
  std::string name;
  double e_f = 0.0;  // first-best effort, favourable type
  double e_d = 0.0;  // first-best effort, unfavourable type
  double e4 = 0.0;   // effort asked of an unobserved unfavourable type
  // Producer payoffs in states 1..4 (index 0..3).
  std::array<double, 4> payoff{};
  // Funding paid to the producer for the favourable / unfavourable contract
  // under complete information.
  double s_f = 0.0;
  double s_d = 0.0;
  double s_bar1 = 0.0;  // legal transfer to intermediary on a favourable report
  double s_bar2 = 0.0;  // ... on an unfavourable report
  double s_bar1_raw = 0.0;
  double s_bar2_raw = 0.0;
  double expected_producer_payoff = 0.0;
  double principal_payoff = 0.0;
  OutcomeFlags flags;
  std::optional<ContractMenu> menu;
};

struct RegimeResult {
  RegimeTag tag = RegimeTag::kCompleteInfo;
  std::vector<ProducerOutcome> producers;
  double total_principal_payoff = 0.0;
};

}  // namespace contract_forge

#endif  // CONTRACT_FORGE_MODEL_HPP_
