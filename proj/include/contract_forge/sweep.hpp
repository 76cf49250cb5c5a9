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

#ifndef CONTRACT_FORGE_SWEEP_HPP_
#define CONTRACT_FORGE_SWEEP_HPP_

// One-parameter comparative statics over a scenario.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contract_forge/advisor.hpp"
#include "contract_forge/model.hpp"

namespace contract_forge {

// Which scenario parameter a sweep moves.
struct ParamPath {
  enum class Field { kMu, kAlpha, kPi, kP, kHMin };

  Field field = Field::kMu;
  std::size_t producer = 0;  // only for producer fields

  // Accepts intermediary.mu, intermediary.alpha and producers[k].{pi,p,h_min}.
  static std::optional<ParamPath> parse(std::string_view text);
  std::string to_string() const;
};

struct SweepSpec {
  std::string param;
  double from = 0.0;
  double to = 1.0;
  int steps = 2;
};

struct SweepPoint {
  std::size_t index = 0;
  double value = 0.0;
  bool valid = true;
  std::string error;  // validation message for invalid points
  ComparisonReport report;
};

// A grid point where a producer's switch-rule branch differs from the
// branch at the previous valid grid point.
struct SwitchPoint {
  std::string producer;
  std::size_t index = 0;
  double value = 0.0;
  LimitedBranch from = LimitedBranch::kExclusion;
  LimitedBranch to = LimitedBranch::kEncouragement;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepPoint> points;
  std::vector<SwitchPoint> switch_points;
};

// Throws ValidationError if the spec is malformed or names a producer the
// scenario lacks.
ParamPath validate_sweep(const SweepSpec& spec, const Scenario& scenario);

// Evenly spaced grid from `from` to `to` inclusive.
std::vector<double> sweep_grid(const SweepSpec& spec);

// Copy of `scenario` with one parameter replaced; not validated.
Scenario with_param(Scenario scenario, const ParamPath& path, double value);

// Evaluates compare() at every grid point. Points whose modified scenario
// fails validation are kept and marked invalid.
SweepResult run_sweep(const Scenario& scenario, const SweepSpec& spec,
                      const RegimeOptions& options = {});

}  // namespace contract_forge

#endif  // CONTRACT_FORGE_SWEEP_HPP_
