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

#ifndef CONTRACT_FORGE_SCENARIO_JSON_HPP_
#define CONTRACT_FORGE_SCENARIO_JSON_HPP_

// Scenario documents:
//
//   {"producers": [{"name": "F1", "beta_f": 20, "beta_d": 10, "p": 0.5,
//                   "pi": 0.6, "h_min": -3,
//                   "cost": {"type": "quadratic", "a": 1, "b": 0}}, ...],
//    "intermediary": {"mu": 0.4, "alpha": 1.0}}
//
// Every key is required and unknown keys are rejected.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "contract_forge/model.hpp"

namespace contract_forge {

// The file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses and validates a scenario document. Malformed JSON, schema errors
// and invariant violations all surface as ValidationError.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

nlohmann::ordered_json scenario_to_json(const Scenario& scenario);

}  // namespace contract_forge

#endif  // CONTRACT_FORGE_SCENARIO_JSON_HPP_
