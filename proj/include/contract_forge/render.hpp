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

#ifndef CONTRACT_FORGE_RENDER_HPP_
#define CONTRACT_FORGE_RENDER_HPP_

// Table, CSV and JSON renderings of regime results, comparison reports and
// sweeps. Tables show 4 decimals; CSV and JSON carry full binary64
// precision (shortest round-trip form).

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "contract_forge/advisor.hpp"
#include "contract_forge/model.hpp"
#include "contract_forge/sweep.hpp"

namespace contract_forge {

enum class Format { kTable, kCsv, kJson };

std::optional<Format> format_from_string(std::string_view name);

// "shutdown;s_bar1_clamped" or "" when no flag is set.
std::string flags_string(const OutcomeFlags& flags);
std::string flags_string(const ComparisonRow& row);

// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

nlohmann::ordered_json to_json(const RegimeResult& result);
nlohmann::ordered_json to_json(const ComparisonReport& report);
nlohmann::ordered_json to_json(const SweepResult& sweep);

std::string render(std::span<const RegimeResult> results, Format format);
std::string render(const ComparisonReport& report, Format format);
std::string render(const SweepResult& sweep, Format format);

}  // namespace contract_forge

#endif  // CONTRACT_FORGE_RENDER_HPP_
