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

#include "contract_forge/model.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include <fmt/format.h>

namespace contract_forge {
namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid scenario:";
  for (const Violation& v : violations) {
    out += fmt::format(" [{}: {}]", v.field, v.message);
  }
  return out;
}

std::string field(std::string_view path, std::string_view name) {
  return fmt::format("{}.{}", path, name);
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)),
      violations_(std::move(violations)) {}

std::vector<Violation> check_producer(const ProducerSpec& spec,
                                      std::string_view path) {
  std::vector<Violation> out;
  auto add = [&](std::string_view name, std::string message) {
    out.push_back({field(path, name), std::move(message)});
  };

  if (spec.name.empty()) add("name", "name must be non-empty");

  const std::pair<std::string_view, double> numbers[] = {
      {"beta_f", spec.beta_f}, {"beta_d", spec.beta_d}, {"p", spec.p},
      {"pi", spec.pi},         {"h_min", spec.h_min},   {"cost.a", spec.cost.a()},
      {"cost.b", spec.cost.b()}};
  bool finite = true;
  for (const auto& [name, value] : numbers) {
    if (!std::isfinite(value)) {
      add(name, "must be finite");
      finite = false;
    }
  }
  if (!finite) return out;

  if (!(spec.beta_d > 0.0)) add("beta_d", "beta_d > 0 violated");
  if (!(spec.beta_d < spec.beta_f)) add("beta_d", "beta_d < beta_f violated");
  if (!(spec.p > 0.0 && spec.p < 1.0)) add("p", "0 < p < 1 violated");
  if (spec.pi == 1.0) {
    add("pi", "pi = 1 unsupported (singularity in the limited-regime effort "
              "condition, which divides by 1 - pi)");
  } else if (!(spec.pi >= 0.0 && spec.pi < 1.0)) {
    add("pi", "0 <= pi < 1 violated");
  }
  if (!(spec.h_min <= 0.0)) add("h_min", "h_min <= 0 violated");
  if (!(spec.cost.a() > 0.0)) {
    add("cost.a", "a > 0 violated (cost must be strictly convex)");
  }
  return out;
}

std::vector<Violation> check_intermediary(const IntermediarySpec& spec,
                                          std::string_view path) {
  std::vector<Violation> out;
  if (!std::isfinite(spec.mu) || !(spec.mu >= 0.0 && spec.mu <= 1.0)) {
    out.push_back({field(path, "mu"), "0 <= mu <= 1 violated"});
  }
  if (!std::isfinite(spec.alpha) || !(spec.alpha > 0.0)) {
    out.push_back({field(path, "alpha"), "alpha > 0 violated"});
  }
  return out;
}

Scenario validate_scenario(Scenario raw) {
  std::vector<Violation> violations;
  if (raw.producers.empty()) {
    violations.push_back({"producers", "at least one producer required"});
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < raw.producers.size(); ++i) {
    const ProducerSpec& prod = raw.producers[i];
    const std::string path = fmt::format("producers[{}]", i);
    for (Violation& v : check_producer(prod, path)) {
      violations.push_back(std::move(v));
    }
    if (!prod.name.empty() && !names.insert(prod.name).second) {
      violations.push_back({field(path, "name"),
                            fmt::format("duplicate producer name '{}'",
                                        prod.name)});
    }
  }
  for (Violation& v : check_intermediary(raw.intermediary, "intermediary")) {
    violations.push_back(std::move(v));
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return raw;
}

std::string_view to_string(ReportEntry entry) {
  switch (entry) {
    case ReportEntry::kFavourable:
      return "favourable";
    case ReportEntry::kUnfavourable:
      return "unfavourable";
    case ReportEntry::kUnknown:
      return "unknown";
  }
  return "?";
}

std::vector<ReportTriple> enumerate_reports(std::size_t n_producers) {
  if (n_producers == 0) {
    throw std::invalid_argument("enumerate_reports: need at least one producer");
  }
  std::vector<ReportTriple> out;
  ReportTriple current(n_producers, ReportEntry::kFavourable);
  // Odometer over base 3; the last producer varies fastest.
  while (true) {
    out.push_back(current);
    std::size_t k = n_producers;
    while (k > 0) {
      --k;
      int digit = static_cast<int>(current[k]) + 1;
      if (digit < 3) {
        current[k] = static_cast<ReportEntry>(digit);
        break;
      }
      current[k] = ReportEntry::kFavourable;
      if (k == 0) return out;
    }
  }
}

StateDistribution state_distribution(double p, double pi) {
  return StateDistribution{
      {p * pi, (1.0 - p) * pi, p * (1.0 - pi), (1.0 - p) * (1.0 - pi)}};
}

StateDistribution state_distribution(const ProducerSpec& spec) {
  return state_distribution(spec.p, spec.pi);
}

std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::kCompleteInfo:
      return "complete";
    case RegimeTag::kAsymmetricNoIntermediary:
      return "asymmetric";
    case RegimeTag::kIntermediaryUnlimited:
      return "intermediary";
    case RegimeTag::kIntermediaryLimitedEncouragement:
      return "intermediary-limited-encouragement";
    case RegimeTag::kIntermediaryLimitedExclusion:
      return "intermediary-limited-exclusion";
  }
  return "?";
}

std::optional<RegimeTag> regime_tag_from_string(std::string_view name) {
  for (RegimeTag tag :
       {RegimeTag::kCompleteInfo, RegimeTag::kAsymmetricNoIntermediary,
        RegimeTag::kIntermediaryUnlimited,
        RegimeTag::kIntermediaryLimitedEncouragement,
        RegimeTag::kIntermediaryLimitedExclusion}) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

}  // namespace contract_forge
