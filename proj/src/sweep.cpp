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

#include "contract_forge/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <thread>

#include <fmt/format.h>

namespace contract_forge {

std::optional<ParamPath> ParamPath::parse(std::string_view text) {
  if (text == "intermediary.mu") return ParamPath{Field::kMu, 0};
  if (text == "intermediary.alpha") return ParamPath{Field::kAlpha, 0};

  constexpr std::string_view kPrefix = "producers[";
  if (!text.starts_with(kPrefix)) return std::nullopt;
  text.remove_prefix(kPrefix.size());
  const std::size_t close = text.find("].");
  if (close == std::string_view::npos || close == 0) return std::nullopt;

  std::size_t index = 0;
  const char* first = text.data();
  const char* last = text.data() + close;
  const auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last) return std::nullopt;

  const std::string_view name = text.substr(close + 2);
  if (name == "pi") return ParamPath{Field::kPi, index};
  if (name == "p") return ParamPath{Field::kP, index};
  if (name == "h_min") return ParamPath{Field::kHMin, index};
  return std::nullopt;
}

std::string ParamPath::to_string() const {
  switch (field) {
    case Field::kMu:
      return "intermediary.mu";
    case Field::kAlpha:
      return "intermediary.alpha";
    case Field::kPi:
      return fmt::format("producers[{}].pi", producer);
    case Field::kP:
      return fmt::format("producers[{}].p", producer);
    case Field::kHMin:
      return fmt::format("producers[{}].h_min", producer);
  }
  return {};
}

ParamPath validate_sweep(const SweepSpec& spec, const Scenario& scenario) {
  std::vector<Violation> violations;
  const std::optional<ParamPath> path = ParamPath::parse(spec.param);
  if (!path) {
    violations.push_back(
        {"param", fmt::format("unknown sweep parameter '{}'", spec.param)});
  } else if (path->field != ParamPath::Field::kMu &&
             path->field != ParamPath::Field::kAlpha &&
             path->producer >= scenario.producers.size()) {
    violations.push_back(
        {"param", fmt::format("producer index {} out of range (scenario has {})",
                              path->producer, scenario.producers.size())});
  }
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to)) {
    violations.push_back({"from/to", "sweep bounds must be finite"});
  } else if (!(spec.from < spec.to)) {
    violations.push_back({"from/to", "from < to violated"});
  }
  if (spec.steps < 2) {
    violations.push_back({"steps", "steps >= 2 violated"});
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return *path;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> grid(static_cast<std::size_t>(spec.steps));
  const double width = spec.to - spec.from;
  const double last = static_cast<double>(spec.steps - 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = spec.from + width * (static_cast<double>(i) / last);
  }
  grid.back() = spec.to;
  return grid;
}

Scenario with_param(Scenario scenario, const ParamPath& path, double value) {
  switch (path.field) {
    case ParamPath::Field::kMu:
      scenario.intermediary.mu = value;
      break;
    case ParamPath::Field::kAlpha:
      scenario.intermediary.alpha = value;
      break;
    case ParamPath::Field::kPi:
      scenario.producers.at(path.producer).pi = value;
      break;
    case ParamPath::Field::kP:
      scenario.producers.at(path.producer).p = value;
      break;
    case ParamPath::Field::kHMin:
      scenario.producers.at(path.producer).h_min = value;
      break;
  }
  return scenario;
}

SweepResult run_sweep(const Scenario& scenario, const SweepSpec& spec,
                      const RegimeOptions& options) {
  const ParamPath path = validate_sweep(spec, scenario);
  const std::vector<double> grid = sweep_grid(spec);

  // The swept parameter wins over any alpha override.
  RegimeOptions point_options = options;
  Scenario base = scenario;
  if (point_options.alpha_override) {
    base.intermediary.alpha = *point_options.alpha_override;
    point_options.alpha_override.reset();
  }

  SweepResult result;
  result.spec = spec;
  result.points.resize(grid.size());

  // Grid points are independent; a fixed pool fills its slots in place.
  auto evaluate = [&](std::size_t i) {
    SweepPoint& point = result.points[i];
    point.index = i;
    point.value = grid[i];
    try {
      const Scenario s = validate_scenario(with_param(base, path, grid[i]));
      point.report = compare(s, point_options);
    } catch (const ValidationError& e) {
      point.valid = false;
      point.error = e.what();
    }
  };
  const std::size_t workers = std::min<std::size_t>(
      grid.size(), std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < grid.size(); i += workers) evaluate(i);
      });
    }
  }

  std::map<std::string, LimitedBranch> last_branch;
  for (const SweepPoint& point : result.points) {
    if (!point.valid) continue;
    for (const ComparisonRow& row : point.report.rows) {
      if (row.failed) continue;
      const LimitedBranch branch = row.switch_rule.branch();
      auto it = last_branch.find(row.producer);
      if (it != last_branch.end() && it->second != branch) {
        result.switch_points.push_back(
            {row.producer, point.index, point.value, it->second, branch});
      }
      last_branch[row.producer] = branch;
    }
  }
  return result;
}

}  // namespace contract_forge
