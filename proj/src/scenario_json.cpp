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

#include "contract_forge/scenario_json.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

#include <fmt/format.h>

namespace contract_forge {
namespace {

using json = nlohmann::json;

// Collects schema problems while walking the document so the caller sees
// all of them at once.
class SchemaReader {
 public:
  bool object(const json& node, std::string_view path,
              std::initializer_list<std::string_view> keys) {
    if (!node.is_object()) {
      fail(path, "expected an object");
      return false;
    }
    for (const auto& [key, value] : node.items()) {
      bool known = false;
      for (std::string_view k : keys) known = known || (k == key);
      if (!known) fail(join(path, key), "unknown key");
    }
    bool complete = true;
    for (std::string_view k : keys) {
      if (!node.contains(k)) {
        fail(join(path, k), "missing required key");
        complete = false;
      }
    }
    return complete;
  }

  double number(const json& node, std::string_view path,
                std::string_view key) {
    const json& value = node.at(key);
    if (!value.is_number()) {
      fail(join(path, key), "expected a number");
      return 0.0;
    }
    return value.get<double>();
  }

  std::string string(const json& node, std::string_view path,
                     std::string_view key) {
    const json& value = node.at(key);
    if (!value.is_string()) {
      fail(join(path, key), "expected a string");
      return {};
    }
    return value.get<std::string>();
  }

  void fail(std::string_view path, std::string message) {
    violations_.push_back({std::string(path), std::move(message)});
  }

  std::vector<Violation>& violations() { return violations_; }

 private:
  static std::string join(std::string_view path, std::string_view key) {
    return path.empty() ? std::string(key) : fmt::format("{}.{}", path, key);
  }

  std::vector<Violation> violations_;
};

ProducerSpec read_producer(SchemaReader& reader, const json& node,
                           const std::string& path) {
  ProducerSpec out;
  if (!reader.object(node, path,
                     {"name", "beta_f", "beta_d", "p", "pi", "h_min", "cost"})) {
    return out;
  }
  out.name = reader.string(node, path, "name");
  out.beta_f = reader.number(node, path, "beta_f");
  out.beta_d = reader.number(node, path, "beta_d");
  out.p = reader.number(node, path, "p");
  out.pi = reader.number(node, path, "pi");
  out.h_min = reader.number(node, path, "h_min");

  const json& cost = node.at("cost");
  const std::string cost_path = path + ".cost";
  if (reader.object(cost, cost_path, {"type", "a", "b"})) {
    const std::string type = reader.string(cost, cost_path, "type");
    if (type != "quadratic") {
      reader.fail(cost_path + ".type",
                  fmt::format("unsupported cost type '{}'", type));
    }
    out.cost = QuadraticCost(reader.number(cost, cost_path, "a"),
                             reader.number(cost, cost_path, "b"));
  }
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::vector<Violation>{{"<document>", e.what()}});
  }

  SchemaReader reader;
  Scenario scenario;
  if (reader.object(doc, "", {"producers", "intermediary"})) {
    const json& producers = doc.at("producers");
    if (!producers.is_array()) {
      reader.fail("producers", "expected an array");
    } else {
      for (std::size_t i = 0; i < producers.size(); ++i) {
        scenario.producers.push_back(read_producer(
            reader, producers[i], fmt::format("producers[{}]", i)));
      }
    }
    const json& inter = doc.at("intermediary");
    if (reader.object(inter, "intermediary", {"mu", "alpha"})) {
      scenario.intermediary.mu = reader.number(inter, "intermediary", "mu");
      scenario.intermediary.alpha =
          reader.number(inter, "intermediary", "alpha");
    }
  }
  if (!reader.violations().empty()) {
    throw ValidationError(std::move(reader.violations()));
  }
  return validate_scenario(std::move(scenario));
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(fmt::format("cannot open scenario file '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError(fmt::format("error reading scenario file '{}'",
                              path.string()));
  }
  return parse_scenario(buffer.str());
}

nlohmann::ordered_json scenario_to_json(const Scenario& scenario) {
  nlohmann::ordered_json producers = nlohmann::ordered_json::array();
  for (const ProducerSpec& prod : scenario.producers) {
    producers.push_back({{"name", prod.name},
                         {"beta_f", prod.beta_f},
                         {"beta_d", prod.beta_d},
                         {"p", prod.p},
                         {"pi", prod.pi},
                         {"h_min", prod.h_min},
                         {"cost",
                          {{"type", "quadratic"},
                           {"a", prod.cost.a()},
                           {"b", prod.cost.b()}}}});
  }
  return {{"producers", std::move(producers)},
          {"intermediary",
           {{"mu", scenario.intermediary.mu},
            {"alpha", scenario.intermediary.alpha}}}};
}

}  // namespace contract_forge
