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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "contract_forge/advisor.hpp"
#include "contract_forge/render.hpp"
#include "oracle.hpp"
#include "scenarios.hpp"

namespace cf = contract_forge;

namespace {

bool near(double actual, double expected, double tol) {
  return std::abs(actual - expected) <= tol;
}

}  // namespace

TEST_SUITE("advisor") {

TEST_CASE("Example 1 comparison") {
  const auto report = cf::compare(scenarios::example1());
  REQUIRE(report.rows.size() == 3);
  const auto& f1 = report.rows[0];
  CHECK(near(f1.intermediary_delta, 0.63, 0.05));
  CHECK(f1.recommendation == cf::Recommendation::kUseIntermediary);
  CHECK(f1.branch == cf::LimitedBranch::kEncouragement);
  CHECK_FALSE(f1.branch_disagreement);
  CHECK(near(f1.rent_delta, 62.5 - 60.142857142857146, 1e-9));

  // With the bonus evaluated exactly, the limited regime falls short of
  // direct contracting for F2 (57.057 < 57.116) and F3 (26.123 < 26.235).
  CHECK(report.rows[1].recommendation == cf::Recommendation::kDirectContract);
  CHECK(report.rows[2].recommendation == cf::Recommendation::kDirectContract);
  CHECK(report.rows[1].limited_flags.s_bar1_clamped);
  CHECK(report.rows[1].asym_flags.participation_violated);
  CHECK(report.rows[1].deviation());

  CHECK(report.ranking == std::vector<std::string>{"F1", "F2", "F3"});
  double best = 0;
  for (const auto& row : report.rows) best += row.best_contribution();
  CHECK(near(report.total_best, best, 1e-12));
}

TEST_CASE("Example 2 recommends direct contracting") {
  const auto report = cf::compare(scenarios::example2());
  REQUIRE(report.rows.size() == 1);
  const auto& row = report.rows[0];
  CHECK(row.branch == cf::LimitedBranch::kExclusion);
  CHECK(row.switch_rule.branch() == cf::LimitedBranch::kExclusion);
  CHECK(near(row.h_lim, 59.56185567010309, 1e-9));
  CHECK(row.recommendation == cf::Recommendation::kDirectContract);
  CHECK(report.alpha == 1e-6);

  cf::RegimeOptions o;
  o.alpha_override = 1e-6;
  const auto overridden = cf::compare(scenarios::example1(), o);
  CHECK(overridden.alpha == 1e-6);
  CHECK(overridden.rows[0].h_lim == row.h_lim);
}

TEST_CASE("ties go to direct contracting") {
  // pi = 0 makes the limited regime identical to the asymmetric one.
  cf::Scenario s = scenarios::example1();
  s.intermediary.mu = 1.0;
  for (auto& p : s.producers) p.pi = 0.0;
  for (const auto& row : cf::compare(s).rows) {
    CHECK(row.h_lim == doctest::Approx(row.h_opt2).epsilon(1e-12));
    if (!(row.h_lim > row.h_opt2)) {
      CHECK(row.recommendation == cf::Recommendation::kDirectContract);
    }
  }
}

TEST_CASE("corruption exposure") {
  const auto s = scenarios::example1();
  const auto unlimited = cf::unlimited_outcome(s.producers[0], s.intermediary);
  const auto u = cf::corruption_exposure(*unlimited.menu, 0.4);
  CHECK(u.blackmail_exposure == 0);
  CHECK(u.corruption_free());

  const auto enc = cf::limited_outcome(s.producers[0], s.intermediary,
                                       cf::LimitedBranch::kEncouragement);
  const auto e = cf::corruption_exposure(*enc.menu, 0.4, 1.0);
  CHECK(e.blackmail_exposure == 3);
  CHECK(near(e.intermediary_blackmail_value, 1.8, 1e-12));
  CHECK(e.blackmail_covered);
  CHECK(e.bribe_covered);
  CHECK(near(e.intermediary_bribe_value, enc.s_bar1, 1e-12));

  cf::ContractMenu flat;
  for (cf::ContractLine* line :
       {&flat.favourable, &flat.unfavourable, &flat.unknown[0],
        &flat.unknown[1]}) {
    line->producer_payoff = 1.5;
  }
  const auto f = cf::corruption_exposure(flat, 0.4);
  CHECK(f.bribe_incentive == 0);
  CHECK(f.blackmail_exposure == 0);

  cf::ContractMenu exposed = *enc.menu;
  exposed.unfavourable.legal_transfer = 0;
  CHECK_FALSE(cf::corruption_exposure(exposed, 0.4).corruption_free());
}

TEST_CASE("every equilibrium menu is corruption-free") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const auto prod = oracle::random_producer(rng, "R");
    const cf::IntermediarySpec inter{0.99 * u(rng), 0.05 + 3 * u(rng)};
    const cf::ProducerOutcome outcomes[] = {
        cf::unlimited_outcome(prod, inter),
        cf::limited_outcome(prod, inter, cf::LimitedBranch::kEncouragement),
        cf::limited_outcome(prod, inter, cf::LimitedBranch::kExclusion)};
    for (const auto& o : outcomes) {
      CHECK(cf::corruption_exposure(*o.menu, inter.mu, inter.alpha)
                .corruption_free());
    }
  }
}

TEST_CASE("no regime beats complete information") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    cf::Scenario s{{oracle::random_producer(rng, "R")},
                   {u(rng), 0.05 + 3 * u(rng)}};
    const auto row = cf::compare(s).rows.at(0);
    CHECK(std::max(row.h_opt2, row.h_lim) <= row.h_opt1 + 1e-9);
  }
}

TEST_CASE("ranking") {
  cf::Scenario one{{scenarios::f3()}, {0.4, 1.0}};
  CHECK(cf::compare(one).ranking == std::vector<std::string>{"F3"});

  cf::ProducerSpec twin = scenarios::f1();
  twin.name = "F1b";
  cf::Scenario twins{{scenarios::f1(), twin}, {0.4, 1.0}};
  CHECK(cf::compare(twins).ranking == std::vector<std::string>{"F1", "F1b"});
  std::swap(twins.producers[0], twins.producers[1]);
  CHECK(cf::compare(twins).ranking == std::vector<std::string>{"F1b", "F1"});
}

TEST_CASE("a solver failure is isolated to its row") {
  cf::Scenario s = scenarios::example1();
  // Marginal cost at zero effort exceeds the unfavourable productivity.
  s.producers.insert(s.producers.begin() + 1,
                     {"Z", 20, 5, 0.5, 0.5, -1, cf::QuadraticCost(1, 8)});
  const auto report = cf::compare(s);
  REQUIRE(report.rows.size() == 4);
  CHECK(report.rows[1].failed);
  CHECK_FALSE(report.rows[1].error.empty());
  CHECK(report.ranking.back() == "Z");
  const auto clean = cf::compare(scenarios::example1());
  CHECK(report.total_best == clean.total_best);
}

TEST_CASE("comparison is deterministic") {
  const auto s = scenarios::example1();
  const auto a = cf::render(cf::compare(s), cf::Format::kJson);
  const auto b = cf::render(cf::compare(s), cf::Format::kJson);
  CHECK(a == b);
}

}  // TEST_SUITE
