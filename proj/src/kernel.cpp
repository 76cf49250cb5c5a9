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

#include "contract_forge/kernel.hpp"

#include <numeric>

#include <fmt/format.h>

namespace contract_forge {

double output(double beta, double e) { return beta * e; }

double producer_payoff(double s, const CostFunction& cost, double e,
                       double z) {
  return s - cost.phi(e) - z;
}

double intermediary_payoff(double s_bar, double mu,
                           std::span<const double> bribes) {
  const double total = std::accumulate(bribes.begin(), bribes.end(), 0.0);
  return s_bar + (1.0 - mu) * total;
}

EffortSolution first_best_effort(double beta, const CostFunction& cost) {
  if (!(beta > cost.phi_prime(0.0))) {
    throw SolverError(
        SolverError::Code::kNoPositiveEffort,
        fmt::format("no positive effort: productivity {} does not exceed "
                    "marginal cost at zero effort {}",
                    beta, cost.phi_prime(0.0)));
  }
  EffortSolution out;
  out.effort = (beta - cost.b()) / (2.0 * cost.a());
  out.residual = cost.phi_prime(out.effort) - beta;
  return out;
}

double asymmetric_multiplier(double p) { return p / (1.0 - p); }

double limited_multiplier(double p, double pi, double mu) {
  return asymmetric_multiplier(p) * (1.0 + (pi / (1.0 - pi)) * (1.0 - mu));
}

EffortSolution solve_distorted_effort(const ProducerSpec& prod,
                                      double multiplier,
                                      const SolverOptions& options) {
  const CostFunction& cost = prod.cost;
  const double r = prod.ratio();
  const double e_d = first_best_effort(prod.beta_d, cost).effort;

  if (options.method == SolveMethod::kBisection) {
    return bisect_distorted_effort(cost, prod.beta_d, r, multiplier, e_d,
                                   options);
  }

  // 2a e + b + K (2a (1 - r^2) e + b (1 - r)) = beta_d
  const double a = cost.a();
  const double b = cost.b();
  const double slope = 2.0 * a * (1.0 + multiplier * (1.0 - r * r));
  const double e = (prod.beta_d - b - multiplier * b * (1.0 - r)) / slope;

  auto g = [&](double x) {
    return cost.phi_prime(x) + multiplier * bonus_prime(cost, r, x) -
           prod.beta_d;
  };
  EffortSolution out;
  out.method = SolveMethod::kClosedForm;
  if (e <= kEffortFloor) {
    out.shutdown = true;
    out.residual = g(0.0);
    return out;
  }
  out.effort = e;
  out.residual = g(e);
  return out;
}

EffortSolution solve_asym_effort(const ProducerSpec& prod,
                                 const SolverOptions& options) {
  return solve_distorted_effort(prod, asymmetric_multiplier(prod.p), options);
}

EffortSolution solve_limited_effort(const ProducerSpec& prod, double mu,
                                    const SolverOptions& options) {
  return solve_distorted_effort(
      prod, limited_multiplier(prod.p, prod.pi, mu), options);
}

double expected_producer_payoff(const ProducerSpec& prod, double e4) {
  return prod.h_min + prod.p * bonus(prod.cost, prod.ratio(), e4);
}

}  // namespace contract_forge
