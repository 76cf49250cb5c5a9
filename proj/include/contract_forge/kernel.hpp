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

#ifndef CONTRACT_FORGE_KERNEL_HPP_
#define CONTRACT_FORGE_KERNEL_HPP_

// Scalar payoff formulas and first-order-condition solvers.
//
// The screening condition for the effort asked of an unobserved
// unfavourable producer has the shape
//
//   phi'(e) + K * bonus'(e) = beta_d,
//
// where bonus(e) = phi(e) - phi(ratio * e) is the rent a favourable type
// secures by mimicking, ratio = beta_d / beta_f, and the multiplier K is
// p / (1 - p) without an intermediary and is amplified by the probability
// of detection when the principal also faces external limits. For quadratic
// costs the condition is linear in e and solved in closed form; any
// CostModel can be solved by bisection on (0, e_d].

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

#include "contract_forge/model.hpp"

namespace contract_forge {

enum class SolveMethod { kClosedForm, kBisection };

struct SolverOptions {
  SolveMethod method = SolveMethod::kClosedForm;
  // Bisection stops once |residual| <= tolerance * beta_d.
  double tolerance = 1e-10;
  int max_iterations = 200;
};

// Lower end of the bisection bracket; a root at or below it is a shutdown.
inline constexpr double kEffortFloor = 1e-12;

struct EffortSolution {
  double effort = 0.0;
  double residual = 0.0;  // FOC value at `effort`
  SolveMethod method = SolveMethod::kClosedForm;
  // No interior root: the unfavourable type is not employed (effort 0).
  bool shutdown = false;
};

class SolverError : public std::runtime_error {
 public:
  enum class Code { kNoPositiveEffort };

  SolverError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

// q = beta * e.
double output(double beta, double e);

// s - phi(e) - z.
double producer_payoff(double s, const CostFunction& cost, double e, double z);

// s_bar + (1 - mu) * sum(bribes).
double intermediary_payoff(double s_bar, double mu,
                           std::span<const double> bribes);

// phi'(e) = beta. Throws SolverError(kNoPositiveEffort) if beta <= phi'(0).
EffortSolution first_best_effort(double beta, const CostFunction& cost);

template <CostModel C>
double bonus(const C& cost, double ratio, double e) {
  return cost.phi(e) - cost.phi(ratio * e);
}

template <CostModel C>
double bonus_prime(const C& cost, double ratio, double e) {
  return cost.phi_prime(e) - ratio * cost.phi_prime(ratio * e);
}

// p / (1 - p): weight of the favourable type's rent in the screening FOC.
double asymmetric_multiplier(double p);

// (p / (1 - p)) * (1 + (pi / (1 - pi)) * (1 - mu)). Requires pi < 1.
double limited_multiplier(double p, double pi, double mu);

// Root of phi'(e) + multiplier * bonus'(e) - beta_d by bisection on
// (kEffortFloor, upper]. `upper` must satisfy g(upper) > 0; the first-best
// unfavourable effort does whenever multiplier > 0.
template <CostModel C>
EffortSolution bisect_distorted_effort(const C& cost, double beta_d,
                                       double ratio, double multiplier,
                                       double upper,
                                       const SolverOptions& options = {}) {
  auto g = [&](double e) {
    return cost.phi_prime(e) + multiplier * bonus_prime(cost, ratio, e) -
           beta_d;
  };
  EffortSolution out;
  out.method = SolveMethod::kBisection;

  double lo = kEffortFloor;
  double hi = upper;
  const double g_lo = g(lo);
  if (g_lo >= 0.0) {
    out.shutdown = true;
    out.residual = g(0.0);
    return out;
  }
  const double tol = options.tolerance * beta_d;
  double mid = hi;
  double g_mid = g(hi);
  for (int it = 0; it < options.max_iterations; ++it) {
    if (std::abs(g_mid) <= tol) break;
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted at double precision
    g_mid = g(mid);
    if (g_mid > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.effort = mid;
  out.residual = g_mid;
  return out;
}

// Solves the screening FOC with an explicit multiplier K >= 0.
EffortSolution solve_distorted_effort(const ProducerSpec& prod,
                                      double multiplier,
                                      const SolverOptions& options = {});

// Second-best effort without an intermediary (multiplier p / (1 - p)).
EffortSolution solve_asym_effort(const ProducerSpec& prod,
                                 const SolverOptions& options = {});

// Effort when the principal is bound by external limits and a corruptible
// intermediary reports with probability pi.
EffortSolution solve_limited_effort(const ProducerSpec& prod, double mu,
                                    const SolverOptions& options = {});

// h_min + p * bonus(e4): the producer's expected payoff when the
// unfavourable unobserved state is pinned at the bankruptcy floor.
double expected_producer_payoff(const ProducerSpec& prod, double e4);

}  // namespace contract_forge

#endif  // CONTRACT_FORGE_KERNEL_HPP_
