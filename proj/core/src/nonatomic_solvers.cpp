// Copyright 2026 The ecl Authors
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

#include "ecl/nonatomic_solvers.hpp"

#include <algorithm>
#include <cmath>

#include "ecl/bounds.hpp"
#include "ecl/errors.hpp"

namespace ecl {
namespace {

// Objective = sum_e (q a_e f_e^2 + c b_e f_e) with gradient 2 q a_e f_e + c b_e.
struct Quadratic {
  double q = 0.5;
  double c = 1.0;
};

Quadratic coefficients(const Objective& objective) {
  if (objective.kind == Objective::Kind::kSocialCost) return {1.0, 1.0};
  if (!(objective.epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  return {0.5, 1.0 / (1.0 + objective.epsilon)};
}

FacilityFlow loads_of(const NonatomicGame& game, const Flow& flow) {
  FacilityFlow loads(game.num_facilities(), 0.0);
  for (std::size_t k = 0; k < game.num_commodities(); ++k) {
    const auto& strategies = game.commodities()[k].strategies;
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      const double w = flow.weights[k][s];
      if (w == 0.0) continue;
      for (std::size_t e : strategies[s]) loads[e] += w;
    }
  }
  return loads;
}

double strategy_sum(const Strategy& strategy, const std::vector<double>& v) {
  double sum = 0.0;
  for (std::size_t e : strategy) sum += v[e];
  return sum;
}

// Minimizer over [0, max_step] of curvature t^2 + slope t.
double line_search(double curvature, double slope, double max_step) {
  if (curvature > 0.0) return std::clamp(-slope / (2.0 * curvature), 0.0, max_step);
  return slope < 0.0 ? max_step : 0.0;
}

bool has_flat_facility(const NonatomicGame& game) {
  std::vector<bool> used(game.num_facilities(), false);
  for (const Commodity& c : game.commodities()) {
    for (const Strategy& s : c.strategies) {
      for (std::size_t e : s) used[e] = true;
    }
  }
  for (std::size_t e = 0; e < used.size(); ++e) {
    if (used[e] && game.facilities()[e].a == 0.0) return true;
  }
  return false;
}

}  // namespace

double evaluate(const NonatomicGame& game, const Objective& objective,
                const FacilityFlow& loads) {
  const Quadratic quad = coefficients(objective);
  double total = 0.0;
  for (std::size_t e = 0; e < loads.size(); ++e) {
    const Facility& f = game.facilities()[e];
    total += quad.q * f.a * loads[e] * loads[e] + quad.c * f.b * loads[e];
  }
  return total;
}

SolveResult minimize(const NonatomicGame& game, const Objective& objective,
                     const SolveOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("tol must be positive");
  const Quadratic quad = coefficients(objective);
  const std::size_t n_fac = game.num_facilities();
  const auto& commodities = game.commodities();

  std::vector<double> gradient(n_fac, 0.0);
  auto update_gradient = [&](const FacilityFlow& loads) {
    for (std::size_t e = 0; e < n_fac; ++e) {
      const Facility& f = game.facilities()[e];
      gradient[e] = 2.0 * quad.q * f.a * loads[e] + quad.c * f.b;
    }
  };

  // Per commodity: gradient sum of each strategy and the oracle's choice.
  std::vector<std::vector<double>> sums(commodities.size());
  std::vector<std::size_t> oracle(commodities.size(), 0);
  auto linear_oracle = [&] {
    for (std::size_t k = 0; k < commodities.size(); ++k) {
      const auto& strategies = commodities[k].strategies;
      sums[k].resize(strategies.size());
      oracle[k] = 0;
      for (std::size_t s = 0; s < strategies.size(); ++s) {
        sums[k][s] = strategy_sum(strategies[s], gradient);
        if (sums[k][s] < sums[k][oracle[k]]) oracle[k] = s;
      }
    }
  };

  SolveResult result;
  result.possibly_nonunique = has_flat_facility(game);

  // Start from the oracle vertex at zero load.
  FacilityFlow loads(n_fac, 0.0);
  update_gradient(loads);
  linear_oracle();
  result.flow = vertex_flow(game, oracle);

  Flow& flow = result.flow;
  std::vector<std::vector<double>> direction(commodities.size());
  FacilityFlow facility_direction(n_fac, 0.0);

  // Pairwise rule: one commodity at a time, shift mass from its costliest
  // used strategy to its cheapest one with an exact line search, updating
  // loads in place. Returns false when no commodity moved.
  auto pairwise_sweep = [&] {
    bool moved = false;
    for (std::size_t k = 0; k < commodities.size(); ++k) {
      const auto& strategies = commodities[k].strategies;
      auto& w = flow.weights[k];
      std::size_t cheap = 0, away = 0;
      double cheap_sum = 0.0, away_sum = -1.0;
      bool have_away = false;
      for (std::size_t s = 0; s < strategies.size(); ++s) {
        const double sum = strategy_sum(strategies[s], gradient);
        if (s == 0 || sum < cheap_sum) {
          cheap = s;
          cheap_sum = sum;
        }
        if (w[s] > 0.0 && (!have_away || sum > away_sum)) {
          away = s;
          away_sum = sum;
          have_away = true;
        }
      }
      if (!have_away || !(away_sum > cheap_sum)) continue;
      for (std::size_t e : strategies[cheap]) facility_direction[e] += 1.0;
      for (std::size_t e : strategies[away]) facility_direction[e] -= 1.0;
      double curvature = 0.0;
      for (std::size_t e : strategies[cheap]) {
        curvature += quad.q * game.facilities()[e].a *
                     facility_direction[e] * facility_direction[e];
      }
      for (std::size_t e : strategies[away]) {
        if (facility_direction[e] != 0.0) {
          curvature += quad.q * game.facilities()[e].a *
                       facility_direction[e] * facility_direction[e];
        }
      }
      const double step = line_search(curvature, cheap_sum - away_sum, w[away]);
      if (step > 0.0) {
        moved = true;
        if (step == w[away]) {
          w[away] = 0.0;
        } else {
          w[away] = std::max(0.0, w[away] - step);
        }
        w[cheap] += step;
        for (const Strategy* st : {&strategies[cheap], &strategies[away]}) {
          for (std::size_t e : *st) {
            if (facility_direction[e] == 0.0) continue;
            loads[e] = std::max(0.0, loads[e] + step * facility_direction[e]);
            const Facility& f = game.facilities()[e];
            gradient[e] = 2.0 * quad.q * f.a * loads[e] + quad.c * f.b;
          }
        }
      }
      for (std::size_t e : strategies[cheap]) facility_direction[e] = 0.0;
      for (std::size_t e : strategies[away]) facility_direction[e] = 0.0;
    }
    return moved;
  };
  for (std::size_t iter = 0;; ++iter) {
    loads = loads_of(game, flow);
    update_gradient(loads);
    linear_oracle();

    double gap = 0.0;
    for (std::size_t k = 0; k < commodities.size(); ++k) {
      for (std::size_t s = 0; s < sums[k].size(); ++s) {
        gap += flow.weights[k][s] * (sums[k][s] - sums[k][oracle[k]]);
      }
    }
    result.duality_gap = std::max(gap, 0.0);
    result.objective = evaluate(game, objective, loads);
    result.iterations = iter + 1;  // linear-oracle rounds
    if (options.record_gap_trace) {
      result.gap_trace.push_back(result.duality_gap);
      result.objective_trace.push_back(result.objective);
    }
    if (result.duality_gap <= options.tol) {
      result.converged = true;
      break;
    }
    if (iter >= options.max_iter) break;

    if (options.step_rule == StepRule::kPairwise) {
      if (!pairwise_sweep()) {
        // No commodity can move; the remaining gap is float noise.
        break;
      }
      continue;
    }

    // Classic step toward the oracle vertex.
    std::fill(facility_direction.begin(), facility_direction.end(), 0.0);
    double slope = 0.0;
    for (std::size_t k = 0; k < commodities.size(); ++k) {
      const auto& w = flow.weights[k];
      auto& d = direction[k];
      d.assign(w.size(), 0.0);
      for (std::size_t s = 0; s < w.size(); ++s) d[s] = -w[s];
      d[oracle[k]] += commodities[k].rate;
      for (std::size_t s = 0; s < d.size(); ++s) {
        if (d[s] == 0.0) continue;
        slope += d[s] * sums[k][s];
        for (std::size_t e : commodities[k].strategies[s]) {
          facility_direction[e] += d[s];
        }
      }
    }
    double curvature = 0.0;
    for (std::size_t e = 0; e < n_fac; ++e) {
      curvature += quad.q * game.facilities()[e].a * facility_direction[e] *
                   facility_direction[e];
    }
    const double step = line_search(curvature, slope, 1.0);
    if (step == 0.0) break;
    for (std::size_t k = 0; k < commodities.size(); ++k) {
      auto& w = flow.weights[k];
      for (std::size_t s = 0; s < w.size(); ++s) {
        if (step == 1.0) {
          w[s] = s == oracle[k] ? commodities[k].rate : 0.0;
        } else {
          w[s] = std::max(0.0, w[s] + step * direction[k][s]);
        }
      }
    }
  }
  return result;
}

PosCertificate pos_certificate(const NonatomicGame& game, double epsilon,
                               const SolveOptions& options) {
  PosCertificate cert;
  cert.epsilon = epsilon;
  cert.equilibrium = minimize(game, Objective::Potential(epsilon), options);
  cert.optimum = minimize(game, Objective::SocialCost(), options);
  if (!cert.equilibrium.converged || !cert.optimum.converged) {
    throw Error("pos_certificate: Frank-Wolfe did not converge within " +
                std::to_string(options.max_iter) + " iterations");
  }
  cert.equilibrium_cost = social_cost(game, cert.equilibrium.flow);
  cert.opt_cost = social_cost(game, cert.optimum.flow);
  cert.ratio = cert.opt_cost > 0.0 ? cert.equilibrium_cost / cert.opt_cost
                                   : 1.0;
  cert.bound = nonatomic_pos_bound(epsilon);
  cert.within_bound = cert.ratio <= cert.bound + 1e-6;
  return cert;
}

}  // namespace ecl
