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

#include "ecl/nonatomic_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ecl/errors.hpp"

namespace ecl {

NonatomicGame::NonatomicGame(std::vector<Facility> facilities,
                             const std::vector<CommoditySpec>& commodities)
    : facilities_(std::move(facilities)) {
  validate_facilities(facilities_, LatencyDomain::kNonatomic);
  index_ = canonicalize_facilities(facilities_);
  if (commodities.empty()) throw ValidationError("game has no commodities");
  commodities_.reserve(commodities.size());
  for (std::size_t k = 0; k < commodities.size(); ++k) {
    const CommoditySpec& spec = commodities[k];
    const std::string where = "commodity " + std::to_string(k);
    if (!std::isfinite(spec.rate) || spec.rate <= 0.0) {
      throw ValidationError(where + ": rate must be positive");
    }
    if (spec.strategies.empty()) {
      throw ValidationError(where + " has no strategies");
    }
    Commodity c;
    c.rate = spec.rate;
    for (const auto& ids : spec.strategies) {
      try {
        c.strategies.push_back(resolve_strategy(ids, index_));
      } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
      }
    }
    commodities_.push_back(std::move(c));
  }
}

std::size_t NonatomicGame::position_of(int facility_id) const {
  auto it = index_.find(facility_id);
  if (it == index_.end()) {
    throw ValidationError("unknown facility " + std::to_string(facility_id));
  }
  return it->second;
}

std::vector<int> NonatomicGame::strategy_ids(std::size_t commodity,
                                             std::size_t s) const {
  std::vector<int> ids;
  for (std::size_t pos : commodities_.at(commodity).strategies.at(s)) {
    ids.push_back(facilities_[pos].id);
  }
  return ids;
}

double NonatomicGame::total_rate() const {
  double total = 0.0;
  for (const Commodity& c : commodities_) total += c.rate;
  return total;
}

void validate_flow(const NonatomicGame& game, const Flow& flow) {
  if (flow.weights.size() != game.num_commodities()) {
    throw ValidationError("flow has " + std::to_string(flow.weights.size()) +
                          " commodities, game has " +
                          std::to_string(game.num_commodities()));
  }
  for (std::size_t k = 0; k < flow.weights.size(); ++k) {
    const Commodity& c = game.commodities()[k];
    const auto& w = flow.weights[k];
    const std::string where = "commodity " + std::to_string(k);
    if (w.size() != c.strategies.size()) {
      throw ValidationError(where + ": expected " +
                            std::to_string(c.strategies.size()) +
                            " weights, got " + std::to_string(w.size()));
    }
    double sum = 0.0;
    for (double x : w) {
      if (!std::isfinite(x) || x < 0.0) {
        throw ValidationError(where + ": weights must be finite and >= 0");
      }
      sum += x;
    }
    if (std::fabs(sum - c.rate) > kTolerance * std::max(1.0, c.rate)) {
      throw ValidationError(where + ": weights sum to " + std::to_string(sum) +
                            " but rate is " + std::to_string(c.rate));
    }
  }
}

Flow vertex_flow(const NonatomicGame& game,
                 const std::vector<std::size_t>& choice) {
  if (choice.size() != game.num_commodities()) {
    throw ValidationError("vertex flow needs one strategy per commodity");
  }
  Flow flow;
  for (std::size_t k = 0; k < choice.size(); ++k) {
    const Commodity& c = game.commodities()[k];
    if (choice[k] >= c.strategies.size()) {
      throw ValidationError("vertex flow strategy out of range");
    }
    std::vector<double> w(c.strategies.size(), 0.0);
    w[choice[k]] = c.rate;
    flow.weights.push_back(std::move(w));
  }
  return flow;
}

FacilityFlow facility_flows(const NonatomicGame& game, const Flow& flow) {
  validate_flow(game, flow);
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

double strategy_latency(const NonatomicGame& game, const FacilityFlow& loads,
                        std::size_t commodity, std::size_t s) {
  double latency = 0.0;
  for (std::size_t e : game.commodities().at(commodity).strategies.at(s)) {
    latency += game.facilities()[e].latency(loads[e]);
  }
  return latency;
}

double strategy_latency(const NonatomicGame& game, const Flow& flow,
                        std::size_t commodity, std::size_t s) {
  return strategy_latency(game, facility_flows(game, flow), commodity, s);
}

double social_cost(const NonatomicGame& game, const Flow& flow) {
  const FacilityFlow loads = facility_flows(game, flow);
  double total = 0.0;
  for (std::size_t k = 0; k < game.num_commodities(); ++k) {
    for (std::size_t s = 0; s < flow.weights[k].size(); ++s) {
      const double w = flow.weights[k][s];
      if (w > 0.0) total += w * strategy_latency(game, loads, k, s);
    }
  }
  return total;
}

double social_cost_by_facility(const NonatomicGame& game,
                               const FacilityFlow& loads) {
  double total = 0.0;
  for (std::size_t e = 0; e < loads.size(); ++e) {
    total += game.facilities()[e].latency(loads[e]) * loads[e];
  }
  return total;
}

WardropReport flow_epsilon(const NonatomicGame& game, const Flow& flow,
                           double used_threshold) {
  if (!(used_threshold >= 0.0)) {
    throw DomainError("used_threshold must be >= 0");
  }
  const FacilityFlow loads = facility_flows(game, flow);
  WardropReport report;
  report.used_threshold = used_threshold;
  double worst = -1.0;
  for (std::size_t k = 0; k < game.num_commodities(); ++k) {
    const Commodity& c = game.commodities()[k];
    std::vector<double> latency(c.strategies.size());
    std::size_t cheapest = 0;
    for (std::size_t s = 0; s < c.strategies.size(); ++s) {
      latency[s] = strategy_latency(game, loads, k, s);
      if (latency[s] < latency[cheapest]) cheapest = s;
    }
    const double floor = latency[cheapest];
    for (std::size_t s = 0; s < c.strategies.size(); ++s) {
      if (flow.weights[k][s] <= used_threshold * c.rate) continue;
      if (latency[s] <= 0.0) continue;
      if (floor <= 0.0) {
        if (!report.unbounded) {
          report.unbounded = true;
          report.witness = WardropWitness{k, s, cheapest};
        }
        continue;
      }
      const double ratio = latency[s] / floor;
      if (!report.unbounded && ratio > worst) {
        worst = ratio;
        report.witness = WardropWitness{k, s, cheapest};
      }
    }
  }
  report.epsilon_star = report.unbounded
                            ? std::numeric_limits<double>::infinity()
                            : std::max(0.0, worst - 1.0);
  return report;
}

double potential(const NonatomicGame& game, const FacilityFlow& loads,
                 double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  const double scale = 1.0 / (1.0 + epsilon);
  double total = 0.0;
  for (std::size_t e = 0; e < loads.size(); ++e) {
    const Facility& f = game.facilities()[e];
    total += 0.5 * f.a * loads[e] * loads[e] + scale * f.b * loads[e];
  }
  return total;
}

double potential(const NonatomicGame& game, const Flow& flow, double epsilon) {
  return potential(game, facility_flows(game, flow), epsilon);
}

InequalityCheck bmw_check(const NonatomicGame& game, const Flow& flow,
                          const Flow& alt, double epsilon, double tol) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  const FacilityFlow f = facility_flows(game, flow);
  const FacilityFlow g = facility_flows(game, alt);
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t e = 0; e < f.size(); ++e) {
    const double l = game.facilities()[e].latency(f[e]);
    lhs += l * f[e];
    rhs += l * g[e];
  }
  rhs *= 1.0 + epsilon;
  const double slack = rhs - lhs;
  return {slack >= -tol, slack};
}

InequalityCheck variational_check(const NonatomicGame& game,
                                  const Flow& minimizer, const Flow& alt,
                                  double epsilon, double tol) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  const FacilityFlow f = facility_flows(game, minimizer);
  const FacilityFlow g = facility_flows(game, alt);
  const double scale = 1.0 / (1.0 + epsilon);
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t e = 0; e < f.size(); ++e) {
    const Facility& fac = game.facilities()[e];
    lhs += fac.a * f[e] * f[e] + scale * fac.b * f[e];
    rhs += fac.a * f[e] * g[e] + scale * fac.b * g[e];
  }
  const double slack = rhs - lhs;
  return {slack >= -tol, slack};
}

}  // namespace ecl
