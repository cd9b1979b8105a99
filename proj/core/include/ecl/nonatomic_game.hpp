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

#ifndef ECL_NONATOMIC_GAME_HPP_
#define ECL_NONATOMIC_GAME_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ecl/atomic_game.hpp"
#include "ecl/facility.hpp"

namespace ecl {

struct Commodity {
  double rate = 1.0;
  std::vector<Strategy> strategies;  // facility positions
};

// Non-atomic congestion game in strategies-as-sets form.
class NonatomicGame {
 public:
  struct CommoditySpec {
    double rate = 1.0;
    std::vector<std::vector<int>> strategies;  // facility ids
  };

  NonatomicGame() = default;  // empty game
  NonatomicGame(std::vector<Facility> facilities,
                const std::vector<CommoditySpec>& commodities);

  const std::vector<Facility>& facilities() const { return facilities_; }
  std::size_t num_facilities() const { return facilities_.size(); }
  const std::vector<Commodity>& commodities() const { return commodities_; }
  std::size_t num_commodities() const { return commodities_.size(); }
  std::size_t position_of(int facility_id) const;
  std::vector<int> strategy_ids(std::size_t commodity, std::size_t s) const;
  double total_rate() const;

 private:
  std::vector<Facility> facilities_;
  std::map<int, std::size_t> index_;
  std::vector<Commodity> commodities_;
};

// Nonnegative weight per (commodity, strategy).
struct Flow {
  std::vector<std::vector<double>> weights;
};

// Load per facility position.
using FacilityFlow = std::vector<double>;

// Shape, sign and rate checks; throws ValidationError naming the first
// violated commodity.
void validate_flow(const NonatomicGame& game, const Flow& flow);

// Flow that puts the whole rate of every commodity on strategy `choice[k]`.
Flow vertex_flow(const NonatomicGame& game,
                 const std::vector<std::size_t>& choice);

FacilityFlow facility_flows(const NonatomicGame& game, const Flow& flow);

double strategy_latency(const NonatomicGame& game, const FacilityFlow& loads,
                        std::size_t commodity, std::size_t s);
double strategy_latency(const NonatomicGame& game, const Flow& flow,
                        std::size_t commodity, std::size_t s);

// Path form sum_P l_P(f) f_P.
double social_cost(const NonatomicGame& game, const Flow& flow);
// Facility form sum_e l_e(f_e) f_e.
double social_cost_by_facility(const NonatomicGame& game,
                               const FacilityFlow& loads);

struct WardropWitness {
  std::size_t commodity = 0;
  std::size_t used = 0;
  std::size_t cheaper = 0;
};

struct WardropReport {
  double epsilon_star = 0.0;
  bool unbounded = false;
  std::optional<WardropWitness> witness;
  double used_threshold = 0.0;  // relative to commodity rate

  bool is_equilibrium(double epsilon, double tol = kTolerance) const {
    return !unbounded && epsilon_star <= epsilon + tol;
  }
};

inline constexpr double kDefaultUsedThreshold = 1e-9;

// A strategy counts as used when its weight exceeds used_threshold * rate.
WardropReport flow_epsilon(const NonatomicGame& game, const Flow& flow,
                           double used_threshold = kDefaultUsedThreshold);

// sum_e (a_e f_e^2 / 2 + b_e f_e / (1+eps)).
double potential(const NonatomicGame& game, const FacilityFlow& loads,
                 double epsilon);
double potential(const NonatomicGame& game, const Flow& flow, double epsilon);

struct InequalityCheck {
  bool holds = false;
  double slack = 0.0;  // right-hand side minus left-hand side
};

// sum_e l_e(f_e) f_e <= (1+eps) sum_e l_e(f_e) f'_e for an eps-Wardrop f.
InequalityCheck bmw_check(const NonatomicGame& game, const Flow& flow,
                          const Flow& alt, double epsilon,
                          double tol = kTolerance);

// sum_e (a_e f_e^2 + b_e f_e/(1+eps)) <= sum_e (a_e f_e f'_e + b_e f'_e/(1+eps))
// for the minimizer f of the epsilon-potential.
InequalityCheck variational_check(const NonatomicGame& game,
                                  const Flow& minimizer, const Flow& alt,
                                  double epsilon, double tol = kTolerance);

}  // namespace ecl

#endif  // ECL_NONATOMIC_GAME_HPP_
