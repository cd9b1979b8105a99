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

#include "ecl/atomic_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ecl/errors.hpp"

namespace ecl {

AtomicGame::AtomicGame(
    std::vector<Facility> facilities,
    const std::vector<std::vector<std::vector<int>>>& players)
    : facilities_(std::move(facilities)) {
  validate_facilities(facilities_, LatencyDomain::kAtomic);
  index_ = canonicalize_facilities(facilities_);
  if (players.empty()) throw ValidationError("game has no players");
  strategies_.reserve(players.size());
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (players[i].empty()) {
      throw ValidationError("player " + std::to_string(i) +
                            " has no strategies");
    }
    std::vector<Strategy> set;
    set.reserve(players[i].size());
    for (const auto& ids : players[i]) {
      try {
        set.push_back(resolve_strategy(ids, index_));
      } catch (const ValidationError& e) {
        throw ValidationError("player " + std::to_string(i) + ": " + e.what());
      }
    }
    strategies_.push_back(std::move(set));
  }
}

std::size_t AtomicGame::position_of(int facility_id) const {
  auto it = index_.find(facility_id);
  if (it == index_.end()) {
    throw ValidationError("unknown facility " + std::to_string(facility_id));
  }
  return it->second;
}

std::uint64_t AtomicGame::profile_count() const {
  std::uint64_t count = 1;
  for (const auto& set : strategies_) {
    if (count > std::numeric_limits<std::uint64_t>::max() / set.size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= set.size();
  }
  return count;
}

std::vector<int> AtomicGame::strategy_ids(std::size_t player,
                                          std::size_t s) const {
  std::vector<int> ids;
  for (std::size_t pos : strategies_.at(player).at(s)) {
    ids.push_back(facilities_[pos].id);
  }
  return ids;
}

void validate_profile(const AtomicGame& game, const Profile& profile) {
  if (profile.choices.size() != game.num_players()) {
    throw ValidationError("profile has " +
                          std::to_string(profile.choices.size()) +
                          " choices for " + std::to_string(game.num_players()) +
                          " players");
  }
  for (std::size_t i = 0; i < profile.choices.size(); ++i) {
    if (profile.choices[i] >= game.num_strategies(i)) {
      throw ValidationError("player " + std::to_string(i) +
                            ": strategy index " +
                            std::to_string(profile.choices[i]) +
                            " out of range");
    }
  }
}

namespace {

const Strategy& chosen(const AtomicGame& game, const Profile& profile,
                       std::size_t player) {
  return game.strategies(player)[profile.choices[player]];
}

LoadVector loads_unchecked(const AtomicGame& game, const Profile& profile) {
  LoadVector load(game.num_facilities(), 0);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (std::size_t e : chosen(game, profile, i)) ++load[e];
  }
  return load;
}

double cost_unchecked(const AtomicGame& game, const Profile& profile,
                      const LoadVector& load, std::size_t player) {
  double cost = 0.0;
  for (std::size_t e : chosen(game, profile, player)) {
    cost += game.facilities()[e].latency(load[e]);
  }
  return cost;
}

void check_player(const AtomicGame& game, std::size_t player) {
  if (player >= game.num_players()) {
    throw ValidationError("player " + std::to_string(player) +
                          " out of range");
  }
}

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
}

}  // namespace

LoadVector loads(const AtomicGame& game, const Profile& profile) {
  validate_profile(game, profile);
  return loads_unchecked(game, profile);
}

double player_cost(const AtomicGame& game, const Profile& profile,
                   std::size_t player) {
  validate_profile(game, profile);
  check_player(game, player);
  return cost_unchecked(game, profile, loads_unchecked(game, profile), player);
}

double social_cost(const AtomicGame& game, const Profile& profile) {
  validate_profile(game, profile);
  const LoadVector load = loads_unchecked(game, profile);
  double total = 0.0;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    total += cost_unchecked(game, profile, load, i);
  }
  return total;
}

double social_cost_by_facility(const AtomicGame& game,
                               const Profile& profile) {
  const LoadVector load = loads(game, profile);
  double total = 0.0;
  for (std::size_t e = 0; e < load.size(); ++e) {
    if (load[e] > 0) total += load[e] * game.facilities()[e].latency(load[e]);
  }
  return total;
}

double deviation_cost(const AtomicGame& game, const Profile& profile,
                      const LoadVector& load, std::size_t player,
                      std::size_t alt) {
  const Strategy& current = chosen(game, profile, player);
  const Strategy& target = game.strategies(player).at(alt);
  double cost = 0.0;
  auto it = current.begin();
  for (std::size_t e : target) {
    while (it != current.end() && *it < e) ++it;
    const bool shared = it != current.end() && *it == e;
    const Facility& f = game.facilities()[e];
    cost += f.latency(load[e] + (shared ? 0 : 1));
  }
  return cost;
}

EpsilonReport profile_epsilon(const AtomicGame& game, const Profile& profile) {
  validate_profile(game, profile);
  const LoadVector load = loads_unchecked(game, profile);
  EpsilonReport report;
  double best_ratio = -1.0;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const std::size_t n_strat = game.num_strategies(i);
    if (n_strat < 2) continue;
    const double cost = cost_unchecked(game, profile, load, i);
    std::size_t best_alt = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < n_strat; ++s) {
      if (s == profile.choices[i]) continue;
      const double dev = deviation_cost(game, profile, load, i, s);
      if (dev < best_cost) {
        best_cost = dev;
        best_alt = s;
      }
    }
    double ratio = 0.0;
    bool unbounded = false;
    if (cost > 0.0) {
      if (best_cost <= 0.0) {
        unbounded = true;
      } else {
        ratio = cost / best_cost;
      }
    }
    if (unbounded) {
      if (!report.unbounded) {
        report.unbounded = true;
        report.witness = Deviation{i, best_alt};
        report.witness_cost = cost;
        report.witness_deviation_cost = best_cost;
      }
      continue;
    }
    if (!report.unbounded && ratio > best_ratio) {
      best_ratio = ratio;
      report.witness = Deviation{i, best_alt};
      report.witness_cost = cost;
      report.witness_deviation_cost = best_cost;
    }
  }
  if (report.unbounded) {
    report.epsilon_star = std::numeric_limits<double>::infinity();
  } else {
    report.epsilon_star = std::max(0.0, best_ratio - 1.0);
  }
  return report;
}

double potential(const AtomicGame& game, const Profile& profile,
                 double epsilon) {
  check_epsilon(epsilon);
  const LoadVector load = loads(game, profile);
  const double linear = (1.0 - epsilon) / (1.0 + epsilon);
  double quadratic_part = 0.0;
  double linear_part = 0.0;
  for (std::size_t e = 0; e < load.size(); ++e) {
    if (load[e] == 0) continue;
    const Facility& f = game.facilities()[e];
    quadratic_part += f.latency(load[e]) * load[e];
    linear_part += (f.a + f.b) * load[e];
  }
  return 0.5 * quadratic_part + 0.5 * linear * linear_part;
}

double rosenthal_potential(const AtomicGame& game, const Profile& profile) {
  const LoadVector load = loads(game, profile);
  double total = 0.0;
  for (std::size_t e = 0; e < load.size(); ++e) {
    for (int k = 1; k <= load[e]; ++k) {
      total += game.facilities()[e].latency(k);
    }
  }
  return total;
}

double potential_delta(const AtomicGame& game, const Profile& profile,
                       std::size_t player, std::size_t alt, double epsilon) {
  check_epsilon(epsilon);
  validate_profile(game, profile);
  check_player(game, player);
  if (alt >= game.num_strategies(player)) {
    throw ValidationError("deviation strategy out of range");
  }
  return potential_delta(game, profile, loads_unchecked(game, profile),
                         player, alt, epsilon);
}

double potential_delta(const AtomicGame& game, const Profile& profile,
                       const LoadVector& load, std::size_t player,
                       std::size_t alt, double epsilon) {
  if (profile.choices[player] == alt) return 0.0;
  const double scale = 1.0 / (1.0 + epsilon);
  const Strategy& current = chosen(game, profile, player);
  const Strategy& target = game.strategies(player)[alt];
  double delta = 0.0;
  auto it = current.begin();
  for (std::size_t e : target) {
    const Facility& f = game.facilities()[e];
    delta += f.a * load[e] + scale * (f.a + f.b);
    while (it != current.end() && *it < e) ++it;
    if (it != current.end() && *it == e) delta -= f.a;
  }
  for (std::size_t e : current) {
    const Facility& f = game.facilities()[e];
    delta -= f.a * load[e] + scale * (f.b - f.a * epsilon);
  }
  return delta;
}

double potential_cost_bound_slack(const AtomicGame& game,
                                  const Profile& profile, std::size_t player,
                                  double epsilon) {
  check_epsilon(epsilon);
  validate_profile(game, profile);
  check_player(game, player);
  const LoadVector load = loads_unchecked(game, profile);
  double bound = 0.0;
  for (std::size_t e : chosen(game, profile, player)) {
    const Facility& f = game.facilities()[e];
    bound += (1.0 + epsilon) * f.a * load[e] + f.b - f.a * epsilon;
  }
  return bound - cost_unchecked(game, profile, load, player);
}

}  // namespace ecl
