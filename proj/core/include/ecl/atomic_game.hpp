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

#ifndef ECL_ATOMIC_GAME_HPP_
#define ECL_ATOMIC_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ecl/facility.hpp"

namespace ecl {

// A strategy is a set of facilities, stored as sorted positions into
// AtomicGame::facilities().
using Strategy = std::vector<std::size_t>;

// Atomic congestion game with linear latencies. Construction canonicalizes
// the input: facilities are sorted by id and every strategy is sorted and
// deduplicated. Facilities no strategy uses are kept and are inert.
class AtomicGame {
 public:
  // `players[i][s]` lists the facility ids of strategy s of player i.
  AtomicGame() = default;  // empty game
  AtomicGame(std::vector<Facility> facilities,
             const std::vector<std::vector<std::vector<int>>>& players);

  const std::vector<Facility>& facilities() const { return facilities_; }
  std::size_t num_facilities() const { return facilities_.size(); }
  std::size_t num_players() const { return strategies_.size(); }
  const std::vector<Strategy>& strategies(std::size_t player) const {
    return strategies_.at(player);
  }
  std::size_t num_strategies(std::size_t player) const {
    return strategies_.at(player).size();
  }
  std::size_t position_of(int facility_id) const;

  // Product of strategy-set sizes, saturating at UINT64_MAX.
  std::uint64_t profile_count() const;

  // Facility ids of strategy s of player i (serialization form).
  std::vector<int> strategy_ids(std::size_t player, std::size_t s) const;

 private:
  std::vector<Facility> facilities_;
  std::map<int, std::size_t> index_;
  std::vector<std::vector<Strategy>> strategies_;
};

// One pure strategy index per player.
struct Profile {
  std::vector<std::size_t> choices;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

// Number of players on each facility, indexed by facility position.
using LoadVector = std::vector<int>;

struct Deviation {
  std::size_t player = 0;
  std::size_t strategy = 0;
};

// Smallest epsilon for which a profile is an epsilon-Nash equilibrium.
struct EpsilonReport {
  double epsilon_star = 0.0;  // +infinity when `unbounded`
  bool unbounded = false;     // some player can deviate to a zero-cost strategy
  std::optional<Deviation> witness;
  double witness_cost = 0.0;            // current cost of the witness player
  double witness_deviation_cost = 0.0;  // cost after the witness deviation

  bool is_equilibrium(double epsilon) const {
    return !unbounded && epsilon_star <= epsilon + kTolerance;
  }
};

void validate_profile(const AtomicGame& game, const Profile& profile);

LoadVector loads(const AtomicGame& game, const Profile& profile);

double player_cost(const AtomicGame& game, const Profile& profile,
                   std::size_t player);

// Sum of player costs.
double social_cost(const AtomicGame& game, const Profile& profile);

// Facility-side form sum_e n_e (a_e n_e + b_e); equals social_cost.
double social_cost_by_facility(const AtomicGame& game, const Profile& profile);

// Cost player i would pay after unilaterally switching to `alt`, computed
// from the loads of the current profile.
double deviation_cost(const AtomicGame& game, const Profile& profile,
                      const LoadVector& load, std::size_t player,
                      std::size_t alt);

EpsilonReport profile_epsilon(const AtomicGame& game, const Profile& profile);

// Epsilon-potential
//   1/2 sum_e (a_e n_e + b_e) n_e + 1/2 (1-eps)/(1+eps) sum_e (a_e + b_e) n_e.
// At eps = 0 this is Rosenthal's potential.
double potential(const AtomicGame& game, const Profile& profile,
                 double epsilon);

// Rosenthal potential sum_e sum_{k=1..n_e} (a_e k + b_e).
double rosenthal_potential(const AtomicGame& game, const Profile& profile);

// Closed-form change of the epsilon-potential when `player` switches to
// `alt`; equals potential(after) - potential(before).
double potential_delta(const AtomicGame& game, const Profile& profile,
                       std::size_t player, std::size_t alt, double epsilon);

// Same, reusing precomputed loads; no validation.
double potential_delta(const AtomicGame& game, const Profile& profile,
                       const LoadVector& load, std::size_t player,
                       std::size_t alt, double epsilon);

// Per-player bound used in the soundness argument of the potential:
//   c_i(A) <= (1+eps) sum_{e in A_i} (a_e n_e + (b_e - a_e eps)/(1+eps)).
// Returns the right-hand side minus c_i(A) (nonnegative whenever the bound
// holds).
double potential_cost_bound_slack(const AtomicGame& game,
                                  const Profile& profile, std::size_t player,
                                  double epsilon);

}  // namespace ecl

#endif  // ECL_ATOMIC_GAME_HPP_
