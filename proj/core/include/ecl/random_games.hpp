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

#ifndef ECL_RANDOM_GAMES_HPP_
#define ECL_RANDOM_GAMES_HPP_

#include <cstddef>
#include <random>

#include "ecl/atomic_game.hpp"
#include "ecl/nonatomic_game.hpp"

namespace ecl {

struct RandomGameShape {
  std::size_t max_players = 3;
  std::size_t max_strategies = 3;
  std::size_t max_facilities = 6;
  int max_coefficient = 3;  // a, b drawn uniformly from {0..max}
};

// Small atomic game: player, strategy and facility counts drawn uniformly
// from [1, max]; every strategy a nonempty random facility subset.
AtomicGame random_atomic_game(std::mt19937_64& rng,
                              const RandomGameShape& shape = {});

Profile random_profile(std::mt19937_64& rng, const AtomicGame& game);

// Small non-atomic game with rates in [0.5, 2] and real coefficients.
NonatomicGame random_nonatomic_game(std::mt19937_64& rng,
                                    const RandomGameShape& shape = {});

// Feasible flow with weights proportional to Exp(1) draws.
Flow random_flow(std::mt19937_64& rng, const NonatomicGame& game);

}  // namespace ecl

#endif  // ECL_RANDOM_GAMES_HPP_
