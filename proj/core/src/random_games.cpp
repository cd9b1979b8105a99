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

#include "ecl/random_games.hpp"

#include <vector>

namespace ecl {
namespace {

std::size_t draw_count(std::mt19937_64& rng, std::size_t max) {
  return std::uniform_int_distribution<std::size_t>(1, max)(rng);
}

std::vector<int> random_subset(std::mt19937_64& rng, std::size_t m) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> subset;
  while (subset.empty()) {
    for (std::size_t e = 0; e < m; ++e) {
      if (coin(rng)) subset.push_back(static_cast<int>(e));
    }
  }
  return subset;
}

std::vector<std::vector<std::vector<int>>> random_strategy_sets(
    std::mt19937_64& rng, std::size_t groups, std::size_t max_strategies,
    std::size_t m) {
  std::vector<std::vector<std::vector<int>>> sets(groups);
  for (auto& set : sets) {
    const std::size_t k = draw_count(rng, max_strategies);
    for (std::size_t s = 0; s < k; ++s) set.push_back(random_subset(rng, m));
  }
  return sets;
}

}  // namespace

AtomicGame random_atomic_game(std::mt19937_64& rng,
                              const RandomGameShape& shape) {
  const std::size_t m = draw_count(rng, shape.max_facilities);
  std::uniform_int_distribution<int> coef(0, shape.max_coefficient);
  std::vector<Facility> facilities;
  for (std::size_t e = 0; e < m; ++e) {
    const double a = coef(rng);
    const double b = coef(rng);
    facilities.push_back({static_cast<int>(e), a, b});
  }
  const std::size_t n = draw_count(rng, shape.max_players);
  return AtomicGame(std::move(facilities),
                    random_strategy_sets(rng, n, shape.max_strategies, m));
}

Profile random_profile(std::mt19937_64& rng, const AtomicGame& game) {
  Profile p;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    p.choices.push_back(std::uniform_int_distribution<std::size_t>(
        0, game.num_strategies(i) - 1)(rng));
  }
  return p;
}

NonatomicGame random_nonatomic_game(std::mt19937_64& rng,
                                    const RandomGameShape& shape) {
  const std::size_t m = draw_count(rng, shape.max_facilities);
  std::uniform_real_distribution<double> coef(0.0, shape.max_coefficient);
  std::vector<Facility> facilities;
  for (std::size_t e = 0; e < m; ++e) {
    const double a = coef(rng);
    const double b = coef(rng);
    facilities.push_back({static_cast<int>(e), a, b});
  }
  const std::size_t k = draw_count(rng, shape.max_players);
  std::uniform_real_distribution<double> rate(0.5, 2.0);
  std::vector<NonatomicGame::CommoditySpec> commodities;
  for (auto& strategies :
       random_strategy_sets(rng, k, shape.max_strategies, m)) {
    commodities.push_back({rate(rng), std::move(strategies)});
  }
  return NonatomicGame(std::move(facilities), commodities);
}

Flow random_flow(std::mt19937_64& rng, const NonatomicGame& game) {
  std::exponential_distribution<double> draw(1.0);
  Flow flow;
  for (const auto& c : game.commodities()) {
    std::vector<double> w(c.strategies.size());
    double total = 0.0;
    for (auto& x : w) {
      x = draw(rng);
      total += x;
    }
    for (auto& x : w) x *= c.rate / total;
    flow.weights.push_back(std::move(w));
  }
  return flow;
}

}  // namespace ecl
