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

#include "ecl/atomic_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include "ecl/errors.hpp"

namespace ecl {
namespace {

constexpr double kImprovementSlack = 1e-12;
constexpr double kDescentThreshold = -1e-12;

// Best unilateral response of `player`; ties resolve to the lowest index.
struct BestResponse {
  std::size_t strategy = 0;
  double cost = std::numeric_limits<double>::infinity();
};

BestResponse best_response(const AtomicGame& game, const Profile& profile,
                           const LoadVector& load, std::size_t player) {
  BestResponse best;
  for (std::size_t s = 0; s < game.num_strategies(player); ++s) {
    if (s == profile.choices[player]) continue;
    const double c = deviation_cost(game, profile, load, player, s);
    if (c < best.cost) best = {s, c};
  }
  return best;
}

double current_cost(const AtomicGame& game, const Profile& profile,
                    const LoadVector& load, std::size_t player) {
  double cost = 0.0;
  for (std::size_t e : game.strategies(player)[profile.choices[player]]) {
    cost += game.facilities()[e].latency(load[e]);
  }
  return cost;
}

void apply_move(const AtomicGame& game, Profile& profile, LoadVector& load,
                std::size_t player, std::size_t to) {
  for (std::size_t e : game.strategies(player)[profile.choices[player]]) {
    --load[e];
  }
  profile.choices[player] = to;
  for (std::size_t e : game.strategies(player)[to]) ++load[e];
}

double cost_ratio(double numerator, double denominator) {
  if (denominator == 0.0) {
    return numerator == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return numerator / denominator;
}

// Partial result of one enumeration chunk.
struct Chunk {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::vector<std::uint64_t> equilibria;
  std::uint64_t equilibrium_count = 0;
  std::uint64_t opt_index = 0;
  double opt_cost = std::numeric_limits<double>::infinity();
  std::uint64_t worst_index = 0;
  double worst_cost = -std::numeric_limits<double>::infinity();
  std::uint64_t best_index = 0;
  double best_cost = std::numeric_limits<double>::infinity();
};

void scan_chunk(const AtomicGame& game, double epsilon, bool keep,
                Chunk& chunk) {
  if (chunk.begin >= chunk.end) return;
  Profile profile = profile_from_index(game, chunk.begin);
  for (std::uint64_t index = chunk.begin; index < chunk.end; ++index) {
    const double cost = social_cost(game, profile);
    if (cost < chunk.opt_cost) {
      chunk.opt_cost = cost;
      chunk.opt_index = index;
    }
    if (profile_epsilon(game, profile).is_equilibrium(epsilon)) {
      ++chunk.equilibrium_count;
      if (keep) chunk.equilibria.push_back(index);
      if (cost > chunk.worst_cost) {
        chunk.worst_cost = cost;
        chunk.worst_index = index;
      }
      if (cost < chunk.best_cost) {
        chunk.best_cost = cost;
        chunk.best_index = index;
      }
    }
    // Mixed-radix increment, player 0 least significant.
    for (std::size_t i = 0; i < profile.choices.size(); ++i) {
      if (++profile.choices[i] < game.num_strategies(i)) break;
      profile.choices[i] = 0;
    }
  }
}

}  // namespace

Profile profile_from_index(const AtomicGame& game, std::uint64_t index) {
  Profile profile;
  profile.choices.resize(game.num_players());
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const std::uint64_t radix = game.num_strategies(i);
    profile.choices[i] = static_cast<std::size_t>(index % radix);
    index /= radix;
  }
  return profile;
}

EquilibriumSet brute_force(const AtomicGame& game, double epsilon,
                           const BruteForceOptions& options) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  const std::uint64_t total = game.profile_count();
  if (total > options.cap) {
    throw CapacityError("brute force would enumerate " +
                            std::to_string(total) + " profiles (cap " +
                            std::to_string(options.cap) + ")",
                        total);
  }

  const unsigned jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(
      options.jobs == 0 ? 1 : options.jobs, 1, std::max<std::uint64_t>(total, 1)));
  std::vector<Chunk> chunks(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    chunks[j].begin = total * j / jobs;
    chunks[j].end = total * (j + 1) / jobs;
  }
  if (jobs == 1) {
    scan_chunk(game, epsilon, options.keep_equilibria, chunks[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        scan_chunk(game, epsilon, options.keep_equilibria, chunks[j]);
      });
    }
  }

  // Chunks are merged in index order with strict comparisons, so ties keep
  // the lowest enumeration index regardless of the partition.
  EquilibriumSet result;
  result.epsilon = epsilon;
  result.profiles_enumerated = total;
  Chunk merged;
  for (const Chunk& c : chunks) {
    merged.equilibrium_count += c.equilibrium_count;
    merged.equilibria.insert(merged.equilibria.end(), c.equilibria.begin(),
                             c.equilibria.end());
    if (c.opt_cost < merged.opt_cost) {
      merged.opt_cost = c.opt_cost;
      merged.opt_index = c.opt_index;
    }
    if (c.worst_cost > merged.worst_cost) {
      merged.worst_cost = c.worst_cost;
      merged.worst_index = c.worst_index;
    }
    if (c.best_cost < merged.best_cost) {
      merged.best_cost = c.best_cost;
      merged.best_index = c.best_index;
    }
  }
  if (merged.equilibrium_count == 0) {
    // A global minimum of the epsilon-potential always exists and is an
    // equilibrium, so this indicates a bug.
    throw Error("internal error: no epsilon-Nash equilibrium found");
  }
  result.equilibrium_count = merged.equilibrium_count;
  result.equilibria.reserve(merged.equilibria.size());
  for (std::uint64_t index : merged.equilibria) {
    result.equilibria.push_back(profile_from_index(game, index));
  }
  result.optimum = profile_from_index(game, merged.opt_index);
  result.opt_cost = merged.opt_cost;
  result.worst_equilibrium = profile_from_index(game, merged.worst_index);
  result.best_equilibrium = profile_from_index(game, merged.best_index);
  result.worst_cost = merged.worst_cost;
  result.best_cost = merged.best_cost;
  result.poa = cost_ratio(result.worst_cost, result.opt_cost);
  result.pos = cost_ratio(result.best_cost, result.opt_cost);
  return result;
}

void write_trace_csv(std::ostream& out, const DynamicsTrace& trace) {
  const auto precision = out.precision(17);
  out << "step,mover,delta,potential\n";
  out << 0 << ",," << 0 << "," << trace.initial_potential << "\n";
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const DynamicsStep& s = trace.steps[k];
    out << k + 1 << "," << s.mover << "," << s.delta << "," << s.potential
        << "\n";
  }
  out.precision(precision);
}

DynamicsResult epsilon_best_response(const AtomicGame& game,
                                     const Profile& start, double epsilon,
                                     MoveRule rule, std::size_t max_steps) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  validate_profile(game, start);
  DynamicsResult result;
  result.terminal = start;
  Profile& profile = result.terminal;
  LoadVector load = loads(game, profile);
  result.trace.initial_potential = potential(game, profile, epsilon);
  const std::size_t n = game.num_players();

  // Improving move of player i, if any: (ratio, best response).
  auto improving = [&](std::size_t i) -> std::optional<std::pair<double, BestResponse>> {
    if (game.num_strategies(i) < 2) return std::nullopt;
    const double cost = current_cost(game, profile, load, i);
    const BestResponse br = best_response(game, profile, load, i);
    if (cost > (1.0 + epsilon) * br.cost * (1.0 + kImprovementSlack)) {
      const double ratio = br.cost > 0.0
                               ? cost / br.cost
                               : std::numeric_limits<double>::infinity();
      return std::make_pair(ratio, br);
    }
    return std::nullopt;
  };

  std::size_t cursor = 0;
  double current_potential = result.trace.initial_potential;
  while (true) {
    std::optional<std::size_t> mover;
    BestResponse target;
    if (rule == MoveRule::kRoundRobin) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = (cursor + k) % n;
        if (auto move = improving(i)) {
          mover = i;
          target = move->second;
          break;
        }
      }
    } else {
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (auto move = improving(i); move && move->first > best_ratio) {
          best_ratio = move->first;
          mover = i;
          target = move->second;
        }
      }
    }
    if (!mover) {
      result.converged = true;
      break;
    }
    if (result.trace.steps.size() >= max_steps) break;
    const std::size_t from = profile.choices[*mover];
    apply_move(game, profile, load, *mover, target.strategy);
    const double next_potential = potential(game, profile, epsilon);
    result.trace.steps.push_back({*mover, from, target.strategy,
                                  next_potential - current_potential,
                                  next_potential});
    current_potential = next_potential;
    cursor = (*mover + 1) % n;
  }
  return result;
}

DynamicsResult potential_descent(const AtomicGame& game, const Profile& start,
                                 double epsilon, std::size_t max_steps) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  validate_profile(game, start);
  DynamicsResult result;
  result.terminal = start;
  Profile& profile = result.terminal;
  LoadVector load = loads(game, profile);
  result.trace.initial_potential = potential(game, profile, epsilon);

  while (true) {
    double steepest = kDescentThreshold;
    std::optional<std::pair<std::size_t, std::size_t>> move;
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      for (std::size_t s = 0; s < game.num_strategies(i); ++s) {
        if (s == profile.choices[i]) continue;
        const double delta =
            potential_delta(game, profile, load, i, s, epsilon);
        if (delta < steepest) {
          steepest = delta;
          move = {i, s};
        }
      }
    }
    if (!move) {
      result.converged = true;
      break;
    }
    if (result.trace.steps.size() >= max_steps) break;
    const auto [mover, to] = *move;
    const std::size_t from = profile.choices[mover];
    apply_move(game, profile, load, mover, to);
    result.trace.steps.push_back(
        {mover, from, to, steepest, potential(game, profile, epsilon)});
  }
  return result;
}

PosDescentCertificate pos_descent_certificate(const AtomicGame& game,
                                              const Profile& optimum,
                                              double epsilon,
                                              std::size_t max_steps) {
  const DynamicsResult run =
      potential_descent(game, optimum, epsilon, max_steps);
  PosDescentCertificate cert;
  cert.optimum = optimum;
  cert.equilibrium = run.terminal;
  cert.opt_cost = social_cost(game, optimum);
  cert.equilibrium_cost = social_cost(game, run.terminal);
  cert.ratio = cost_ratio(cert.equilibrium_cost, cert.opt_cost);
  cert.converged = run.converged;
  return cert;
}

}  // namespace ecl
