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

#ifndef ECL_ATOMIC_SOLVERS_HPP_
#define ECL_ATOMIC_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ecl/atomic_game.hpp"

namespace ecl {

struct BruteForceOptions {
  std::uint64_t cap = 10'000'000;  // maximum number of profiles
  unsigned jobs = 1;               // worker threads over index ranges
  bool keep_equilibria = true;     // store every equilibrium profile
};

// Result of exhaustive enumeration at a fixed epsilon.
struct EquilibriumSet {
  double epsilon = 0.0;
  std::vector<Profile> equilibria;  // in enumeration order
  std::uint64_t equilibrium_count = 0;
  std::uint64_t profiles_enumerated = 0;
  Profile optimum;
  double opt_cost = 0.0;
  Profile worst_equilibrium;
  Profile best_equilibrium;
  double worst_cost = 0.0;
  double best_cost = 0.0;
  double poa = 0.0;
  double pos = 0.0;
};

// Mixed-radix decoding of a profile index (player 0 is least significant).
Profile profile_from_index(const AtomicGame& game, std::uint64_t index);

// Enumerates every profile and classifies epsilon-Nash equilibria with
// profile_epsilon. Throws CapacityError above options.cap. Ties between
// profiles of equal cost resolve to the lowest enumeration index, so the
// result is identical for any number of jobs.
EquilibriumSet brute_force(const AtomicGame& game, double epsilon,
                           const BruteForceOptions& options = {});

struct DynamicsStep {
  std::size_t mover = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  double delta = 0.0;      // potential change of the step
  double potential = 0.0;  // potential after the step
};

struct DynamicsTrace {
  double initial_potential = 0.0;
  std::vector<DynamicsStep> steps;
};

// CSV with header "step,mover,delta,potential".
void write_trace_csv(std::ostream& out, const DynamicsTrace& trace);

struct DynamicsResult {
  Profile terminal;
  DynamicsTrace trace;
  bool converged = false;  // false: max_steps reached before a fixed point
};

enum class MoveRule {
  kRoundRobin,    // players scanned cyclically from the last mover
  kLargestRatio,  // player with the largest cost / best-deviation ratio
};

// Epsilon-best-response dynamics. A player moves to a best response only if
// c_i > (1+eps) * c_best * (1 + 1e-12). Non-termination within max_steps
// is reported through `converged`, not as an error.
DynamicsResult epsilon_best_response(const AtomicGame& game,
                                     const Profile& start, double epsilon,
                                     MoveRule rule, std::size_t max_steps);

// Steepest descent on the epsilon-potential: every step takes the
// unilateral move with the most negative potential_delta below -1e-12
// (ties: lowest player, then lowest strategy). A terminal profile is a
// local minimum of the potential and hence an epsilon-Nash equilibrium.
DynamicsResult potential_descent(const AtomicGame& game, const Profile& start,
                                 double epsilon, std::size_t max_steps);

// Upper bound on the price of stability obtained by descending from the
// social optimum: SC(local minimum) / SC(optimum).
struct PosDescentCertificate {
  Profile optimum;
  Profile equilibrium;
  double opt_cost = 0.0;
  double equilibrium_cost = 0.0;
  double ratio = 0.0;
  bool converged = false;
};

PosDescentCertificate pos_descent_certificate(const AtomicGame& game,
                                              const Profile& optimum,
                                              double epsilon,
                                              std::size_t max_steps = 1'000'000);

}  // namespace ecl

#endif  // ECL_ATOMIC_SOLVERS_HPP_
