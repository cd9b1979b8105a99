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

#ifndef ECL_NONATOMIC_SOLVERS_HPP_
#define ECL_NONATOMIC_SOLVERS_HPP_

#include <cstddef>
#include <vector>

#include "ecl/nonatomic_game.hpp"

namespace ecl {

struct Objective {
  enum class Kind { kPotential, kSocialCost };
  Kind kind = Kind::kPotential;
  double epsilon = 0.0;  // used by kPotential only

  static Objective Potential(double epsilon) {
    return {Kind::kPotential, epsilon};
  }
  static Objective SocialCost() { return {Kind::kSocialCost, 0.0}; }
};

double evaluate(const NonatomicGame& game, const Objective& objective,
                const FacilityFlow& loads);

enum class StepRule {
  kClassic,   // move toward the linear-oracle vertex
  kPairwise,  // per commodity, shift mass from the costliest used strategy
};

struct SolveOptions {
  double tol = 1e-8;
  std::size_t max_iter = 100'000;
  StepRule step_rule = StepRule::kPairwise;
  bool record_gap_trace = false;
};

struct SolveResult {
  Flow flow;
  double objective = 0.0;
  double duality_gap = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  // Some used facility has a = 0, so the minimizer may not be unique in
  // strategy space.
  bool possibly_nonunique = false;
  std::vector<double> gap_trace;
  std::vector<double> objective_trace;
};

// Conditional-gradient minimization of the epsilon-potential or of the
// social cost over the product of per-commodity simplices. The linear oracle
// picks, per commodity, the strategy with the smallest gradient sum (ties:
// lowest index); steps use exact line search on the quadratic objective;
// iteration stops once the Frank-Wolfe gap is at most tol.
SolveResult minimize(const NonatomicGame& game, const Objective& objective,
                     const SolveOptions& options = {});

struct PosCertificate {
  double epsilon = 0.0;
  double equilibrium_cost = 0.0;
  double opt_cost = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  bool within_bound = false;
  SolveResult equilibrium;
  SolveResult optimum;
};

// C(argmin potential) / C(argmin C), compared with the closed-form
// non-atomic price-of-stability bound. Throws Error if either solve fails
// to converge.
PosCertificate pos_certificate(const NonatomicGame& game, double epsilon,
                               const SolveOptions& options = {});

}  // namespace ecl

#endif  // ECL_NONATOMIC_SOLVERS_HPP_
