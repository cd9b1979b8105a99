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

#ifndef ECL_BOUNDS_HPP_
#define ECL_BOUNDS_HPP_

#include <optional>
#include <vector>

namespace ecl {

// Closed-form price-of-anarchy / price-of-stability bounds for linear
// congestion games under multiplicative epsilon-equilibria. Every function
// rejects epsilon < 0 with DomainError.

// Largest integer z with z^2 / (z+1) <= 1 + eps.
int z_of_epsilon(double epsilon);

// True when eps sits on a boundary where both z and z-1 satisfy the defining
// inequality with equality for z.
bool is_z_boundary(double epsilon);

// (1+eps)(z^2+3z+1)/(2z-eps) with z = z_of_epsilon(eps).
double atomic_poa_bound(double epsilon);
double atomic_poa_bound_at(double epsilon, int z);

// 4(1+eps)/(3-eps) for eps <= 1, (1+eps)^2 beyond.
double nonatomic_poa_bound(double epsilon);

// 4 lambda^2 (1+eps) / (4 lambda - 1 - eps), valid for lambda >= 1.
double nonatomic_poa_bound_lambda(double epsilon, double lambda);

// (1+eps) z (z+1) / (2z - eps) with z = floor(1+eps); requires eps >= 1.
double nonatomic_poa_lower_large(double epsilon);

struct AtomicPosBounds {
  double coarse = 1.0;  // 2/(1+eps)
  double upper = 1.0;   // (sqrt3+1)/(sqrt3+eps)
  double lower = 1.0;   // limit of the dominant-strategy construction
};

// For eps >= 1 all three values are 1.
AtomicPosBounds atomic_pos_bounds(double epsilon);

// 4/((3-eps)(1+eps)) on [0,1], 1 beyond.
double nonatomic_pos_bound(double epsilon);

struct BoundReport {
  double epsilon = 0.0;
  double atomic_poa = 0.0;
  double atomic_pos_upper = 0.0;
  double atomic_pos_lower = 0.0;
  double atomic_pos_coarse = 0.0;
  double nonatomic_poa = 0.0;
  std::optional<double> nonatomic_poa_lower_large;  // eps >= 1 only
  double nonatomic_pos = 0.0;
  int z_atomic = 0;
  int z_nonatomic = 0;  // floor(1+eps)
};

BoundReport bound_report(double epsilon);

// Grid start, start+step, ... up to and including stop (within step/1e6).
std::vector<double> epsilon_grid(double start, double stop, double step);

// Arithmetic lemmas behind the bounds, as executable predicates.
enum class Lemma {
  kAtomicPoa,       // beta(alpha+1) <= alpha^2/(2z+1) + (z^2+3z+1)beta^2/(2z+1)
  kNonatomicPoa,    // beta alpha <= alpha^2/(4 lambda) + lambda beta^2
  kAtomicPos,       // the gamma-weighted inequality behind the PoS bound
  kNonatomicPos,    // alpha beta <= (1+eps)/4 alpha^2 + beta^2/(1+eps)
};

struct LemmaParams {
  double alpha = 0.0;
  double beta = 0.0;
  double z = 0.0;        // kAtomicPoa
  double lambda = 1.0;   // kNonatomicPoa
  double epsilon = 0.0;  // kAtomicPos, kNonatomicPos
};

// True iff the inequality holds at `params` (relative tolerance 1e-12 for
// the real-valued lemmas; exact integer arithmetic for kAtomicPoa). Throws
// DomainError outside the lemma's domain.
bool lemma_check(Lemma lemma, const LemmaParams& params);

// Right-hand side minus left-hand side of the lemma.
double lemma_slack(Lemma lemma, const LemmaParams& params);

// kAtomicPos only: the normalized slack
//   (rhs - lhs) / ((2 sqrt3 - 3)(1-eps)/(3 eps + 3 + 2 sqrt3))
// written as the epsilon-free quadratic
//   1/4 (2 sqrt3 + 3 - 4 beta - 2 sqrt3 beta + 2 alpha)^2
//     + 1/8 (5 + 3 sqrt3)(8 beta - 3 - 3 sqrt3).
double atomic_pos_lemma_normalized(double alpha, double beta);

// kAtomicPos with the alpha^2 coefficient sign as printed in the lemma
// statement, (eps-1) instead of (1-eps). Kept so reports can show that this
// reading is violated while the (1-eps) reading used in the bound holds.
double atomic_pos_lemma_slack_as_printed(double alpha, double beta,
                                         double epsilon);

}  // namespace ecl

#endif  // ECL_BOUNDS_HPP_
