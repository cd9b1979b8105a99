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

#include "ecl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "ecl/errors.hpp"

namespace ecl {
namespace {

const double kSqrt3 = std::sqrt(3.0);
constexpr double kBoundaryTol = 1e-12;

void check_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw DomainError("epsilon must be a finite value >= 0");
  }
}

bool z_admissible(int z, double epsilon) {
  const double lhs = static_cast<double>(z) * z;
  const double rhs = (1.0 + epsilon) * (z + 1);
  return lhs <= rhs * (1.0 + kBoundaryTol);
}

bool near_integer(double x) {
  return std::fabs(x - std::round(x)) <= kBoundaryTol * std::max(1.0, x);
}

bool is_natural(double x) {
  return std::isfinite(x) && x >= 0.0 && x == std::floor(x) && x <= 1e6;
}

double relative_tol(double lhs, double rhs) {
  return 1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};

Sides atomic_pos_sides(double alpha, double beta, double epsilon,
                       double alpha_sq_sign) {
  const double denom = 3.0 * epsilon + 3.0 + 2.0 * kSqrt3;
  const double gamma =
      (3.0 + 2.0 * kSqrt3) * (epsilon - 3.0 + 2.0 * kSqrt3) / denom;
  Sides s;
  s.lhs = gamma * beta * beta +
          (1.0 - gamma * epsilon) / (1.0 + epsilon) * beta -
          (gamma - epsilon) / (1.0 + epsilon) * alpha +
          (1.0 - gamma) * beta * alpha;
  s.rhs = (2.0 * kSqrt3 - 3.0) * alpha_sq_sign * (1.0 - epsilon) / denom *
              alpha * alpha +
          2.0 * (3.0 + kSqrt3) / denom * beta * beta;
  return s;
}

Sides lemma_sides(Lemma lemma, const LemmaParams& p) {
  switch (lemma) {
    case Lemma::kAtomicPoa: {
      if (!is_natural(p.alpha) || !is_natural(p.beta) || !is_natural(p.z)) {
        throw DomainError("atomic PoA lemma needs natural alpha, beta, z");
      }
      const double w = 2.0 * p.z + 1.0;
      return {p.beta * (p.alpha + 1.0),
              p.alpha * p.alpha / w +
                  (p.z * p.z + 3.0 * p.z + 1.0) / w * p.beta * p.beta};
    }
    case Lemma::kNonatomicPoa:
      if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) ||
          !std::isfinite(p.lambda) || p.lambda <= 0.0) {
        throw DomainError("non-atomic PoA lemma needs finite reals, lambda > 0");
      }
      return {p.beta * p.alpha,
              p.alpha * p.alpha / (4.0 * p.lambda) +
                  p.lambda * p.beta * p.beta};
    case Lemma::kAtomicPos:
      if (!is_natural(p.alpha) || !is_natural(p.beta) || !(p.epsilon >= 0.0) ||
          p.epsilon > 1.0) {
        throw DomainError(
            "atomic PoS lemma needs natural alpha, beta and eps in [0,1]");
      }
      return atomic_pos_sides(p.alpha, p.beta, p.epsilon, 1.0);
    case Lemma::kNonatomicPos:
      if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) ||
          !(p.epsilon >= 0.0) || p.epsilon > 1.0) {
        throw DomainError(
            "non-atomic PoS inequality needs finite reals and eps in [0,1]");
      }
      return {p.alpha * p.beta,
              (1.0 + p.epsilon) / 4.0 * p.alpha * p.alpha +
                  p.beta * p.beta / (1.0 + p.epsilon)};
  }
  throw DomainError("unknown lemma");
}

}  // namespace

int z_of_epsilon(double epsilon) {
  check_epsilon(epsilon);
  int z = static_cast<int>(std::floor(
      (1.0 + epsilon + std::sqrt(5.0 + 6.0 * epsilon + epsilon * epsilon)) /
      2.0));
  // The closed form can land one off at boundaries; settle on the
  // defining inequality.
  while (z > 1 && !z_admissible(z, epsilon)) --z;
  while (z_admissible(z + 1, epsilon)) ++z;
  return std::max(z, 1);
}

bool is_z_boundary(double epsilon) {
  const int z = z_of_epsilon(epsilon);
  const double lhs = static_cast<double>(z) * z;
  const double rhs = (1.0 + epsilon) * (z + 1);
  return std::fabs(lhs - rhs) <= kBoundaryTol * rhs;
}

double atomic_poa_bound_at(double epsilon, int z) {
  check_epsilon(epsilon);
  if (z < 1) throw DomainError("z must be >= 1");
  const double zz = z;
  return (1.0 + epsilon) * (zz * zz + 3.0 * zz + 1.0) / (2.0 * zz - epsilon);
}

double atomic_poa_bound(double epsilon) {
  const int z = z_of_epsilon(epsilon);
  const double value = atomic_poa_bound_at(epsilon, z);
  if (z > 1 && is_z_boundary(epsilon)) {
    const double other = atomic_poa_bound_at(epsilon, z - 1);
    if (std::fabs(other - value) > 1e-9 * value) {
      throw Error("atomic PoA bound differs across the z boundary at eps=" +
                  std::to_string(epsilon));
    }
  }
  return value;
}

double nonatomic_poa_bound(double epsilon) {
  check_epsilon(epsilon);
  if (epsilon <= 1.0) return 4.0 * (1.0 + epsilon) / (3.0 - epsilon);
  return (1.0 + epsilon) * (1.0 + epsilon);
}

double nonatomic_poa_bound_lambda(double epsilon, double lambda) {
  check_epsilon(epsilon);
  if (!(lambda >= 1.0)) throw DomainError("lambda must be >= 1");
  return 4.0 * lambda * lambda * (1.0 + epsilon) /
         (4.0 * lambda - 1.0 - epsilon);
}

double nonatomic_poa_lower_large(double epsilon) {
  check_epsilon(epsilon);
  if (epsilon < 1.0) throw DomainError("large-eps lower bound needs eps >= 1");
  double z = std::floor(1.0 + epsilon);
  if (near_integer(1.0 + epsilon)) z = std::round(1.0 + epsilon);
  return (1.0 + epsilon) * z * (z + 1.0) / (2.0 * z - epsilon);
}

AtomicPosBounds atomic_pos_bounds(double epsilon) {
  check_epsilon(epsilon);
  AtomicPosBounds out;
  if (epsilon >= 1.0) return out;
  const double e = epsilon;
  const double e2 = e * e;
  const double e3 = e2 * e;
  const double e4 = e3 * e;
  out.coarse = 2.0 / (1.0 + e);
  out.upper = (kSqrt3 + 1.0) / (kSqrt3 + e);
  const double theta = std::sqrt(3.0 * e3 + 3.0 + e + 2.0 * e4);
  const double num =
      3.0 + e + theta * e2 + 3.0 * e3 + 2.0 * e4 + theta + theta * e;
  const double den = 6.0 + 2.0 * e + 5.0 * theta * e + 6.0 * e3 + 4.0 * e4 -
                     theta * e3 + 2.0 * theta * e2;
  out.lower = 2.0 * num / den;
  return out;
}

double nonatomic_pos_bound(double epsilon) {
  check_epsilon(epsilon);
  if (epsilon >= 1.0) return 1.0;
  return 4.0 / ((3.0 - epsilon) * (1.0 + epsilon));
}

BoundReport bound_report(double epsilon) {
  BoundReport r;
  r.epsilon = epsilon;
  r.z_atomic = z_of_epsilon(epsilon);
  r.atomic_poa = atomic_poa_bound(epsilon);
  const AtomicPosBounds pos = atomic_pos_bounds(epsilon);
  r.atomic_pos_upper = pos.upper;
  r.atomic_pos_lower = pos.lower;
  r.atomic_pos_coarse = pos.coarse;
  r.nonatomic_poa = nonatomic_poa_bound(epsilon);
  if (epsilon >= 1.0) {
    r.nonatomic_poa_lower_large = nonatomic_poa_lower_large(epsilon);
  }
  r.nonatomic_pos = nonatomic_pos_bound(epsilon);
  r.z_nonatomic = near_integer(1.0 + epsilon)
                      ? static_cast<int>(std::round(1.0 + epsilon))
                      : static_cast<int>(std::floor(1.0 + epsilon));
  return r;
}

std::vector<double> epsilon_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) ||
      start < 0.0 || step <= 0.0 || stop < start) {
    throw DomainError("grid needs finite 0 <= start <= stop and step > 0");
  }
  const double count = std::floor((stop - start) / step + 1e-6);
  if (count > 1e6) throw DomainError("grid has more than 1e6 points");
  std::vector<double> grid;
  for (int k = 0; k <= static_cast<int>(count); ++k) {
    // Snap to 12 significant digits so 3 * 0.1 reads back as 0.3.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", start + k * step);
    grid.push_back(std::stod(buf));
  }
  return grid;
}

bool lemma_check(Lemma lemma, const LemmaParams& params) {
  if (lemma == Lemma::kAtomicPoa) {
    lemma_sides(lemma, params);  // domain check
    __extension__ using Wide = __int128;
    const auto a = static_cast<Wide>(params.alpha);
    const auto b = static_cast<Wide>(params.beta);
    const auto z = static_cast<Wide>(params.z);
    return (2 * z + 1) * b * (a + 1) <= a * a + (z * z + 3 * z + 1) * b * b;
  }
  const Sides s = lemma_sides(lemma, params);
  return s.lhs <= s.rhs + relative_tol(s.lhs, s.rhs);
}

double lemma_slack(Lemma lemma, const LemmaParams& params) {
  const Sides s = lemma_sides(lemma, params);
  return s.rhs - s.lhs;
}

double atomic_pos_lemma_normalized(double alpha, double beta) {
  const double head =
      2.0 * kSqrt3 + 3.0 - 4.0 * beta - 2.0 * beta * kSqrt3 + 2.0 * alpha;
  return 0.25 * head * head +
         0.125 * (5.0 + 3.0 * kSqrt3) * (8.0 * beta - 3.0 - 3.0 * kSqrt3);
}

double atomic_pos_lemma_slack_as_printed(double alpha, double beta,
                                         double epsilon) {
  const Sides s = atomic_pos_sides(alpha, beta, epsilon, -1.0);
  return s.rhs - s.lhs;
}

}  // namespace ecl
