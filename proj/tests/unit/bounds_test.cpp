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

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "ecl/bounds.hpp"
#include "ecl/errors.hpp"
#include "oracles.hpp"

namespace ecl {
namespace {

const double kSqrt3 = std::sqrt(3.0);

TEST(ZOfEpsilonTest, Examples) {
  EXPECT_EQ(z_of_epsilon(0.0), 1);
  EXPECT_EQ(z_of_epsilon(1.0 / 3.0), 2);
  EXPECT_EQ(z_of_epsilon(1.25), 3);
  EXPECT_EQ(z_of_epsilon(1.2), 2);
  EXPECT_TRUE(is_z_boundary(1.0 / 3.0));
  EXPECT_TRUE(is_z_boundary(1.25));
  EXPECT_FALSE(is_z_boundary(0.5));
}

TEST(ZOfEpsilonTest, MatchesSearchAndClosedForm) {
  for (int i = 0; i <= 20000; ++i) {
    const double eps = i * 0.001;
    const int z = z_of_epsilon(eps);
    EXPECT_EQ(z, oracle::z_by_search(eps)) << eps;
    if (!is_z_boundary(eps)) {
      EXPECT_EQ(z, static_cast<int>(std::floor(
                       (1 + eps + std::sqrt(5 + 6 * eps + eps * eps)) / 2)))
          << eps;
    }
  }
}

TEST(AtomicPoaBoundTest, Examples) {
  EXPECT_DOUBLE_EQ(atomic_poa_bound(0.0), 2.5);
  EXPECT_NEAR(atomic_poa_bound(1.0 / 3.0), 4.0, 1e-12);
  EXPECT_NEAR(atomic_poa_bound_at(1.0 / 3.0, 1), 4.0, 1e-12);
  EXPECT_NEAR(atomic_poa_bound_at(1.0 / 3.0, 2), 4.0, 1e-12);
  const double eps = 1000;
  EXPECT_NEAR(atomic_poa_bound(eps) / ((1 + eps) * (3 + eps)), 1.0, 0.01);
}

TEST(AtomicPoaBoundTest, ContinuousAcrossBoundaries) {
  for (int z = 1; z <= 30; ++z) {
    // eps* where (z+1)^2 = (1+eps)(z+2).
    const double eps = static_cast<double>((z + 1) * (z + 1)) / (z + 2) - 1;
    EXPECT_NEAR(atomic_poa_bound_at(eps, z), atomic_poa_bound_at(eps, z + 1),
                1e-9 * atomic_poa_bound_at(eps, z));
    EXPECT_NO_THROW(atomic_poa_bound(eps));
    const double below = atomic_poa_bound(std::nextafter(eps, 0.0) - 1e-9);
    const double above = atomic_poa_bound(eps + 1e-9);
    EXPECT_NEAR(below, above, 1e-6 * below);
  }
}

TEST(AtomicPoaBoundTest, MatchesOracleAndIsIncreasing) {
  double prev = 0;
  for (int i = 0; i <= 3000; ++i) {
    const double eps = i * 0.001;
    const double v = atomic_poa_bound(eps);
    EXPECT_NEAR(v, oracle::atomic_poa(eps), 1e-9 * v);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(NonatomicPoaBoundTest, Examples) {
  EXPECT_NEAR(nonatomic_poa_bound(0.0), 4.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(nonatomic_poa_bound(1.0), 4.0);
  EXPECT_DOUBLE_EQ(nonatomic_poa_bound(3.0), 16.0);
  EXPECT_NEAR(nonatomic_poa_bound(std::nextafter(1.0, 0.0)),
              nonatomic_poa_bound(std::nextafter(1.0, 2.0)), 1e-12);
}

TEST(NonatomicPoaBoundTest, LambdaMinimization) {
  for (int i = 0; i <= 40; ++i) {
    const double eps = i * 0.05;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 49000; ++k) {
      const double lambda = 1.0 + k * 0.001;
      const double v = 4 * lambda * lambda * (1 + eps) / (4 * lambda - 1 - eps);
      best = std::min(best, v);
      EXPECT_NEAR(nonatomic_poa_bound_lambda(eps, lambda), v, 1e-12 * v);
    }
    EXPECT_NEAR(nonatomic_poa_bound(eps), best, 1e-4) << eps;
  }
  EXPECT_THROW(nonatomic_poa_bound_lambda(0.5, 0.9), DomainError);
}

TEST(NonatomicPoaLowerLargeTest, Examples) {
  EXPECT_NEAR(nonatomic_poa_lower_large(1.0), 4.0, 1e-12);
  EXPECT_NEAR(nonatomic_poa_lower_large(2.0), 9.0, 1e-12);
  EXPECT_NEAR(nonatomic_poa_lower_large(1.5), 6.0, 1e-12);
  EXPECT_LT(nonatomic_poa_lower_large(1.5), 6.25);
  EXPECT_THROW(nonatomic_poa_lower_large(0.5), DomainError);
  for (int i = 0; i <= 300; ++i) {
    const double eps = 1.0 + i * 0.01;
    EXPECT_LE(nonatomic_poa_lower_large(eps), nonatomic_poa_bound(eps) * (1 + 1e-12));
  }
}

TEST(AtomicPosBoundsTest, Examples) {
  const AtomicPosBounds zero = atomic_pos_bounds(0.0);
  EXPECT_NEAR(zero.upper, 1 + kSqrt3 / 3, 1e-12);
  EXPECT_NEAR(zero.lower, 1 + kSqrt3 / 3, 1e-12);
  EXPECT_DOUBLE_EQ(zero.coarse, 2.0);
  const AtomicPosBounds one = atomic_pos_bounds(1.0);
  EXPECT_NEAR(one.upper, 1.0, 1e-15);
  EXPECT_NEAR(one.coarse, 1.0, 1e-15);
  const AtomicPosBounds half = atomic_pos_bounds(0.5);
  EXPECT_LT(half.lower, half.upper);
  const AtomicPosBounds big = atomic_pos_bounds(3.0);
  EXPECT_EQ(big.upper, 1.0);
  EXPECT_EQ(big.lower, 1.0);
  EXPECT_EQ(big.coarse, 1.0);
}

TEST(AtomicPosBoundsTest, OrderingOnUnitInterval) {
  for (int i = 0; i <= 1000; ++i) {
    const double eps = i * 0.001;
    const AtomicPosBounds b = atomic_pos_bounds(eps);
    EXPECT_LE(b.lower, b.upper + 1e-12) << eps;
    EXPECT_LE(b.upper, b.coarse + 1e-12) << eps;
    EXPECT_GE(b.lower, 1.0 - 1e-12) << eps;
    EXPECT_NEAR(b.upper, (kSqrt3 + 1) / (kSqrt3 + eps), 1e-12);
  }
}

TEST(NonatomicPosBoundTest, Examples) {
  EXPECT_NEAR(nonatomic_pos_bound(0.0), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(nonatomic_pos_bound(1.0), 1.0, 1e-15);
  EXPECT_NEAR(nonatomic_pos_bound(0.5), 4.0 / (2.5 * 1.5), 1e-15);
  EXPECT_EQ(nonatomic_pos_bound(2.0), 1.0);
}

TEST(BoundsTest, NegativeEpsilonRejected) {
  EXPECT_THROW(z_of_epsilon(-0.01), DomainError);
  EXPECT_THROW(atomic_poa_bound(-0.01), DomainError);
  EXPECT_THROW(nonatomic_poa_bound(-1), DomainError);
  EXPECT_THROW(atomic_pos_bounds(-1), DomainError);
  EXPECT_THROW(nonatomic_pos_bound(-1), DomainError);
  EXPECT_THROW(bound_report(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(BoundReportTest, InvariantsOnGrid) {
  for (double eps : epsilon_grid(0, 3, 0.05)) {
    const BoundReport r = bound_report(eps);
    EXPECT_EQ(r.epsilon, eps);
    for (double v : {r.atomic_poa, r.atomic_pos_upper, r.atomic_pos_lower,
                     r.atomic_pos_coarse, r.nonatomic_poa, r.nonatomic_pos}) {
      EXPECT_GE(v, 1.0 - 1e-12) << eps;
    }
    EXPECT_LE(r.atomic_pos_lower, r.atomic_pos_upper + 1e-12);
    EXPECT_EQ(r.z_atomic, z_of_epsilon(eps));
    EXPECT_EQ(r.z_nonatomic, static_cast<int>(std::floor(1 + eps + 1e-12)));
    EXPECT_EQ(r.nonatomic_poa_lower_large.has_value(), eps >= 1.0);
    if (r.nonatomic_poa_lower_large) {
      EXPECT_LE(*r.nonatomic_poa_lower_large, r.nonatomic_poa * (1 + 1e-12));
    }
  }
}

TEST(EpsilonGridTest, SnapsAndValidates) {
  const auto g = epsilon_grid(0, 2, 0.05);
  ASSERT_EQ(g.size(), 41u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 2.0);
  EXPECT_EQ(g[3], 0.15);
  EXPECT_EQ(epsilon_grid(1, 1, 0.1), (std::vector<double>{1.0}));
  EXPECT_THROW(epsilon_grid(0, 1, 0), DomainError);
  EXPECT_THROW(epsilon_grid(1, 0, 0.1), DomainError);
  EXPECT_THROW(epsilon_grid(-1, 1, 0.1), DomainError);
  EXPECT_THROW(epsilon_grid(0, 1, 1e-9), DomainError);
}

TEST(LemmaTest, AtomicPoaEqualityPoints) {
  for (int z = 1; z <= 50; ++z) {
    const LemmaParams p{static_cast<double>(z), 1, static_cast<double>(z)};
    EXPECT_TRUE(lemma_check(Lemma::kAtomicPoa, p));
    EXPECT_NEAR(lemma_slack(Lemma::kAtomicPoa, p), 0.0, 1e-9);
  }
}

TEST(LemmaTest, AtomicPoaExhaustive) {
  for (int z = 1; z <= 12; ++z) {
    for (int a = 0; a <= 40; ++a) {
      for (int b = 0; b <= 40; ++b) {
        const LemmaParams p{static_cast<double>(a), static_cast<double>(b),
                            static_cast<double>(z)};
        ASSERT_TRUE(lemma_check(Lemma::kAtomicPoa, p)) << a << " " << b << " " << z;
        // Cleared denominators: (2z+1) b (a+1) <= a^2 + (z^2+3z+1) b^2.
        const long long lhs = (2LL * z + 1) * b * (a + 1);
        const long long rhs = 1LL * a * a + (1LL * z * z + 3 * z + 1) * b * b;
        ASSERT_LE(lhs, rhs);
      }
    }
  }
}

TEST(LemmaTest, AtomicPoaDomain) {
  EXPECT_THROW(lemma_check(Lemma::kAtomicPoa, {0.5, 1, 1}), DomainError);
  EXPECT_THROW(lemma_check(Lemma::kAtomicPoa, {1, -1, 1}), DomainError);
}

TEST(LemmaTest, NonatomicPoaRandomized) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> real(-50, 50);
  std::uniform_real_distribution<double> pos(1e-3, 50);
  for (int t = 0; t < 100000; ++t) {
    const LemmaParams p{real(rng), real(rng), 0, pos(rng)};
    ASSERT_TRUE(lemma_check(Lemma::kNonatomicPoa, p));
  }
  for (double lambda : {0.3, 1.0, 7.5}) {
    for (double beta : {-2.0, 0.0, 1.0, 3.5}) {
      const LemmaParams p{2 * lambda * beta, beta, 0, lambda};
      EXPECT_NEAR(lemma_slack(Lemma::kNonatomicPoa, p), 0.0, 1e-12);
    }
  }
  EXPECT_THROW(lemma_check(Lemma::kNonatomicPoa, {1, 1, 0, 0}), DomainError);
  EXPECT_THROW(lemma_check(Lemma::kNonatomicPoa, {1, 1, 0, -1}), DomainError);
}

TEST(LemmaTest, AtomicPosGrid) {
  for (int i = 0; i <= 20; ++i) {
    const double eps = i * 0.05;
    for (int a = 0; a <= 25; ++a) {
      for (int b = 0; b <= 25; ++b) {
        LemmaParams p{static_cast<double>(a), static_cast<double>(b)};
        p.epsilon = eps;
        ASSERT_TRUE(lemma_check(Lemma::kAtomicPos, p)) << a << " " << b << " " << eps;
      }
    }
  }
  LemmaParams bad{1, 1};
  bad.epsilon = 1.5;
  EXPECT_THROW(lemma_check(Lemma::kAtomicPos, bad), DomainError);
}

TEST(LemmaTest, AtomicPosFactoredForms) {
  for (int a = 0; a <= 25; ++a) {
    EXPECT_NEAR(atomic_pos_lemma_normalized(a, 1), a * (a - 1.0), 1e-9);
    EXPECT_NEAR(atomic_pos_lemma_normalized(a, 0), (3 + a + 2 * kSqrt3) * a, 1e-9);
  }
}

TEST(LemmaTest, AtomicPosSlackIsScaledNormalizedForm) {
  for (int i = 0; i < 20; ++i) {
    const double eps = i * 0.05;
    const double k = (2 * kSqrt3 - 3) * (1 - eps) / (3 * eps + 3 + 2 * kSqrt3);
    for (int a = 0; a <= 25; ++a) {
      for (int b = 0; b <= 25; ++b) {
        LemmaParams p{static_cast<double>(a), static_cast<double>(b)};
        p.epsilon = eps;
        const double f = atomic_pos_lemma_normalized(a, b);
        EXPECT_NEAR(lemma_slack(Lemma::kAtomicPos, p) / k, f, 1e-8 * std::max(1.0, f));
      }
    }
  }
}

TEST(LemmaTest, AtomicPosAsPrintedFails) {
  double worst = 0;
  for (int a = 0; a <= 25; ++a) {
    for (int b = 0; b <= 25; ++b) {
      worst = std::min(worst, atomic_pos_lemma_slack_as_printed(a, b, 0.0));
    }
  }
  EXPECT_LT(worst, 0.0);
}

TEST(LemmaTest, NonatomicPos) {
  LemmaParams p{1, 1};
  p.epsilon = 0;
  EXPECT_TRUE(lemma_check(Lemma::kNonatomicPos, p));
  EXPECT_NEAR(lemma_slack(Lemma::kNonatomicPos, p), 0.25, 1e-15);
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> real(-20, 20), unit(0, 1);
  for (int t = 0; t < 20000; ++t) {
    LemmaParams q{real(rng), real(rng)};
    q.epsilon = unit(rng);
    ASSERT_TRUE(lemma_check(Lemma::kNonatomicPos, q));
  }
  // Equality at beta = (1+eps) alpha / 2.
  LemmaParams eq{2, 1.5};
  eq.epsilon = 0.5;
  EXPECT_NEAR(lemma_slack(Lemma::kNonatomicPos, eq), 0.0, 1e-12);
}

}  // namespace
}  // namespace ecl
