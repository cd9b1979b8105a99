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
#include <random>

#include <gtest/gtest.h>

#include "ecl/errors.hpp"
#include "ecl/instances.hpp"
#include "ecl/nonatomic_game.hpp"
#include "ecl/random_games.hpp"
#include "oracles.hpp"

namespace ecl {
namespace {

NonatomicGame pigou_game(double eps) {
  return NonatomicGame({{0, 1, 0}, {1, 0, 1 + eps}}, {{1.0, {{0}, {1}}}});
}

// Large-eps construction with z = 1 built by hand: alpha latency x, beta
// latency gamma x, S2 = alpha_{-i} plus one beta.
NonatomicGame large_construction_z1(double eps, double* gamma_out) {
  const double u = 1 + eps;
  const double gamma = (4 - u * 2) / (u - 1);
  *gamma_out = gamma;
  std::vector<Facility> fs;
  for (int i = 0; i < 3; ++i) fs.push_back({i, 1, 0});
  for (int i = 0; i < 3; ++i) fs.push_back({3 + i, gamma, 0});
  std::vector<NonatomicGame::CommoditySpec> cs;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> s2;
    for (int j = 0; j < 3; ++j) {
      if (j != i) s2.push_back(j);
    }
    s2.push_back(3 + (i + 1) % 3);
    cs.push_back({1.0, {{i, 3 + i}, s2}});
  }
  return NonatomicGame(fs, cs);
}

TEST(NonatomicGameTest, Validation) {
  EXPECT_THROW(NonatomicGame({{0, 1, 0}}, {{0.0, {{0}}}}), ValidationError);
  EXPECT_THROW(NonatomicGame({{0, 1, 0}}, {{1.0, {}}}), ValidationError);
  EXPECT_THROW(NonatomicGame({{0, 1, -1}}, {{1.0, {{0}}}}), ValidationError);
  const NonatomicGame g = pigou_game(0);
  EXPECT_THROW(validate_flow(g, Flow{{{0.5, 0.4}}}), ValidationError);
  EXPECT_THROW(validate_flow(g, Flow{{{1.5, -0.5}}}), ValidationError);
  EXPECT_THROW(validate_flow(g, Flow{{{1.0}}}), ValidationError);
  EXPECT_THROW(facility_flows(g, Flow{{{0.5, 0.4}}}), ValidationError);
  EXPECT_NO_THROW(validate_flow(g, Flow{{{0.5, 0.5}}}));
}

TEST(FacilityFlowTest, PigouAllLower) {
  const NonatomicGame g = pigou_game(0.3);
  EXPECT_EQ(facility_flows(g, Flow{{{1.0, 0.0}}}), (FacilityFlow{1.0, 0.0}));
}

TEST(FacilityFlowTest, SingleStrategyCarriesRate) {
  NonatomicGame g({{0, 1, 0}}, {{2.5, {{0}}}});
  EXPECT_EQ(facility_flows(g, vertex_flow(g, {0})), (FacilityFlow{2.5}));
}

TEST(FacilityFlowTest, NetworkAllS2LoadsAlphaTwice) {
  const InstanceBundle b = nonatomic_poa_lb_network(0.5);
  const auto& inst = b.nonatomic();
  const FacilityFlow x = facility_flows(inst.game, inst.equilibrium);
  for (int id = 0; id < 3; ++id) EXPECT_DOUBLE_EQ(x[inst.game.position_of(id)], 2.0);
  for (int id = 3; id < 6; ++id) EXPECT_DOUBLE_EQ(x[inst.game.position_of(id)], 0.0);
}

TEST(StrategyLatencyTest, Pigou) {
  const double eps = 0.4;
  const NonatomicGame g = pigou_game(eps);
  const Flow f{{{1.0, 0.0}}};
  EXPECT_DOUBLE_EQ(strategy_latency(g, f, 0, 0), 1.0);
  EXPECT_DOUBLE_EQ(strategy_latency(g, f, 0, 1), 1.0 + eps);
  // Constant facility ignores its load.
  EXPECT_DOUBLE_EQ(strategy_latency(g, Flow{{{0.0, 1.0}}}, 0, 1), 1.0 + eps);
}

TEST(StrategyLatencyTest, PoaInstanceRatioIsOnePlusEps) {
  for (double eps : {0.0, 0.3, 1.0}) {
    const InstanceBundle b = nonatomic_poa_lb(eps);
    const auto& inst = b.nonatomic();
    for (std::size_t k = 0; k < inst.game.num_commodities(); ++k) {
      const double used = strategy_latency(inst.game, inst.equilibrium, k, 1);
      const double alt = strategy_latency(inst.game, inst.equilibrium, k, 0);
      EXPECT_NEAR(used, (1 + eps) * alt, 1e-12);
    }
  }
}

TEST(NonatomicCostTest, Pigou) {
  for (double eps : {0.0, 0.3, 0.9}) {
    const NonatomicGame g = pigou_game(eps);
    EXPECT_DOUBLE_EQ(social_cost(g, Flow{{{1.0, 0.0}}}), 1.0);
    const double x = (1 + eps) / 2;
    EXPECT_NEAR(social_cost(g, Flow{{{x, 1 - x}}}), (1 + eps) * (3 - eps) / 4,
                1e-12);
  }
  EXPECT_DOUBLE_EQ(social_cost(pigou_game(0), Flow{{{0.5, 0.5}}}), 0.75);
}

TEST(NonatomicCostTest, PathAndFacilityFormsAgree) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const NonatomicGame g = random_nonatomic_game(rng);
    const Flow f = random_flow(rng, g);
    const double c = social_cost(g, f);
    EXPECT_NEAR(c, social_cost_by_facility(g, facility_flows(g, f)), 1e-9);
    EXPECT_NEAR(c, oracle::social(g, f), 1e-9);
  }
}

TEST(FlowEpsilonTest, PigouAllLowerIsExactWardrop) {
  const WardropReport r = flow_epsilon(pigou_game(0.5), Flow{{{1.0, 0.0}}});
  EXPECT_EQ(r.epsilon_star, 0.0);
  EXPECT_FALSE(r.unbounded);
}

TEST(FlowEpsilonTest, SingleStrategyCommodities) {
  NonatomicGame g({{0, 1, 0}, {1, 2, 1}}, {{1.0, {{0}}}, {2.0, {{0, 1}}}});
  EXPECT_EQ(flow_epsilon(g, vertex_flow(g, {0, 0})).epsilon_star, 0.0);
}

TEST(FlowEpsilonTest, LargeConstructionAtHalf) {
  double gamma = 0;
  const NonatomicGame g = large_construction_z1(0.5, &gamma);
  EXPECT_DOUBLE_EQ(gamma, 2.0);
  const WardropReport r = flow_epsilon(g, vertex_flow(g, {1, 1, 1}));
  EXPECT_NEAR(r.epsilon_star, 0.5, 1e-12);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->used, 1u);
  EXPECT_EQ(r.witness->cheaper, 0u);
}

TEST(FlowEpsilonTest, UnboundedAndThreshold) {
  NonatomicGame g({{0, 1, 0}, {1, 0, 0}}, {{1.0, {{0}, {1}}}});
  const WardropReport r = flow_epsilon(g, Flow{{{1.0, 0.0}}});
  EXPECT_TRUE(r.unbounded);
  EXPECT_FALSE(r.is_equilibrium(100));
  // Dust below the threshold does not count as use.
  const NonatomicGame p = pigou_game(0);
  const Flow dust{{{1.0 - 1e-12, 1e-12}}};
  EXPECT_NEAR(flow_epsilon(p, dust).epsilon_star, 0.0, 1e-9);
  EXPECT_GT(flow_epsilon(p, dust, 0.0).epsilon_star, 0.0);
}

TEST(FlowEpsilonTest, MatchesOracle) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    const NonatomicGame g = random_nonatomic_game(rng);
    const Flow f = random_flow(rng, g);
    const WardropReport r = flow_epsilon(g, f);
    const double want = oracle::epsilon(g, f);
    if (std::isinf(want)) {
      EXPECT_TRUE(r.unbounded);
    } else {
      EXPECT_NEAR(r.epsilon_star, want, 1e-9);
    }
  }
}

TEST(NonatomicPotentialTest, PigouClosedForm) {
  for (double eps : {0.0, 0.5, 0.99}) {
    const NonatomicGame g = pigou_game(eps);
    for (double x : {0.0, 0.25, 0.5, 1.0}) {
      EXPECT_NEAR(potential(g, Flow{{{x, 1 - x}}}, eps), 0.5 * x * x + (1 - x),
                  1e-12);
    }
  }
}

TEST(NonatomicPotentialTest, BeckmannAtZeroAndZeroFlow) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 50; ++t) {
    const NonatomicGame g = random_nonatomic_game(rng);
    const Flow f = random_flow(rng, g);
    const auto x = oracle::flows(g, f);
    double beckmann = 0;
    for (const auto& fac : g.facilities()) {
      beckmann += 0.5 * fac.a * x.at(fac.id) * x.at(fac.id) + fac.b * x.at(fac.id);
    }
    EXPECT_NEAR(potential(g, f, 0.0), beckmann, 1e-9);
    EXPECT_EQ(potential(g, FacilityFlow(g.num_facilities(), 0.0), 0.7), 0.0);
  }
}

TEST(NonatomicPotentialTest, Convex) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int t = 0; t < 200; ++t) {
    const NonatomicGame g = random_nonatomic_game(rng);
    const Flow f = random_flow(rng, g), h = random_flow(rng, g);
    const double s = unit(rng), eps = 2 * unit(rng);
    Flow mix = f;
    for (std::size_t k = 0; k < mix.weights.size(); ++k) {
      for (std::size_t j = 0; j < mix.weights[k].size(); ++j) {
        mix.weights[k][j] = s * f.weights[k][j] + (1 - s) * h.weights[k][j];
      }
    }
    EXPECT_LE(potential(g, mix, eps),
              s * potential(g, f, eps) + (1 - s) * potential(g, h, eps) + 1e-9);
  }
}

TEST(BmwTest, IdenticalFlowsGiveEpsTimesCost) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 50; ++t) {
    const NonatomicGame g = random_nonatomic_game(rng);
    const Flow f = random_flow(rng, g);
    const InequalityCheck c = bmw_check(g, f, f, 0.3);
    EXPECT_NEAR(c.slack, 0.3 * social_cost(g, f), 1e-9);
    EXPECT_TRUE(c.holds);
  }
}

TEST(BmwTest, PigouAgainstOptimum) {
  const NonatomicGame g = pigou_game(0);
  const InequalityCheck c = bmw_check(g, Flow{{{1, 0}}}, Flow{{{0.5, 0.5}}}, 0);
  // LHS 1, RHS 1 * 0.5 + 1 * 0.5.
  EXPECT_TRUE(c.holds);
  EXPECT_NEAR(c.slack, 0.0, 1e-12);
}

TEST(BmwTest, PoaInstanceAgainstOptimumAndOracle) {
  std::mt19937_64 rng(36);
  for (double eps : {0.0, 0.4, 1.0, 1.5, 2.0}) {
    const InstanceBundle b = nonatomic_poa_lb(eps);
    const auto& inst = b.nonatomic();
    const InequalityCheck c = bmw_check(inst.game, inst.equilibrium, inst.optimum, eps);
    EXPECT_TRUE(c.holds);
    EXPECT_GE(c.slack, -1e-9);
    for (int t = 0; t < 20; ++t) {
      const Flow alt = random_flow(rng, inst.game);
      EXPECT_NEAR(bmw_check(inst.game, inst.equilibrium, alt, eps).slack,
                  oracle::bmw_slack(inst.game, inst.equilibrium, alt, eps), 1e-9);
    }
  }
}

TEST(VariationalTest, SelfIsEqualityAndPigouHolds) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    const NonatomicGame g = random_nonatomic_game(rng);
    const Flow f = random_flow(rng, g), h = random_flow(rng, g);
    EXPECT_NEAR(variational_check(g, f, f, 0.5).slack, 0.0, 1e-9);
    EXPECT_NEAR(variational_check(g, f, h, 0.5).slack,
                oracle::variational_slack(g, f, h, 0.5), 1e-9);
  }
  const NonatomicGame p = pigou_game(0.2);
  const double x = 0.6;
  EXPECT_TRUE(variational_check(p, Flow{{{1, 0}}}, Flow{{{x, 1 - x}}}, 0.2).holds);
}

}  // namespace
}  // namespace ecl
