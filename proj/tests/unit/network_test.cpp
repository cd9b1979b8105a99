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

#include <map>
#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "ecl/errors.hpp"
#include "ecl/instances.hpp"
#include "ecl/network.hpp"
#include "ecl/random_games.hpp"

namespace ecl {
namespace {

Graph pigou_graph() {
  return Graph{{"s", "t"}, {{0, "s", "t", 1, 0}, {1, "s", "t", 0, 1}}};
}

// Walks a path and returns its node sequence, failing on a broken chain.
std::vector<std::string> walk(const Graph& g, const Path& p,
                              const std::string& source) {
  std::map<int, const Edge*> by_id;
  for (const Edge& e : g.edges) by_id[e.id] = &e;
  std::vector<std::string> nodes{source};
  for (int id : p.edges) {
    const Edge* e = by_id.at(id);
    EXPECT_EQ(e->tail, nodes.back());
    nodes.push_back(e->head);
  }
  return nodes;
}

TEST(GraphTest, Validation) {
  EXPECT_NO_THROW(validate_graph(pigou_graph()));
  EXPECT_THROW(validate_graph(Graph{{"s", "s"}, {}}), ValidationError);
  EXPECT_THROW(validate_graph(Graph{{"s", "t"}, {{0, "s", "t", 1, 0}, {0, "s", "t", 1, 0}}}),
               ValidationError);
  EXPECT_THROW(validate_graph(Graph{{"s", "t"}, {{0, "s", "x", 1, 0}}}), ValidationError);
  EXPECT_THROW(expand(Graph{{"s", "t"}, {{0, "s", "t", -1, 0}}}, {{"s", "t", 1}}),
               ValidationError);
}

TEST(EnumeratePathsTest, PigouHasTwo) {
  const auto paths = enumerate_paths(pigou_graph(), "s", "t");
  ASSERT_EQ(paths.size(), 2u);
  std::set<std::vector<int>> sets;
  for (const Path& p : paths) sets.insert(p.edge_set());
  EXPECT_EQ(sets, (std::set<std::vector<int>>{{0}, {1}}));
}

TEST(EnumeratePathsTest, SingleEdge) {
  const Graph g{{"s", "t"}, {{7, "s", "t", 1, 0}}};
  const auto paths = enumerate_paths(g, "s", "t");
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].edges, (std::vector<int>{7}));
}

TEST(EnumeratePathsTest, Errors) {
  const Graph g{{"s", "t", "x"}, {{0, "s", "t", 1, 0}, {1, "x", "s", 1, 0}}};
  EXPECT_THROW(enumerate_paths(g, "t", "s"), ValidationError);
  EXPECT_THROW(enumerate_paths(g, "s", "nowhere"), ValidationError);
  EXPECT_THROW(enumerate_paths(g, "s", "s"), ValidationError);
  EXPECT_THROW(enumerate_paths(g, "s", "t", 0), DomainError);
}

// Layered graph with k parallel edges per layer has k^layers paths.
Graph layered(int layers, int width) {
  Graph g;
  for (int l = 0; l <= layers; ++l) g.nodes.push_back("n" + std::to_string(l));
  int id = 0;
  for (int l = 0; l < layers; ++l) {
    for (int w = 0; w < width; ++w) {
      g.edges.push_back({id++, g.nodes[l], g.nodes[l + 1], 1, 0});
    }
  }
  return g;
}

TEST(EnumeratePathsTest, CapIsEnforced) {
  const Graph g = layered(5, 4);  // 1024 paths
  EXPECT_EQ(enumerate_paths(g, "n0", "n5").size(), 1024u);
  EXPECT_EQ(enumerate_paths(g, "n0", "n5", 1024).size(), 1024u);
  EXPECT_THROW(enumerate_paths(g, "n0", "n5", 1023), CapacityError);
  EXPECT_THROW(expand(g, {{"n0", "n5", 1}}, 100), CapacityError);
}

TEST(EnumeratePathsTest, PathsAreSimpleAndDistinct) {
  // Complete digraph on five nodes.
  Graph g;
  for (int i = 0; i < 5; ++i) g.nodes.push_back(std::to_string(i));
  int id = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (i != j) g.edges.push_back({id++, g.nodes[i], g.nodes[j], 1, 0});
    }
  }
  const auto paths = enumerate_paths(g, "0", "4");
  // 1 + 3 + 3*2 + 3*2*1 simple paths.
  EXPECT_EQ(paths.size(), 16u);
  std::set<std::vector<int>> seen;
  for (const Path& p : paths) {
    const auto nodes = walk(g, p, "0");
    EXPECT_EQ(nodes.back(), "4");
    EXPECT_EQ(std::set<std::string>(nodes.begin(), nodes.end()).size(), nodes.size());
    EXPECT_TRUE(seen.insert(p.edges).second);
  }
}

TEST(ExpandTest, CostsAreEdgeSums) {
  const InstanceBundle b = nonatomic_poa_lb_network(0.25);
  const auto& inst = b.nonatomic();
  ASSERT_TRUE(inst.network.has_value());
  const Graph& graph = inst.network->graph;
  std::map<int, Edge> edges;
  for (const Edge& e : graph.edges) edges[e.id] = e;
  std::mt19937_64 rng(51);
  for (int t = 0; t < 20; ++t) {
    const Flow f = random_flow(rng, inst.game);
    const FacilityFlow x = facility_flows(inst.game, f);
    for (std::size_t k = 0; k < inst.game.num_commodities(); ++k) {
      for (std::size_t p = 0; p < inst.game.commodities()[k].strategies.size(); ++p) {
        double sum = 0;
        for (int id : inst.game.strategy_ids(k, p)) {
          const Edge& e = edges.at(id);
          sum += e.a * x[inst.game.position_of(id)] + e.b;
        }
        EXPECT_NEAR(strategy_latency(inst.game, f, k, p), sum, 1e-12);
      }
    }
  }
}

TEST(ExpandTest, DesignatedPathsPresent) {
  const InstanceBundle b = nonatomic_poa_lb_network(0.5);
  const auto& inst = b.nonatomic();
  const Graph& graph = inst.network->graph;
  EXPECT_EQ(graph.edges.size(), 18u);
  for (std::size_t k = 0; k < 3; ++k) {
    const int i = static_cast<int>(k);
    const auto& commodity = inst.game.commodities()[k];
    // The all-S1 and all-S2 flows used by the bundle carry unit rate.
    std::size_t s1 = 0, s2 = 0;
    for (std::size_t p = 0; p < commodity.strategies.size(); ++p) {
      if (inst.optimum.weights[k][p] == 1.0) s1 = p;
      if (inst.equilibrium.weights[k][p] == 1.0) s2 = p;
    }
    std::set<int> core1, core2;
    for (int id : inst.game.strategy_ids(k, s1)) if (id < 6) core1.insert(id);
    for (int id : inst.game.strategy_ids(k, s2)) if (id < 6) core2.insert(id);
    EXPECT_EQ(core1, (std::set<int>{i, 3 + i}));
    EXPECT_EQ(core2, (std::set<int>{(i + 1) % 3, (i + 2) % 3}));
  }
  EXPECT_NEAR(b.measured_epsilon(), 0.5, 1e-12);
  EXPECT_NEAR(b.measured_ratio(), 4 * 1.5 / 2.5, 1e-12);
}

TEST(ExpandTest, PathsFollowGraph) {
  const InstanceBundle b = nonatomic_poa_lb_network(0.5);
  const auto& net = *b.nonatomic().network;
  for (const CommoditySpec& c : net.commodities) {
    for (const Path& p : enumerate_paths(net.graph, c.source, c.sink)) {
      const auto nodes = walk(net.graph, p, c.source);
      EXPECT_EQ(nodes.back(), c.sink);
      EXPECT_EQ(std::set<std::string>(nodes.begin(), nodes.end()).size(),
                nodes.size());
    }
  }
}

TEST(ExpandTest, RateAndFacilities) {
  const NonatomicGame g = expand(pigou_graph(), {{"s", "t", 2.0}});
  EXPECT_EQ(g.num_commodities(), 1u);
  EXPECT_EQ(g.commodities()[0].rate, 2.0);
  EXPECT_EQ(g.num_facilities(), 2u);
  EXPECT_EQ(g.commodities()[0].strategies.size(), 2u);
}

}  // namespace
}  // namespace ecl
