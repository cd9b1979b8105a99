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

#ifndef ECL_NETWORK_HPP_
#define ECL_NETWORK_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ecl/nonatomic_game.hpp"

namespace ecl {

struct Edge {
  int id = 0;
  std::string tail;
  std::string head;
  double a = 0.0;
  double b = 0.0;
};

// Directed graph with linear edge latencies.
struct Graph {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
};

struct CommoditySpec {
  std::string source;
  std::string sink;
  double rate = 1.0;
};

// A graph together with its source-sink demands (the graph JSON format).
struct RoutingInstance {
  Graph graph;
  std::vector<CommoditySpec> commodities;
};

void validate_graph(const Graph& graph);

// Simple directed path; `edges` holds edge ids in traversal order.
struct Path {
  std::vector<int> edges;

  std::vector<int> edge_set() const;  // sorted ids
};

inline constexpr std::size_t kDefaultPathCap = 10'000;

// All simple source->sink paths, ordered lexicographically by edge-id
// sequence. Throws CapacityError beyond `cap` paths and ValidationError if
// none exists.
std::vector<Path> enumerate_paths(const Graph& graph, const std::string& source,
                                  const std::string& sink,
                                  std::size_t cap = kDefaultPathCap);

// Compiles the routing instance to strategies-as-sets form: facilities are
// the edges, commodity k's strategies are the paths of enumerate_paths in
// the same order.
NonatomicGame expand(const Graph& graph,
                     const std::vector<CommoditySpec>& commodities,
                     std::size_t cap = kDefaultPathCap);
NonatomicGame expand(const RoutingInstance& instance,
                     std::size_t cap = kDefaultPathCap);

}  // namespace ecl

#endif  // ECL_NETWORK_HPP_
