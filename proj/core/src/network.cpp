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

#include "ecl/network.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ecl/errors.hpp"

namespace ecl {

void validate_graph(const Graph& graph) {
  std::set<std::string> nodes;
  for (const std::string& v : graph.nodes) {
    if (!nodes.insert(v).second) {
      throw ValidationError("duplicate node '" + v + "'");
    }
  }
  std::set<int> ids;
  for (const Edge& e : graph.edges) {
    if (!ids.insert(e.id).second) {
      throw ValidationError("duplicate edge id " + std::to_string(e.id));
    }
    if (!nodes.contains(e.tail) || !nodes.contains(e.head)) {
      throw ValidationError("edge " + std::to_string(e.id) +
                            " has an endpoint that is not a node");
    }
  }
  std::vector<Facility> facilities;
  for (const Edge& e : graph.edges) facilities.push_back({e.id, e.a, e.b});
  validate_facilities(facilities, LatencyDomain::kNonatomic);
}

std::vector<int> Path::edge_set() const {
  std::vector<int> ids = edges;
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& graph, const std::string& sink, std::size_t cap)
      : sink_(sink), cap_(cap) {
    for (const Edge& e : graph.edges) {
      if (e.tail != e.head) out_[e.tail].push_back(&e);
    }
    for (auto& [node, edges] : out_) {
      std::sort(edges.begin(), edges.end(),
                [](const Edge* x, const Edge* y) { return x->id < y->id; });
    }
  }

  void run(const std::string& source) {
    visited_.insert(source);
    visit(source);
  }

  std::vector<Path>& paths() { return paths_; }
  std::uint64_t count() const { return count_; }
  bool truncated() const { return truncated_; }

 private:
  // Counting continues past the cap (without storing) to report a size
  // estimate, up to this many paths.
  static constexpr std::uint64_t kCountLimit = 10'000'000;

  void visit(const std::string& node) {
    if (count_ >= kCountLimit) {
      truncated_ = true;
      return;
    }
    if (node == sink_) {
      ++count_;
      if (paths_.size() < cap_) paths_.push_back({stack_});
      return;
    }
    auto it = out_.find(node);
    if (it == out_.end()) return;
    for (const Edge* e : it->second) {
      if (visited_.contains(e->head)) continue;
      visited_.insert(e->head);
      stack_.push_back(e->id);
      visit(e->head);
      stack_.pop_back();
      visited_.erase(e->head);
    }
  }

  std::string sink_;
  std::size_t cap_;
  std::map<std::string, std::vector<const Edge*>> out_;
  std::set<std::string> visited_;
  std::vector<int> stack_;
  std::vector<Path> paths_;
  std::uint64_t count_ = 0;
  bool truncated_ = false;
};

}  // namespace

std::vector<Path> enumerate_paths(const Graph& graph, const std::string& source,
                                  const std::string& sink, std::size_t cap) {
  if (cap < 1) throw DomainError("path cap must be >= 1");
  validate_graph(graph);
  const auto known = [&](const std::string& v) {
    return std::find(graph.nodes.begin(), graph.nodes.end(), v) !=
           graph.nodes.end();
  };
  if (!known(source) || !known(sink)) {
    throw ValidationError("commodity endpoint is not a node");
  }
  if (source == sink) throw ValidationError("source equals sink");

  PathSearch search(graph, sink, cap);
  search.run(source);
  if (search.count() > cap) {
    throw CapacityError(
        (search.truncated() ? "at least " : "") +
            std::to_string(search.count()) + " simple paths from '" + source +
            "' to '" + sink + "' exceed the cap of " + std::to_string(cap),
        search.count());
  }
  if (search.count() == 0) {
    throw ValidationError("no path from '" + source + "' to '" + sink + "'");
  }
  std::vector<Path> paths = std::move(search.paths());
  std::sort(paths.begin(), paths.end(),
            [](const Path& x, const Path& y) { return x.edges < y.edges; });
  return paths;
}

NonatomicGame expand(const Graph& graph,
                     const std::vector<CommoditySpec>& commodities,
                     std::size_t cap) {
  std::vector<Facility> facilities;
  facilities.reserve(graph.edges.size());
  for (const Edge& e : graph.edges) facilities.push_back({e.id, e.a, e.b});
  std::vector<NonatomicGame::CommoditySpec> specs;
  for (const CommoditySpec& c : commodities) {
    NonatomicGame::CommoditySpec spec;
    spec.rate = c.rate;
    for (const Path& p : enumerate_paths(graph, c.source, c.sink, cap)) {
      spec.strategies.push_back(p.edge_set());
    }
    specs.push_back(std::move(spec));
  }
  return NonatomicGame(std::move(facilities), specs);
}

NonatomicGame expand(const RoutingInstance& instance, std::size_t cap) {
  return expand(instance.graph, instance.commodities, cap);
}

}  // namespace ecl
