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

#include "ecl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "ecl/errors.hpp"

namespace ecl::io {
namespace {

json rounded(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x);
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ValidationError(std::string("missing key \"") + key + "\"");
  }
  return doc.at(key);
}

template <typename T>
T get_as(const json& doc, const char* key) {
  try {
    return require(doc, key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad value for \"") + key +
                          "\": " + e.what());
  }
}

std::vector<Facility> facilities_from_json(const json& doc) {
  const json& list = require(doc, "facilities");
  if (!list.is_array()) throw ValidationError("\"facilities\" must be a list");
  std::vector<Facility> out;
  for (const auto& f : list) {
    if (!require(f, "id").is_number_integer()) {
      throw ValidationError("facility \"id\" must be an integer");
    }
    out.push_back({get_as<int>(f, "id"), get_as<double>(f, "a"),
                   get_as<double>(f, "b")});
  }
  return out;
}

json facilities_to_json(const std::vector<Facility>& facilities) {
  json list = json::array();
  for (const auto& f : facilities) {
    list.push_back({{"id", f.id}, {"a", f.a}, {"b", f.b}});
  }
  return list;
}

json rational_to_json(const Rational& r) {
  return {{"num", r.num()}, {"den", r.den()}, {"str", r.str()}};
}

}  // namespace

DocumentKind detect_kind(const json& doc) {
  if (!doc.is_object()) return DocumentKind::kUnknown;
  if (doc.contains("family") && doc.contains("game")) {
    return DocumentKind::kBundle;
  }
  if (doc.contains("players")) return DocumentKind::kAtomicGame;
  if (doc.contains("edges")) return DocumentKind::kGraph;
  if (doc.contains("commodities")) return DocumentKind::kNonatomicGame;
  if (doc.contains("choices")) return DocumentKind::kProfile;
  if (doc.contains("weights")) return DocumentKind::kFlow;
  return DocumentKind::kUnknown;
}

const char* kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kAtomicGame: return "atomic game";
    case DocumentKind::kNonatomicGame: return "non-atomic game";
    case DocumentKind::kGraph: return "graph";
    case DocumentKind::kProfile: return "profile";
    case DocumentKind::kFlow: return "flow";
    case DocumentKind::kBundle: return "bundle";
    case DocumentKind::kUnknown: break;
  }
  return "unknown";
}

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::stod(buf);
}

json to_json(const AtomicGame& game) {
  json players = json::array();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    json strategies = json::array();
    for (std::size_t s = 0; s < game.num_strategies(i); ++s) {
      strategies.push_back(game.strategy_ids(i, s));
    }
    players.push_back(std::move(strategies));
  }
  return {{"facilities", facilities_to_json(game.facilities())},
          {"players", std::move(players)}};
}

json to_json(const Profile& profile) { return {{"choices", profile.choices}}; }

json to_json(const NonatomicGame& game) {
  json commodities = json::array();
  for (std::size_t k = 0; k < game.num_commodities(); ++k) {
    json strategies = json::array();
    for (std::size_t s = 0; s < game.commodities()[k].strategies.size(); ++s) {
      strategies.push_back(game.strategy_ids(k, s));
    }
    commodities.push_back({{"rate", game.commodities()[k].rate},
                           {"strategies", std::move(strategies)}});
  }
  return {{"facilities", facilities_to_json(game.facilities())},
          {"commodities", std::move(commodities)}};
}

json to_json(const Flow& flow) { return {{"weights", flow.weights}}; }

json to_json(const RoutingInstance& instance) {
  json edges = json::array();
  for (const auto& e : instance.graph.edges) {
    edges.push_back({{"id", e.id},
                     {"tail", e.tail},
                     {"head", e.head},
                     {"a", e.a},
                     {"b", e.b}});
  }
  json commodities = json::array();
  for (const auto& c : instance.commodities) {
    commodities.push_back(
        {{"source", c.source}, {"sink", c.sink}, {"rate", c.rate}});
  }
  return {{"nodes", instance.graph.nodes},
          {"edges", std::move(edges)},
          {"commodities", std::move(commodities)}};
}

json to_json(const InstanceBundle& bundle) {
  json doc;
  doc["kind"] = "bundle";
  doc["family"] = bundle.metadata.family;
  if (bundle.is_atomic()) {
    const auto& inst = bundle.atomic();
    doc["game"] = to_json(inst.game);
    doc["equilibrium"] = to_json(inst.equilibrium);
    doc["optimum"] = to_json(inst.optimum);
  } else {
    const auto& inst = bundle.nonatomic();
    doc["game"] = to_json(inst.game);
    doc["equilibrium"] = to_json(inst.equilibrium);
    doc["optimum"] = to_json(inst.optimum);
    if (inst.network) doc["network"] = to_json(*inst.network);
  }
  doc["expected_epsilon"] = bundle.expected_epsilon;
  doc["expected_ratio"] = bundle.expected_ratio;
  json exact = json::object();
  for (const auto& [key, value] : bundle.metadata.exact) {
    exact[key] = rational_to_json(value);
  }
  doc["metadata"] = {{"parameters", bundle.metadata.parameters},
                     {"exact", std::move(exact)},
                     {"notes", bundle.metadata.notes}};
  return doc;
}

json to_json(const EpsilonReport& report) {
  json doc = {{"epsilon_star", rounded(report.epsilon_star)},
              {"unbounded", report.unbounded},
              {"witness", nullptr}};
  if (report.witness) {
    doc["witness"] = {{"player", report.witness->player},
                      {"strategy", report.witness->strategy},
                      {"cost", rounded(report.witness_cost)},
                      {"deviation_cost", rounded(report.witness_deviation_cost)}};
  }
  return doc;
}

json to_json(const WardropReport& report) {
  json doc = {{"epsilon_star", rounded(report.epsilon_star)},
              {"unbounded", report.unbounded},
              {"used_threshold", report.used_threshold},
              {"witness", nullptr}};
  if (report.witness) {
    doc["witness"] = {{"commodity", report.witness->commodity},
                      {"used", report.witness->used},
                      {"cheaper", report.witness->cheaper}};
  }
  return doc;
}

json to_json(const EquilibriumSet& set, bool include_equilibria) {
  json doc = {{"epsilon", rounded(set.epsilon)},
              {"equilibrium_count", set.equilibrium_count},
              {"profiles_enumerated", set.profiles_enumerated},
              {"optimum", set.optimum.choices},
              {"opt_cost", rounded(set.opt_cost)},
              {"worst_equilibrium", set.worst_equilibrium.choices},
              {"worst_cost", rounded(set.worst_cost)},
              {"best_equilibrium", set.best_equilibrium.choices},
              {"best_cost", rounded(set.best_cost)},
              {"poa", rounded(set.poa)},
              {"pos", rounded(set.pos)}};
  if (include_equilibria) {
    json list = json::array();
    for (const auto& p : set.equilibria) list.push_back(p.choices);
    doc["equilibria"] = std::move(list);
  }
  return doc;
}

json to_json(const DynamicsResult& result) {
  json steps = json::array();
  for (const auto& s : result.trace.steps) {
    steps.push_back({{"mover", s.mover},
                     {"from", s.from},
                     {"to", s.to},
                     {"delta", rounded(s.delta)},
                     {"potential", rounded(s.potential)}});
  }
  return {{"terminal", result.terminal.choices},
          {"converged", result.converged},
          {"initial_potential", rounded(result.trace.initial_potential)},
          {"steps", std::move(steps)}};
}

json to_json(const SolveResult& result) {
  json doc = {{"weights", result.flow.weights},
              {"objective", rounded(result.objective)},
              {"duality_gap", rounded(result.duality_gap)},
              {"iterations", result.iterations},
              {"converged", result.converged},
              {"possibly_nonunique", result.possibly_nonunique}};
  if (!result.gap_trace.empty()) {
    json gaps = json::array();
    for (double g : result.gap_trace) gaps.push_back(rounded(g));
    json objs = json::array();
    for (double v : result.objective_trace) objs.push_back(rounded(v));
    doc["gap_trace"] = std::move(gaps);
    doc["objective_trace"] = std::move(objs);
  }
  return doc;
}

json to_json(const BoundReport& r) {
  json doc = {{"epsilon", rounded(r.epsilon)},
              {"z_atomic", r.z_atomic},
              {"z_nonatomic", r.z_nonatomic},
              {"atomic_poa", rounded(r.atomic_poa)},
              {"atomic_pos_upper", rounded(r.atomic_pos_upper)},
              {"atomic_pos_lower", rounded(r.atomic_pos_lower)},
              {"atomic_pos_coarse", rounded(r.atomic_pos_coarse)},
              {"nonatomic_poa", rounded(r.nonatomic_poa)},
              {"nonatomic_poa_lower_large", nullptr},
              {"nonatomic_pos", rounded(r.nonatomic_pos)}};
  if (r.nonatomic_poa_lower_large) {
    doc["nonatomic_poa_lower_large"] = rounded(*r.nonatomic_poa_lower_large);
  }
  return doc;
}

AtomicGame atomic_game_from_json(const json& doc) {
  auto players = get_as<std::vector<std::vector<std::vector<int>>>>(doc, "players");
  return AtomicGame(facilities_from_json(doc), players);
}

Profile profile_from_json(const json& doc) {
  const json& list = require(doc, "choices");
  if (!list.is_array()) throw ValidationError("\"choices\" must be a list");
  Profile p;
  for (const auto& c : list) {
    if (!c.is_number_unsigned()) {
      throw ValidationError("\"choices\" entries must be integers >= 0");
    }
    p.choices.push_back(c.get<std::size_t>());
  }
  return p;
}

NonatomicGame nonatomic_game_from_json(const json& doc) {
  const json& list = require(doc, "commodities");
  if (!list.is_array()) throw ValidationError("\"commodities\" must be a list");
  std::vector<NonatomicGame::CommoditySpec> commodities;
  for (const auto& c : list) {
    commodities.push_back(
        {get_as<double>(c, "rate"),
         get_as<std::vector<std::vector<int>>>(c, "strategies")});
  }
  return NonatomicGame(facilities_from_json(doc), commodities);
}

Flow flow_from_json(const json& doc) {
  return {get_as<std::vector<std::vector<double>>>(doc, "weights")};
}

RoutingInstance routing_instance_from_json(const json& doc) {
  RoutingInstance out;
  out.graph.nodes = get_as<std::vector<std::string>>(doc, "nodes");
  const json& edges = require(doc, "edges");
  if (!edges.is_array()) throw ValidationError("\"edges\" must be a list");
  for (const auto& e : edges) {
    out.graph.edges.push_back({get_as<int>(e, "id"),
                               get_as<std::string>(e, "tail"),
                               get_as<std::string>(e, "head"),
                               get_as<double>(e, "a"), get_as<double>(e, "b")});
  }
  if (doc.contains("commodities")) {
    for (const auto& c : doc.at("commodities")) {
      out.commodities.push_back({get_as<std::string>(c, "source"),
                                 get_as<std::string>(c, "sink"),
                                 get_as<double>(c, "rate")});
    }
  }
  validate_graph(out.graph);
  return out;
}

InstanceBundle bundle_from_json(const json& doc) {
  InstanceBundle bundle;
  const json& game = require(doc, "game");
  switch (detect_kind(game)) {
    case DocumentKind::kAtomicGame: {
      AtomicGame g = atomic_game_from_json(game);
      Profile eq = profile_from_json(require(doc, "equilibrium"));
      Profile opt = profile_from_json(require(doc, "optimum"));
      validate_profile(g, eq);
      validate_profile(g, opt);
      bundle.body = AtomicInstance{std::move(g), eq, opt};
      break;
    }
    case DocumentKind::kNonatomicGame: {
      NonatomicGame g = nonatomic_game_from_json(game);
      Flow eq = flow_from_json(require(doc, "equilibrium"));
      Flow opt = flow_from_json(require(doc, "optimum"));
      validate_flow(g, eq);
      validate_flow(g, opt);
      std::optional<RoutingInstance> net;
      if (doc.contains("network")) {
        net = routing_instance_from_json(doc.at("network"));
      }
      bundle.body = NonatomicInstance{std::move(g), eq, opt, std::move(net)};
      break;
    }
    default:
      throw ValidationError("bundle \"game\" is neither an atomic nor a "
                            "non-atomic game");
  }
  bundle.expected_epsilon = get_as<double>(doc, "expected_epsilon");
  bundle.expected_ratio = get_as<double>(doc, "expected_ratio");
  bundle.metadata.family = get_as<std::string>(doc, "family");
  if (doc.contains("metadata")) {
    const json& meta = doc.at("metadata");
    if (meta.contains("parameters")) {
      bundle.metadata.parameters =
          get_as<std::map<std::string, double>>(meta, "parameters");
    }
    if (meta.contains("exact")) {
      for (const auto& [key, value] : meta.at("exact").items()) {
        bundle.metadata.exact[key] = Rational(get_as<std::int64_t>(value, "num"),
                                              get_as<std::int64_t>(value, "den"));
      }
    }
    if (meta.contains("notes")) {
      bundle.metadata.notes = get_as<std::vector<std::string>>(meta, "notes");
    }
  }
  return bundle;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace ecl::io
