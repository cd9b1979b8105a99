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

#ifndef ECL_IO_HPP_
#define ECL_IO_HPP_

#include <filesystem>
#include <nlohmann/json.hpp>

#include "ecl/atomic_game.hpp"
#include "ecl/atomic_solvers.hpp"
#include "ecl/bounds.hpp"
#include "ecl/instances.hpp"
#include "ecl/network.hpp"
#include "ecl/nonatomic_game.hpp"
#include "ecl/nonatomic_solvers.hpp"

namespace ecl::io {

using nlohmann::json;

// Schema of a JSON document, inferred from its keys.
enum class DocumentKind {
  kAtomicGame,     // "players"
  kNonatomicGame,  // "commodities" with "strategies"
  kGraph,          // "edges"
  kProfile,        // "choices"
  kFlow,           // "weights"
  kBundle,         // "family" + "game"
  kUnknown,
};

DocumentKind detect_kind(const json& doc);
const char* kind_name(DocumentKind kind);

// Rounds to `digits` significant digits (report output).
double round_sig(double x, int digits = 12);

// Game, profile and flow documents keep full double precision.
json to_json(const AtomicGame& game);
json to_json(const Profile& profile);
json to_json(const NonatomicGame& game);
json to_json(const Flow& flow);
json to_json(const RoutingInstance& instance);
json to_json(const InstanceBundle& bundle);

// Reports are rounded to 12 significant digits.
json to_json(const EpsilonReport& report);
json to_json(const WardropReport& report);
json to_json(const EquilibriumSet& set, bool include_equilibria = true);
json to_json(const DynamicsResult& result);
json to_json(const SolveResult& result);
json to_json(const BoundReport& report);

// Parsers throw ValidationError on schema problems.
AtomicGame atomic_game_from_json(const json& doc);
Profile profile_from_json(const json& doc);
NonatomicGame nonatomic_game_from_json(const json& doc);
Flow flow_from_json(const json& doc);
RoutingInstance routing_instance_from_json(const json& doc);
InstanceBundle bundle_from_json(const json& doc);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);

}  // namespace ecl::io

#endif  // ECL_IO_HPP_
