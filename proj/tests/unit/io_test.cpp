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
#include <filesystem>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "ecl/errors.hpp"
#include "ecl/instances.hpp"
#include "ecl/io.hpp"
#include "ecl/random_games.hpp"

namespace ecl {
namespace {

using io::json;

TEST(IoTest, AtomicGameRoundTrip) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const AtomicGame g = random_atomic_game(rng);
    const json doc = io::to_json(g);
    EXPECT_EQ(io::detect_kind(doc), io::DocumentKind::kAtomicGame);
    const AtomicGame back = io::atomic_game_from_json(json::parse(doc.dump()));
    EXPECT_EQ(io::to_json(back), doc);
    const Profile p = random_profile(rng, g);
    const json pdoc = io::to_json(p);
    EXPECT_EQ(io::detect_kind(pdoc), io::DocumentKind::kProfile);
    EXPECT_EQ(io::profile_from_json(pdoc), p);
    EXPECT_EQ(social_cost(back, p), social_cost(g, p));
  }
}

TEST(IoTest, NonatomicGameAndFlowRoundTrip) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 50; ++t) {
    const NonatomicGame g = random_nonatomic_game(rng);
    const json doc = io::to_json(g);
    EXPECT_EQ(io::detect_kind(doc), io::DocumentKind::kNonatomicGame);
    const NonatomicGame back = io::nonatomic_game_from_json(json::parse(doc.dump()));
    EXPECT_EQ(io::to_json(back), doc);
    const Flow f = random_flow(rng, g);
    const json fdoc = io::to_json(f);
    EXPECT_EQ(io::detect_kind(fdoc), io::DocumentKind::kFlow);
    const Flow fb = io::flow_from_json(json::parse(fdoc.dump()));
    EXPECT_EQ(fb.weights, f.weights);
  }
}

TEST(IoTest, BundleRoundTrip) {
  std::vector<InstanceBundle> bundles = {
      atomic_poa_lb(0.5), nonatomic_poa_lb(1.5), nonatomic_poa_lb_network(0.25),
      pigou(0.5), atomic_pos_lb(0.2, 4, 3, 0.01), two_links(5, 0.5)};
  for (const InstanceBundle& b : bundles) {
    const json doc = io::to_json(b);
    EXPECT_EQ(io::detect_kind(doc), io::DocumentKind::kBundle);
    const InstanceBundle back = io::bundle_from_json(json::parse(doc.dump()));
    EXPECT_EQ(io::to_json(back), doc);
    EXPECT_EQ(back.metadata.family, b.metadata.family);
    EXPECT_EQ(back.measured_ratio(), b.measured_ratio());
    EXPECT_EQ(back.measured_epsilon(), b.measured_epsilon());
    EXPECT_EQ(back.metadata.exact, b.metadata.exact);
  }
  const json net = io::to_json(*nonatomic_poa_lb_network(0.5).nonatomic().network);
  EXPECT_EQ(io::detect_kind(net), io::DocumentKind::kGraph);
  EXPECT_EQ(io::to_json(io::routing_instance_from_json(net)), net);
}

TEST(IoTest, ExactRationalsSerialized) {
  const json doc = io::to_json(atomic_poa_lb(0.0));
  const json& ratio = doc.at("metadata").at("exact").at("ratio");
  EXPECT_EQ(ratio.at("num"), 5);
  EXPECT_EQ(ratio.at("den"), 2);
  EXPECT_EQ(ratio.at("str"), "5/2");
}

TEST(IoTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "ecl_io_test.json";
  const json doc = io::to_json(pigou(0.25));
  io::write_json_file(path, doc);
  EXPECT_EQ(io::read_json_file(path), doc);
  std::filesystem::remove(path);
  EXPECT_THROW(io::read_json_file(path), Error);
}

TEST(IoTest, RoundSig) {
  EXPECT_EQ(io::round_sig(0.1 + 0.2), 0.3);
  EXPECT_EQ(io::round_sig(1.0 / 3.0, 3), 0.333);
  EXPECT_EQ(io::round_sig(0.0), 0.0);
  EXPECT_EQ(io::round_sig(-2.5), -2.5);
}

TEST(IoTest, ReportsRoundAndNullNonFinite) {
  EpsilonReport r;
  r.epsilon_star = std::numeric_limits<double>::infinity();
  r.unbounded = true;
  const json doc = io::to_json(r);
  EXPECT_TRUE(doc.at("epsilon_star").is_null());
  EXPECT_EQ(doc.at("unbounded"), true);
  const json b = io::to_json(bound_report(0.5));
  EXPECT_TRUE(b.at("nonatomic_poa_lower_large").is_null());
  EXPECT_EQ(b.at("atomic_poa"), io::round_sig(atomic_poa_bound(0.5)));
  EXPECT_FALSE(io::to_json(bound_report(2.0)).at("nonatomic_poa_lower_large").is_null());
}

TEST(IoTest, MalformedInputIsValidationError) {
  EXPECT_THROW(io::atomic_game_from_json(json::parse(R"({"players": 3})")),
               ValidationError);
  EXPECT_THROW(io::atomic_game_from_json(json::parse(
                   R"({"facilities": [{"id": 0, "a": 1, "b": 0}], "players": [[[1]]]})")),
               ValidationError);
  EXPECT_THROW(io::nonatomic_game_from_json(json::parse(
                   R"({"facilities": [{"id": 0, "a": 1, "b": -1}],
                       "commodities": [{"rate": 1, "strategies": [[0]]}]})")),
               ValidationError);
  EXPECT_THROW(io::profile_from_json(json::parse(R"({"choices": [-1]})")),
               ValidationError);
  EXPECT_THROW(io::flow_from_json(json::parse(R"({"weights": "x"})")),
               ValidationError);
  EXPECT_THROW(io::bundle_from_json(json::parse(R"({"family": "pigou", "game": {}})")),
               ValidationError);
  EXPECT_EQ(io::detect_kind(json::parse(R"({"foo": 1})")), io::DocumentKind::kUnknown);
}

TEST(IoTest, AtomicGameAcceptsNegativeConstant) {
  const json doc = json::parse(
      R"({"facilities": [{"id": 3, "a": 2, "b": -1}, {"id": 1, "a": 1, "b": 0}],
          "players": [[[3], [1]], [[1]]]})");
  const AtomicGame g = io::atomic_game_from_json(doc);
  EXPECT_EQ(g.num_players(), 2u);
  EXPECT_EQ(g.facilities().front().id, 1);
  EXPECT_THROW(io::atomic_game_from_json(json::parse(
                   R"({"facilities": [{"id": 0, "a": 1, "b": -2}],
                       "players": [[[0]]]})")),
               ValidationError);
}

}  // namespace
}  // namespace ecl
