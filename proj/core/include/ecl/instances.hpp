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

#ifndef ECL_INSTANCES_HPP_
#define ECL_INSTANCES_HPP_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecl/atomic_game.hpp"
#include "ecl/network.hpp"
#include "ecl/nonatomic_game.hpp"
#include "ecl/rational.hpp"

namespace ecl {

struct AtomicInstance {
  AtomicGame game;
  Profile equilibrium;
  Profile optimum;
};

struct NonatomicInstance {
  NonatomicGame game;
  Flow equilibrium;
  Flow optimum;
  // Routing realization the game was compiled from, when there is one.
  std::optional<RoutingInstance> network;
};

struct BundleMetadata {
  std::string family;
  std::map<std::string, double> parameters;
  std::map<std::string, Rational> exact;  // exact values when derivable
  std::vector<std::string> notes;
};

// A generated game with its designated equilibrium and optimum. Generators
// certify on return that the equilibrium's epsilon and the cost ratio match
// the expected values to 1e-9, and throw ConstructionError otherwise.
struct InstanceBundle {
  std::variant<AtomicInstance, NonatomicInstance> body;
  double expected_epsilon = 0.0;
  double expected_ratio = 1.0;
  BundleMetadata metadata;

  bool is_atomic() const {
    return std::holds_alternative<AtomicInstance>(body);
  }
  const AtomicInstance& atomic() const {
    return std::get<AtomicInstance>(body);
  }
  const NonatomicInstance& nonatomic() const {
    return std::get<NonatomicInstance>(body);
  }

  double measured_epsilon() const;
  double measured_ratio() const;
};

// Re-runs the generation-time certification; throws ConstructionError.
void certify(const InstanceBundle& bundle, double tol = kTolerance);

// z+2 players, 2z+4 facilities; the all-S2 profile is an eps-Nash equilibrium
// whose cost ratio to all-S1 matches the atomic PoA bound. On a z boundary
// (where the gamma denominator vanishes) the construction uses z-1.
InstanceBundle atomic_poa_lb(double epsilon);

// eps <= 1: three unit commodities over alpha (l=x) and beta (l=gamma)
// facilities. eps > 1: z+2 commodities with z = floor(1+eps), or z = eps
// when 1+eps is integral.
InstanceBundle nonatomic_poa_lb(double epsilon);

// The eps <= 1 construction realized as a three-commodity routing network
// with zero-latency connector edges, compiled through expand().
InstanceBundle nonatomic_poa_lb_network(double epsilon);

// The two-link network with l(x)=x and l(x)=1+eps. Requires eps in [0,1).
InstanceBundle pigou(double epsilon);

// Number of grid flows used to certify that every flow with upper-edge mass
// is not an eps-Wardrop flow.
inline constexpr int kPigouUniquenessGrid = 1000;

// Dominant-strategy construction with n free players and lambda fixed
// players on a shared unit facility. delta > 0 makes the dominance strict.
InstanceBundle atomic_pos_lb(double epsilon, int n, int lambda, double delta);

// Closed-form cost ratio of atomic_pos_lb without building the game.
double atomic_pos_lb_ratio(double epsilon, int n, int lambda, double delta);

// lambda in 0..5n maximizing atomic_pos_lb_ratio (ties: smallest lambda).
int atomic_pos_lb_best_lambda(double epsilon, int n, double delta);

// Two parallel links l1(x) = (2n-1)x - gamma, l2(x) = x. The designated
// profile (one player on link 1) is optimal and only a
// (1 - (1+gamma)/n)-equilibrium; it is both `equilibrium` and `optimum`.
InstanceBundle two_links(int n, double gamma);

// Families accepted by the generator front end.
inline const std::vector<std::string> kFamilies = {
    "atomic-poa", "nonatomic-poa", "pigou", "atomic-pos", "two-links"};

}  // namespace ecl

#endif  // ECL_INSTANCES_HPP_
