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

#include "ecl/instances.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ecl/bounds.hpp"
#include "ecl/errors.hpp"

namespace ecl {
namespace {

bool close(double measured, double expected, double tol) {
  if (!std::isfinite(measured)) return false;
  return std::fabs(measured - expected) <= tol * std::max(1.0, std::fabs(expected));
}

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

void check_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw DomainError("epsilon must be a finite value >= 0");
  }
}

// Runs `fn` on the exact value of epsilon when it has a small rational form.
// Overflow inside `fn` just drops the exact metadata.
template <typename Fn>
void with_exact(double epsilon, BundleMetadata& meta, Fn fn) {
  const auto e = Rational::from_double(epsilon, 10000);
  if (!e) return;
  try {
    fn(*e, meta.exact);
  } catch (const std::overflow_error&) {
    meta.exact.clear();
  }
}

InstanceBundle finish(InstanceBundle bundle) {
  certify(bundle);
  return bundle;
}

}  // namespace

double InstanceBundle::measured_epsilon() const {
  if (is_atomic()) {
    const auto& inst = atomic();
    return profile_epsilon(inst.game, inst.equilibrium).epsilon_star;
  }
  const auto& inst = nonatomic();
  return flow_epsilon(inst.game, inst.equilibrium).epsilon_star;
}

double InstanceBundle::measured_ratio() const {
  if (is_atomic()) {
    const auto& inst = atomic();
    return social_cost(inst.game, inst.equilibrium) /
           social_cost(inst.game, inst.optimum);
  }
  const auto& inst = nonatomic();
  return social_cost(inst.game, inst.equilibrium) /
         social_cost(inst.game, inst.optimum);
}

void certify(const InstanceBundle& bundle, double tol) {
  const double eps = bundle.measured_epsilon();
  if (!close(eps, bundle.expected_epsilon, tol)) {
    throw ConstructionError(bundle.metadata.family +
                            ": equilibrium epsilon " + fmt(eps) +
                            " != expected " + fmt(bundle.expected_epsilon));
  }
  const double ratio = bundle.measured_ratio();
  if (!close(ratio, bundle.expected_ratio, tol)) {
    throw ConstructionError(bundle.metadata.family + ": cost ratio " +
                            fmt(ratio) + " != expected " +
                            fmt(bundle.expected_ratio));
  }
}

InstanceBundle atomic_poa_lb(double epsilon) {
  check_epsilon(epsilon);
  const int z_max = z_of_epsilon(epsilon);
  const double u = 1.0 + epsilon;
  int z = z_max;
  std::vector<std::string> notes;
  if (u * (z + 1) - static_cast<double>(z) * z <= 1e-12 * u * (z + 1)) {
    z = z_max - 1;
    notes.push_back("z boundary: used z-1 = " + std::to_string(z) +
                    " (gamma denominator vanishes at z = " +
                    std::to_string(z_max) + ")");
  }
  const double den = u * (z + 1) - static_cast<double>(z) * z;
  if (z < 1 || den <= 0.0) {
    throw ConstructionError("atomic-poa: no admissible z at eps=" +
                            fmt(epsilon));
  }
  double gamma = ((z + 1.0) * (z + 1.0) - u * (z + 2)) / den;
  if (gamma < 0.0 && gamma > -1e-12) gamma = 0.0;

  const int m = z + 2;
  std::vector<Facility> facilities;
  for (int i = 0; i < m; ++i) facilities.push_back({i, 1.0, 0.0});
  for (int i = 0; i < m; ++i) facilities.push_back({m + i, gamma, 0.0});
  std::vector<std::vector<std::vector<int>>> players;
  for (int i = 0; i < m; ++i) {
    std::vector<int> s1 = {i, m + i};
    std::vector<int> s2;
    for (int j = 0; j < m; ++j) {
      if (j != i) s2.push_back(j);
    }
    for (int k = 1; k <= z; ++k) s2.push_back(m + (i + k) % m);
    players.push_back({s1, s2});
  }

  AtomicGame game(std::move(facilities), players);
  Profile eq{std::vector<std::size_t>(m, 1)};
  Profile opt{std::vector<std::size_t>(m, 0)};
  InstanceBundle bundle{AtomicInstance{std::move(game), eq, opt}, epsilon,
                        atomic_poa_bound_at(epsilon, z), {}};
  auto& meta = bundle.metadata;
  meta.family = "atomic-poa";
  meta.parameters = {{"epsilon", epsilon},
                     {"z", static_cast<double>(z)},
                     {"gamma", gamma},
                     {"players", static_cast<double>(m)}};
  meta.notes = notes;
  with_exact(epsilon, meta, [&](const Rational& e, auto& exact) {
    const Rational ue = Rational(1) + e;
    const Rational zr(z);
    exact["epsilon"] = e;
    exact["gamma"] = ((zr + 1) * (zr + 1) - ue * (zr + 2)) /
                     (ue * (zr + 1) - zr * zr);
    exact["ratio"] = ue * (zr * zr + Rational(3) * zr + 1) /
                     (Rational(2) * zr - e);
  });
  return finish(std::move(bundle));
}

InstanceBundle nonatomic_poa_lb(double epsilon) {
  check_epsilon(epsilon);
  const double u = 1.0 + epsilon;
  std::vector<Facility> facilities;
  std::vector<NonatomicGame::CommoditySpec> commodities;
  InstanceBundle bundle;
  auto& meta = bundle.metadata;
  meta.family = "nonatomic-poa";
  meta.parameters["epsilon"] = epsilon;

  int m = 3;
  int z = 1;
  double gamma = 0.0;
  if (epsilon <= 1.0) {
    gamma = 2.0 * (1.0 - epsilon) / u;
    for (int i = 0; i < m; ++i) facilities.push_back({i, 1.0, 0.0});
    for (int i = 0; i < m; ++i) facilities.push_back({m + i, 0.0, gamma});
    for (int i = 0; i < m; ++i) {
      std::vector<int> s2;
      for (int j = 0; j < m; ++j) {
        if (j != i) s2.push_back(j);
      }
      commodities.push_back({1.0, {{i, m + i}, s2}});
    }
    bundle.expected_ratio = 4.0 * u / (3.0 - epsilon);
    with_exact(epsilon, meta, [&](const Rational& e, auto& exact) {
      exact["epsilon"] = e;
      exact["gamma"] = Rational(2) * (Rational(1) - e) / (Rational(1) + e);
      exact["ratio"] = Rational(4) * (Rational(1) + e) / (Rational(3) - e);
    });
  } else {
    const double zf = std::floor(u);
    const bool integral = std::fabs(u - std::round(u)) <= 1e-12 * u;
    z = integral ? static_cast<int>(std::round(u)) - 1 : static_cast<int>(zf);
    if (integral) {
      meta.notes.push_back(
          "integral 1+eps: used z = eps (gamma denominator vanishes at "
          "z = 1+eps), gamma = 0");
    }
    const double den = u * z - static_cast<double>(z) * z;
    gamma = integral ? 0.0 : ((z + 1.0) * (z + 1.0) - u * (z + 1)) / den;
    m = z + 2;
    for (int i = 0; i < m; ++i) facilities.push_back({i, 1.0, 0.0});
    for (int i = 0; i < m; ++i) facilities.push_back({m + i, gamma, 0.0});
    for (int i = 0; i < m; ++i) {
      std::vector<int> s2;
      for (int j = 0; j < m; ++j) {
        if (j != i) s2.push_back(j);
      }
      for (int k = 1; k <= z; ++k) s2.push_back(m + (i + k) % m);
      commodities.push_back({1.0, {{i, m + i}, s2}});
    }
    bundle.expected_ratio = integral ? u * u : nonatomic_poa_lower_large(epsilon);
    with_exact(epsilon, meta, [&](const Rational& e, auto& exact) {
      const Rational ue = Rational(1) + e;
      const Rational zr(z);
      exact["epsilon"] = e;
      exact["gamma"] =
          integral ? Rational(0)
                   : ((zr + 1) * (zr + 1) - ue * (zr + 1)) / (ue * zr - zr * zr);
      exact["ratio"] = integral ? ue * ue
                                : ue * zr * (zr + 1) / (Rational(2) * zr - e);
    });
    meta.parameters["z"] = z;
  }
  meta.parameters["gamma"] = gamma;
  meta.parameters["commodities"] = m;

  NonatomicGame game(std::move(facilities), commodities);
  Flow eq = vertex_flow(game, std::vector<std::size_t>(m, 1));
  Flow opt = vertex_flow(game, std::vector<std::size_t>(m, 0));
  bundle.body = NonatomicInstance{std::move(game), eq, opt, std::nullopt};
  bundle.expected_epsilon = epsilon;
  return finish(std::move(bundle));
}

InstanceBundle nonatomic_poa_lb_network(double epsilon) {
  check_epsilon(epsilon);
  if (epsilon > 1.0) {
    throw DomainError("the routing realization exists for eps <= 1 only");
  }
  const double gamma = 2.0 * (1.0 - epsilon) / (1.0 + epsilon);
  auto s = [](const char* prefix, int i) {
    return std::string(prefix) + std::to_string(i);
  };
  auto sink = [](int i) { return std::to_string(i) + "'"; };

  RoutingInstance net;
  for (int i = 1; i <= 3; ++i) {
    net.graph.nodes.push_back(std::to_string(i));
    net.graph.nodes.push_back(s("u", i));
    net.graph.nodes.push_back(s("v", i));
    net.graph.nodes.push_back(sink(i));
  }
  int next_id = 0;
  // alpha_j: u_j -> v_j with l(x) = x; beta_j: v_j -> j' with l(x) = gamma.
  for (int j = 1; j <= 3; ++j) {
    net.graph.edges.push_back({next_id++, s("u", j), s("v", j), 1.0, 0.0});
  }
  for (int j = 1; j <= 3; ++j) {
    net.graph.edges.push_back({next_id++, s("v", j), sink(j), 0.0, gamma});
  }
  // Zero-latency connectors. Commodity i enters u_i (for S1) and u_{i+1}
  // (for S2), walks alpha_{i+1}, alpha_{i+2} and exits to i'.
  for (int i = 1; i <= 3; ++i) {
    const int j1 = i % 3 + 1;
    const int j2 = j1 % 3 + 1;
    for (const auto& [tail, head] :
         std::vector<std::pair<std::string, std::string>>{
             {std::to_string(i), s("u", i)},
             {std::to_string(i), s("u", j1)},
             {s("v", j1), s("u", j2)},
             {s("v", j2), sink(i)}}) {
      net.graph.edges.push_back({next_id++, tail, head, 0.0, 0.0});
    }
  }
  for (int i = 1; i <= 3; ++i) {
    net.commodities.push_back({std::to_string(i), sink(i), 1.0});
  }

  NonatomicGame game = expand(net);
  // Locate the designated paths by their non-connector edges.
  std::vector<std::size_t> s1(3), s2(3);
  for (std::size_t k = 0; k < 3; ++k) {
    const int i = static_cast<int>(k) + 1;
    const int j1 = i % 3 + 1;
    const int j2 = j1 % 3 + 1;
    const std::vector<int> want1 = {i - 1, 3 + i - 1};
    const std::vector<int> want2 = {std::min(j1, j2) - 1, std::max(j1, j2) - 1};
    bool found1 = false, found2 = false;
    for (std::size_t p = 0; p < game.commodities()[k].strategies.size(); ++p) {
      std::vector<int> core;
      for (int id : game.strategy_ids(k, p)) {
        if (id < 6) core.push_back(id);
      }
      if (core == want1 && game.strategy_ids(k, p).size() == 3) {
        s1[k] = p;
        found1 = true;
      }
      if (core == want2 && game.strategy_ids(k, p).size() == 5) {
        s2[k] = p;
        found2 = true;
      }
    }
    if (!found1 || !found2) {
      throw ConstructionError("nonatomic-poa network: designated path missing");
    }
  }

  InstanceBundle bundle;
  bundle.body = NonatomicInstance{game, vertex_flow(game, s2),
                                  vertex_flow(game, s1), net};
  bundle.expected_epsilon = epsilon;
  bundle.expected_ratio = 4.0 * (1.0 + epsilon) / (3.0 - epsilon);
  auto& meta = bundle.metadata;
  meta.family = "nonatomic-poa";
  meta.parameters = {{"epsilon", epsilon}, {"gamma", gamma}, {"commodities", 3}};
  meta.notes.push_back("routing realization with zero-latency connectors");
  with_exact(epsilon, meta, [&](const Rational& e, auto& exact) {
    exact["epsilon"] = e;
    exact["gamma"] = Rational(2) * (Rational(1) - e) / (Rational(1) + e);
    exact["ratio"] = Rational(4) * (Rational(1) + e) / (Rational(3) - e);
  });
  return finish(std::move(bundle));
}

InstanceBundle pigou(double epsilon) {
  check_epsilon(epsilon);
  if (epsilon >= 1.0) {
    throw DomainError(
        "pigou needs eps < 1; for eps >= 1 the optimum is an eps-equilibrium");
  }
  const double u = 1.0 + epsilon;
  std::vector<Facility> facilities = {{0, 1.0, 0.0}, {1, 0.0, u}};
  NonatomicGame game(facilities, {{1.0, {{0}, {1}}}});
  Flow eq{{{1.0, 0.0}}};
  Flow opt{{{u / 2.0, 1.0 - u / 2.0}}};

  // No flow with mass on the constant edge is an eps-Wardrop flow.
  for (int k = 1; k <= kPigouUniquenessGrid; ++k) {
    const double upper = static_cast<double>(k) / kPigouUniquenessGrid;
    const Flow f{{{1.0 - upper, upper}}};
    if (flow_epsilon(game, f).is_equilibrium(epsilon)) {
      throw ConstructionError("pigou: flow with upper mass " + fmt(upper) +
                              " is an eps-Wardrop flow");
    }
  }

  InstanceBundle bundle;
  bundle.body = NonatomicInstance{std::move(game), eq, opt, std::nullopt};
  bundle.expected_epsilon = 0.0;
  bundle.expected_ratio = nonatomic_pos_bound(epsilon);
  auto& meta = bundle.metadata;
  meta.family = "pigou";
  meta.parameters = {{"epsilon", epsilon}};
  meta.notes.push_back(
      "all-lower flow is 0-Wardrop; every flow with upper-edge mass on a "
      "grid of " +
      std::to_string(kPigouUniquenessGrid) + " fails eps-Wardrop");
  with_exact(epsilon, meta, [&](const Rational& e, auto& exact) {
    exact["epsilon"] = e;
    exact["ratio"] =
        Rational(4) / ((Rational(3) - e) * (Rational(1) + e));
  });
  return finish(std::move(bundle));
}

namespace {

struct PosParams {
  double alpha;
  double beta;
};

PosParams pos_params(double epsilon, int n, int lambda, double delta) {
  const double u = 1.0 + epsilon;
  return {u *
                  (2.0 * n * epsilon - epsilon + epsilon * lambda + n +
                   2.0 * lambda + 1.0) /
                  (2.0 + epsilon) +
              delta,
          u / (2.0 + epsilon)};
}

void check_pos_args(double epsilon, int n, int lambda, double delta) {
  check_epsilon(epsilon);
  if (n < 2) throw DomainError("atomic-pos needs n >= 2");
  if (lambda < 0) throw DomainError("atomic-pos needs lambda >= 0");
  if (!std::isfinite(delta) || delta < 0.0) {
    throw DomainError("atomic-pos needs delta >= 0");
  }
}

}  // namespace

double atomic_pos_lb_ratio(double epsilon, int n, int lambda, double delta) {
  check_pos_args(epsilon, n, lambda, delta);
  const auto [alpha, beta] = pos_params(epsilon, n, lambda, delta);
  const double cost_a = (n - 1.0) * beta + lambda + n;  // cost_A(n)
  const double cost_p = alpha + (n - 1.0) * beta;       // cost_P(0)
  const double l = lambda;
  return (n * cost_a + l * (l + n)) / (n * cost_p + l * l);
}

int atomic_pos_lb_best_lambda(double epsilon, int n, double delta) {
  int best = 0;
  double best_ratio = atomic_pos_lb_ratio(epsilon, n, 0, delta);
  for (int lambda = 1; lambda <= 5 * n; ++lambda) {
    const double r = atomic_pos_lb_ratio(epsilon, n, lambda, delta);
    if (r > best_ratio) {
      best_ratio = r;
      best = lambda;
    }
  }
  return best;
}

InstanceBundle atomic_pos_lb(double epsilon, int n, int lambda, double delta) {
  check_pos_args(epsilon, n, lambda, delta);
  const auto [alpha, beta] = pos_params(epsilon, n, lambda, delta);
  // Facility ids: alpha_i = i, beta_ij = n + i*n + j (i != j), f = n + n*n.
  const int f_id = n + n * n;
  std::vector<Facility> facilities;
  for (int i = 0; i < n; ++i) facilities.push_back({i, alpha, 0.0});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) facilities.push_back({n + i * n + j, beta, 0.0});
    }
  }
  facilities.push_back({f_id, 1.0, 0.0});

  std::vector<std::vector<std::vector<int>>> players;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a{f_id};
    std::vector<int> p{i};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      a.push_back(n + i * n + j);
      p.push_back(n + j * n + i);
    }
    players.push_back({a, p});
  }
  for (int k = 0; k < lambda; ++k) players.push_back({{f_id}});

  const std::size_t total = static_cast<std::size_t>(n + lambda);
  Profile eq{std::vector<std::size_t>(total, 0)};
  Profile opt{std::vector<std::size_t>(total, 0)};
  for (int i = 0; i < n; ++i) opt.choices[i] = 1;

  InstanceBundle bundle;
  bundle.body = AtomicInstance{AtomicGame(std::move(facilities), players), eq,
                               opt};
  bundle.expected_epsilon = 0.0;
  bundle.expected_ratio = atomic_pos_lb_ratio(epsilon, n, lambda, delta);
  auto& meta = bundle.metadata;
  meta.family = "atomic-pos";
  meta.parameters = {{"epsilon", epsilon}, {"n", n},       {"lambda", lambda},
                     {"delta", delta},     {"alpha", alpha}, {"beta", beta}};
  meta.notes.push_back(
      "equilibrium is the A-profile (dominant up to a factor 1+eps), optimum "
      "is the P-profile; the designated optimum is the construction's, not "
      "an enumerated one");
  with_exact(epsilon, meta, [&](const Rational& e, auto& exact) {
    const auto d = Rational::from_double(delta, 1000000000);
    if (!d) return;
    const Rational ue = Rational(1) + e;
    const Rational nr(n), lr(lambda);
    const Rational a = ue *
                           (Rational(2) * nr * e - e + e * lr + nr +
                            Rational(2) * lr + 1) /
                           (Rational(2) + e) +
                       *d;
    const Rational b = ue / (Rational(2) + e);
    exact["epsilon"] = e;
    exact["alpha"] = a;
    exact["beta"] = b;
    const Rational cost_a = (nr - 1) * b + lr + nr;
    const Rational cost_p = a + (nr - 1) * b;
    exact["ratio"] = (nr * cost_a + lr * (lr + nr)) / (nr * cost_p + lr * lr);
  });
  return finish(std::move(bundle));
}

InstanceBundle two_links(int n, double gamma) {
  if (n < 2) throw DomainError("two-links needs n >= 2");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("two-links needs 0 < gamma < 1");
  }
  std::vector<Facility> facilities = {{0, 2.0 * n - 1.0, -gamma},
                                      {1, 1.0, 0.0}};
  std::vector<std::vector<std::vector<int>>> players(
      n, std::vector<std::vector<int>>{{0}, {1}});
  Profile opt{std::vector<std::size_t>(n, 1)};
  opt.choices[0] = 0;

  InstanceBundle bundle;
  bundle.body = AtomicInstance{AtomicGame(std::move(facilities), players), opt,
                               opt};
  bundle.expected_epsilon = 1.0 - (1.0 + gamma) / n;
  bundle.expected_ratio = 1.0;
  auto& meta = bundle.metadata;
  meta.family = "two-links";
  meta.parameters = {{"n", n},
                     {"gamma", gamma},
                     {"opt_cost", 2.0 * n - 1.0 - gamma + (n - 1.0) * (n - 1.0)}};
  meta.notes.push_back(
      "equilibrium and optimum are the same profile: one player on link 0");
  if (const auto g = Rational::from_double(gamma, 1000000)) {
    try {
      meta.exact["gamma"] = *g;
      meta.exact["expected_epsilon"] = Rational(1) - (Rational(1) + *g) / n;
    } catch (const std::overflow_error&) {
      meta.exact.clear();
    }
  }
  return finish(std::move(bundle));
}

}  // namespace ecl
