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

// ecl: command-line front end for the ecl library.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage, schema or
// input errors.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecl/atomic_game.hpp"
#include "ecl/atomic_solvers.hpp"
#include "ecl/bounds.hpp"
#include "ecl/errors.hpp"
#include "ecl/instances.hpp"
#include "ecl/io.hpp"
#include "ecl/network.hpp"
#include "ecl/nonatomic_game.hpp"
#include "ecl/nonatomic_solvers.hpp"
#include "ecl/reproduce.hpp"

namespace {

using ecl::io::json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Input problem reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double x, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void emit(const json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    ecl::io::write_json_file(out, doc);
  }
}

void check_epsilon(double eps) {
  if (!std::isfinite(eps) || eps < 0.0) {
    throw UsageError("epsilon must be >= 0");
  }
}

// A game file may hold an atomic game, a non-atomic game, a routing graph
// with commodities, or a bundle.
struct LoadedGame {
  ecl::io::DocumentKind kind = ecl::io::DocumentKind::kUnknown;
  std::optional<ecl::AtomicGame> atomic;
  std::optional<ecl::NonatomicGame> nonatomic;
  std::optional<ecl::InstanceBundle> bundle;
};

LoadedGame load_game(const std::string& path) {
  const json doc = ecl::io::read_json_file(path);
  LoadedGame g;
  g.kind = ecl::io::detect_kind(doc);
  switch (g.kind) {
    case ecl::io::DocumentKind::kAtomicGame:
      g.atomic = ecl::io::atomic_game_from_json(doc);
      break;
    case ecl::io::DocumentKind::kNonatomicGame:
      g.nonatomic = ecl::io::nonatomic_game_from_json(doc);
      break;
    case ecl::io::DocumentKind::kGraph:
      g.nonatomic = ecl::expand(ecl::io::routing_instance_from_json(doc));
      break;
    case ecl::io::DocumentKind::kBundle:
      g.bundle = ecl::io::bundle_from_json(doc);
      if (g.bundle->is_atomic()) {
        g.atomic = g.bundle->atomic().game;
      } else {
        g.nonatomic = g.bundle->nonatomic().game;
      }
      break;
    default:
      throw UsageError(path + ": expected a game, graph or bundle, found " +
                       ecl::io::kind_name(g.kind));
  }
  return g;
}

ecl::Profile load_profile(const std::string& path) {
  const json doc = ecl::io::read_json_file(path);
  if (ecl::io::detect_kind(doc) != ecl::io::DocumentKind::kProfile) {
    throw UsageError(path + ": expected a profile {\"choices\": [...]}");
  }
  return ecl::io::profile_from_json(doc);
}

ecl::Flow load_flow(const std::string& path) {
  const json doc = ecl::io::read_json_file(path);
  if (ecl::io::detect_kind(doc) != ecl::io::DocumentKind::kFlow) {
    throw UsageError(path + ": expected a flow {\"weights\": [...]}");
  }
  return ecl::io::flow_from_json(doc);
}

// ---- bounds ----

struct BoundsArgs {
  std::string grid = "0:2:0.05";
  std::string format = "csv";
  std::string out;
};

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed grid '" + spec + "': bad number '" + item + "'");
    }
  }
  if (parts.size() == 1) return {parts[0]};
  if (parts.size() != 3) {
    throw UsageError("malformed grid '" + spec + "': expected start:stop:step");
  }
  try {
    return ecl::epsilon_grid(parts[0], parts[1], parts[2]);
  } catch (const ecl::DomainError& e) {
    throw UsageError("malformed grid '" + spec + "': " + e.what());
  }
}

int run_bounds(const BoundsArgs& args) {
  const std::vector<double> grid = parse_grid(args.grid);
  std::vector<ecl::BoundReport> rows;
  for (double eps : grid) {
    check_epsilon(eps);
    rows.push_back(ecl::bound_report(eps));
  }
  if (args.format == "json") {
    json doc = json::array();
    for (const auto& r : rows) doc.push_back(ecl::io::to_json(r));
    emit(doc, args.out);
    return kOk;
  }
  std::ostringstream text;
  const bool csv = args.format == "csv";
  const int digits = csv ? 12 : 6;
  const std::vector<std::string> header = {
      "epsilon",          "z_atomic",         "atomic_poa",
      "atomic_pos_lower", "atomic_pos_upper", "atomic_pos_coarse",
      "nonatomic_poa",    "nonatomic_poa_lower_large",
      "nonatomic_pos",    "z_nonatomic"};
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (csv) {
        text << (i ? "," : "") << cells[i];
      } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, i ? " %12s" : "%8s", cells[i].c_str());
        text << buf;
      }
    }
    text << '\n';
  };
  if (csv) {
    line(header);
  } else {
    line({"eps", "z", "aPoA", "aPoS-lo", "aPoS-up", "aPoS-2/(1+e)", "nPoA",
          "nPoA-lo", "nPoS", "z'"});
  }
  for (const auto& r : rows) {
    line({fmt(r.epsilon, digits), std::to_string(r.z_atomic),
          fmt(r.atomic_poa, digits), fmt(r.atomic_pos_lower, digits),
          fmt(r.atomic_pos_upper, digits), fmt(r.atomic_pos_coarse, digits),
          fmt(r.nonatomic_poa, digits),
          r.nonatomic_poa_lower_large ? fmt(*r.nonatomic_poa_lower_large, digits)
                                      : std::string(csv ? "" : "-"),
          fmt(r.nonatomic_pos, digits), std::to_string(r.z_nonatomic)});
  }
  if (args.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream(args.out) << text.str();
  }
  return kOk;
}

// ---- generate ----

struct GenerateArgs {
  std::string family;
  double epsilon = 0.0;
  int n = 0;
  int lambda = -1;
  double delta = 0.0;
  double gamma = 0.5;
  bool network = false;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  check_epsilon(args.epsilon);
  ecl::InstanceBundle bundle;
  const std::string& f = args.family;
  if (f == "atomic-poa") {
    bundle = ecl::atomic_poa_lb(args.epsilon);
  } else if (f == "nonatomic-poa") {
    bundle = args.network ? ecl::nonatomic_poa_lb_network(args.epsilon)
                          : ecl::nonatomic_poa_lb(args.epsilon);
  } else if (f == "pigou") {
    bundle = ecl::pigou(args.epsilon);
  } else if (f == "atomic-pos") {
    const int n = args.n > 0 ? args.n : 3;
    const int lambda = args.lambda >= 0
                           ? args.lambda
                           : ecl::atomic_pos_lb_best_lambda(args.epsilon, n,
                                                            args.delta);
    bundle = ecl::atomic_pos_lb(args.epsilon, n, lambda, args.delta);
  } else if (f == "two-links") {
    bundle = ecl::two_links(args.n > 0 ? args.n : 4, args.gamma);
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  emit(ecl::io::to_json(bundle), args.out);
  if (!args.out.empty()) {
    std::cerr << f << ": expected_epsilon " << fmt(bundle.expected_epsilon, 12)
              << ", expected_ratio " << fmt(bundle.expected_ratio, 12) << '\n';
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string game;
  std::string solution;
  double epsilon = 0.0;
  std::string which = "equilibrium";
  double used_threshold = ecl::kDefaultUsedThreshold;
};

int run_verify(const VerifyArgs& args) {
  check_epsilon(args.epsilon);
  const LoadedGame g = load_game(args.game);
  if (args.solution.empty() && !g.bundle) {
    throw UsageError("a profile or flow file is required unless GAME is a bundle");
  }
  const bool optimum = args.which == "optimum";
  json doc;
  bool ok = false;
  if (g.atomic) {
    const ecl::Profile p = !args.solution.empty() ? load_profile(args.solution)
                           : optimum              ? g.bundle->atomic().optimum
                                                  : g.bundle->atomic().equilibrium;
    ecl::validate_profile(*g.atomic, p);
    const ecl::EpsilonReport rep = ecl::profile_epsilon(*g.atomic, p);
    ok = rep.is_equilibrium(args.epsilon);
    doc = ecl::io::to_json(rep);
    doc["social_cost"] = ecl::io::round_sig(ecl::social_cost(*g.atomic, p));
  } else {
    const ecl::Flow f = !args.solution.empty() ? load_flow(args.solution)
                        : optimum              ? g.bundle->nonatomic().optimum
                                               : g.bundle->nonatomic().equilibrium;
    ecl::validate_flow(*g.nonatomic, f);
    const ecl::WardropReport rep =
        ecl::flow_epsilon(*g.nonatomic, f, args.used_threshold);
    ok = rep.is_equilibrium(args.epsilon);
    doc = ecl::io::to_json(rep);
    doc["social_cost"] = ecl::io::round_sig(ecl::social_cost(*g.nonatomic, f));
  }
  doc["epsilon"] = args.epsilon;
  doc["is_equilibrium"] = ok;
  std::cout << doc.dump(2) << '\n';
  return ok ? kOk : kFailed;
}

// ---- solve ----

struct SolveArgs {
  std::string game;
  std::string method;
  double epsilon = 0.0;
  std::string start;
  std::string rule = "round-robin";
  std::size_t max_steps = 100000;
  double tol = 1e-8;
  std::size_t max_iter = 100000;
  std::string step_rule = "pairwise";
  bool gap_trace = false;
  std::string trace_csv;
  std::string out;
};

int run_solve(const SolveArgs& args, unsigned jobs) {
  check_epsilon(args.epsilon);
  const LoadedGame g = load_game(args.game);
  const std::string& m = args.method;
  const bool atomic_method = m == "brute" || m == "dynamics" || m == "descent";
  const bool flow_method = m == "fw-potential" || m == "fw-opt";
  if (!atomic_method && !flow_method) {
    throw UsageError("unknown method '" + m + "'");
  }
  if (atomic_method != static_cast<bool>(g.atomic)) {
    throw UsageError("method '" + m + "' does not apply to a " +
                     (g.atomic ? "atomic" : "non-atomic") + " game");
  }
  json doc;
  if (m == "brute") {
    ecl::BruteForceOptions opts;
    opts.jobs = jobs;
    doc = ecl::io::to_json(ecl::brute_force(*g.atomic, args.epsilon, opts));
  } else if (atomic_method) {
    ecl::Profile start;
    if (!args.start.empty()) {
      start = load_profile(args.start);
    } else {
      start.choices.assign(g.atomic->num_players(), 0);
    }
    ecl::validate_profile(*g.atomic, start);
    ecl::DynamicsResult res;
    if (m == "descent") {
      res = ecl::potential_descent(*g.atomic, start, args.epsilon, args.max_steps);
    } else {
      if (args.rule != "round-robin" && args.rule != "largest-ratio") {
        throw UsageError("unknown move rule '" + args.rule + "'");
      }
      res = ecl::epsilon_best_response(
          *g.atomic, start, args.epsilon,
          args.rule == "round-robin" ? ecl::MoveRule::kRoundRobin
                                     : ecl::MoveRule::kLargestRatio,
          args.max_steps);
    }
    doc = ecl::io::to_json(res);
    doc["choices"] = res.terminal.choices;  // readable back as a profile
    const ecl::EpsilonReport rep = ecl::profile_epsilon(*g.atomic, res.terminal);
    doc["terminal_epsilon"] = ecl::io::to_json(rep);
    doc["social_cost"] = ecl::io::round_sig(ecl::social_cost(*g.atomic, res.terminal));
    if (!args.trace_csv.empty()) {
      std::ofstream csv(args.trace_csv);
      ecl::write_trace_csv(csv, res.trace);
    }
  } else {
    ecl::SolveOptions opts;
    opts.tol = args.tol;
    opts.max_iter = args.max_iter;
    opts.record_gap_trace = args.gap_trace;
    if (args.step_rule == "classic") {
      opts.step_rule = ecl::StepRule::kClassic;
    } else if (args.step_rule != "pairwise") {
      throw UsageError("unknown step rule '" + args.step_rule + "'");
    }
    const ecl::Objective obj = m == "fw-opt"
                                   ? ecl::Objective::SocialCost()
                                   : ecl::Objective::Potential(args.epsilon);
    const ecl::SolveResult res = ecl::minimize(*g.nonatomic, obj, opts);
    doc = ecl::io::to_json(res);
    doc["social_cost"] =
        ecl::io::round_sig(ecl::social_cost(*g.nonatomic, res.flow));
    doc["flow_epsilon"] =
        ecl::io::to_json(ecl::flow_epsilon(*g.nonatomic, res.flow));
    if (res.possibly_nonunique) {
      doc["note"] = "minimizer possibly non-unique in strategy space";
    }
  }
  doc["method"] = m;
  doc["epsilon"] = args.epsilon;
  emit(doc, args.out);
  return kOk;
}

// ---- ratio ----

struct RatioArgs {
  std::string game;
  std::string numerator;
  std::string denominator;
};

int run_ratio(const RatioArgs& args) {
  const LoadedGame g = load_game(args.game);
  const bool have_both = !args.numerator.empty() && !args.denominator.empty();
  if (!have_both && !g.bundle) {
    throw UsageError("two profile/flow files are required unless GAME is a bundle");
  }
  if (args.numerator.empty() != args.denominator.empty()) {
    throw UsageError("give both NUM and DEN, or neither");
  }
  double num = 0.0, den = 0.0;
  if (g.atomic) {
    const ecl::Profile a = have_both ? load_profile(args.numerator)
                                     : g.bundle->atomic().equilibrium;
    const ecl::Profile b = have_both ? load_profile(args.denominator)
                                     : g.bundle->atomic().optimum;
    num = ecl::social_cost(*g.atomic, a);
    den = ecl::social_cost(*g.atomic, b);
  } else {
    const ecl::Flow a = have_both ? load_flow(args.numerator)
                                  : g.bundle->nonatomic().equilibrium;
    const ecl::Flow b = have_both ? load_flow(args.denominator)
                                  : g.bundle->nonatomic().optimum;
    ecl::validate_flow(*g.nonatomic, a);
    ecl::validate_flow(*g.nonatomic, b);
    num = ecl::social_cost(*g.nonatomic, a);
    den = ecl::social_cost(*g.nonatomic, b);
  }
  json doc = {{"numerator_cost", ecl::io::round_sig(num)},
              {"denominator_cost", ecl::io::round_sig(den)},
              {"ratio", den > 0.0 ? json(ecl::io::round_sig(num / den)) : json()}};
  if (g.bundle && !have_both) {
    doc["expected_ratio"] = ecl::io::round_sig(g.bundle->expected_ratio);
  }
  std::cout << doc.dump(2) << '\n';
  return kOk;
}

// ---- reproduce ----

struct ReproduceArgs {
  std::string out = "reproduction";
  std::vector<std::string> families;
  std::string tamper;
  bool list = false;
};

json report_to_json(const ecl::ReproductionReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"family", r.family},
                    {"criterion", r.criterion},
                    {"label", r.label},
                    {"epsilon", ecl::io::round_sig(r.epsilon)},
                    {"expected", std::isfinite(r.expected)
                                     ? json(ecl::io::round_sig(r.expected))
                                     : json()},
                    {"measured", std::isfinite(r.measured)
                                     ? json(ecl::io::round_sig(r.measured))
                                     : json()},
                    {"relation", r.relation},
                    {"tolerance", r.tolerance},
                    {"status", r.informational ? "info" : r.pass ? "pass" : "fail"},
                    {"detail", r.detail}});
  }
  return {{"seed", report.seed},
          {"families", report.families},
          {"seconds", ecl::io::round_sig(report.seconds, 6)},
          {"pass", report.pass},
          {"failing_families", report.failing_families()},
          {"rows", std::move(rows)}};
}

int run_reproduce(const ReproduceArgs& args, std::uint64_t seed, unsigned jobs) {
  if (args.list) {
    for (const auto& f : ecl::reproduction_families()) {
      std::cout << f.criterion << '\t' << f.name << '\t' << f.summary << '\n';
    }
    return kOk;
  }
  ecl::ReproduceOptions opts;
  opts.seed = seed;
  opts.jobs = jobs;
  opts.families = args.families;
  opts.tamper = args.tamper;
  ecl::ReproductionReport report;
  try {
    report = ecl::reproduce(opts);
  } catch (const ecl::DomainError& e) {
    throw UsageError(e.what());
  }

  fs::create_directories(args.out);
  ecl::io::write_json_file(fs::path(args.out) / "report.json",
                           report_to_json(report));
  {
    std::ofstream csv(fs::path(args.out) / "report.csv");
    ecl::write_report_csv(csv, report);
  }
  BoundsArgs table;
  table.grid = "0:3:0.05";
  table.out = (fs::path(args.out) / "bounds.csv").string();
  run_bounds(table);

  std::size_t passed = 0, failed = 0, info = 0;
  for (const auto& r : report.rows) {
    if (r.informational) {
      ++info;
    } else if (r.pass) {
      ++passed;
    } else {
      ++failed;
      std::cout << "FAIL " << r.criterion << ' ' << r.family << ": " << r.label
                << " (eps=" << fmt(r.epsilon, 6) << ") expected " << r.relation
                << ' ' << fmt(r.expected, 12) << ", measured "
                << fmt(r.measured, 12)
                << (r.detail.empty() ? "" : " [" + r.detail + "]") << '\n';
    }
  }
  std::cout << "seed " << report.seed << ": " << passed << " passed, " << failed
            << " failed, " << info << " informational in "
            << fmt(report.seconds, 3) << " s\n";
  for (const auto& f : report.failing_families()) {
    std::cout << "failing family: " << f << '\n';
  }
  std::cout << "report written to " << args.out << '\n';
  return report.pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate equilibria of linear congestion games"};
  app.require_subcommand(1);
  std::uint64_t seed = ecl::default_seed();
  unsigned jobs = 1;
  app.add_option("--seed", seed, "Random seed (default: ECL_SEED or 42)");
  app.add_option("--jobs", jobs, "Worker threads for enumeration")
      ->check(CLI::Range(1u, 256u));

  BoundsArgs bounds;
  auto* cb = app.add_subcommand("bounds", "Tabulate PoA/PoS bounds over an epsilon grid");
  cb->add_option("--grid", bounds.grid, "start:stop:step or a single value");
  cb->add_option("--format", bounds.format)
      ->check(CLI::IsMember({"csv", "json", "table"}));
  cb->add_option("-o,--out", bounds.out, "Output file (default: stdout)");

  GenerateArgs gen;
  auto* cg = app.add_subcommand("generate", "Write a lower-bound instance bundle");
  cg->add_option("--family", gen.family)->required()->check(
      CLI::IsMember(ecl::kFamilies));
  cg->add_option("--epsilon", gen.epsilon);
  cg->add_option("--n", gen.n, "Players (atomic-pos, two-links)");
  cg->add_option("--lambda", gen.lambda, "Fixed players (atomic-pos; default: best)");
  cg->add_option("--delta", gen.delta, "Dominance margin (atomic-pos)");
  cg->add_option("--gamma", gen.gamma, "Link offset (two-links)");
  cg->add_flag("--network", gen.network, "Routing realization (nonatomic-poa)");
  cg->add_option("-o,--out", gen.out, "Output file (default: stdout)");

  VerifyArgs ver;
  auto* cv = app.add_subcommand("verify", "Check a profile or flow for epsilon-equilibrium");
  cv->add_option("game", ver.game, "Game, graph or bundle JSON")->required();
  cv->add_option("solution", ver.solution, "Profile or flow JSON");
  cv->add_option("--epsilon", ver.epsilon);
  cv->add_option("--which", ver.which, "Bundle profile to check")
      ->check(CLI::IsMember({"equilibrium", "optimum"}));
  cv->add_option("--used-threshold", ver.used_threshold,
                 "Relative weight above which a strategy counts as used");

  SolveArgs sol;
  auto* cs = app.add_subcommand("solve", "Compute equilibria or optima");
  cs->add_option("game", sol.game, "Game, graph or bundle JSON")->required();
  cs->add_option("--method", sol.method)->required()->check(CLI::IsMember(
      {"brute", "dynamics", "descent", "fw-potential", "fw-opt"}));
  cs->add_option("--epsilon", sol.epsilon);
  cs->add_option("--start", sol.start, "Start profile (dynamics, descent)");
  cs->add_option("--rule", sol.rule, "round-robin or largest-ratio (dynamics)");
  cs->add_option("--max-steps", sol.max_steps);
  cs->add_option("--tol", sol.tol, "Duality-gap tolerance (fw-*)");
  cs->add_option("--max-iter", sol.max_iter);
  cs->add_option("--step-rule", sol.step_rule, "pairwise or classic (fw-*)");
  cs->add_flag("--gap-trace", sol.gap_trace);
  cs->add_option("--trace-csv", sol.trace_csv, "Dynamics trace CSV");
  cs->add_option("-o,--out", sol.out, "Output file (default: stdout)");

  RatioArgs rat;
  auto* cr = app.add_subcommand("ratio", "Social-cost ratio of two profiles or flows");
  cr->add_option("game", rat.game)->required();
  cr->add_option("numerator", rat.numerator);
  cr->add_option("denominator", rat.denominator);

  ReproduceArgs rep;
  auto* cp = app.add_subcommand("reproduce", "Run every acceptance check and write a report");
  cp->add_option("--out", rep.out, "Report directory");
  cp->add_option("--families", rep.families)->delimiter(',');
  cp->add_option("--tamper", rep.tamper,
                 "Negative control: perturb the expected values of one family");
  cp->add_flag("--list", rep.list, "List families and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cb) return run_bounds(bounds);
    if (*cg) return run_generate(gen);
    if (*cv) return run_verify(ver);
    if (*cs) return run_solve(sol, jobs);
    if (*cr) return run_ratio(rat);
    if (*cp) return run_reproduce(rep, seed, jobs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ecl::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const ecl::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const ecl::CapacityError& e) {
    std::cerr << "too large: " << e.what() << " (estimate " << e.estimate()
              << ")\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
