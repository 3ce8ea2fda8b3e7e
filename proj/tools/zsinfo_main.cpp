// Copyright 2026 The zsinfo Authors
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

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zsinfo/blackwell.hpp"
#include "zsinfo/channel.hpp"
#include "zsinfo/errors.hpp"
#include "zsinfo/info_structure.hpp"
#include "zsinfo/instance_gen.hpp"
#include "zsinfo/json_io.hpp"
#include "zsinfo/oracle.hpp"
#include "zsinfo/ordering.hpp"
#include "zsinfo/solver.hpp"

namespace {

using namespace zsinfo;
using zsinfo::io::Arithmetic;
using zsinfo::io::InstanceFile;
using zsinfo::io::Kind;
using nlohmann::json;

// Exit codes, uniform across subcommands:
//   0 success / positive decision (feasible, ordered)
//   1 negative decision (infeasible, not ordered)
//   2 parse or validation error
//   3 arithmetic failure
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitArithmetic = 3;

struct CommonFlags {
  bool force_rational = false;
  bool force_float = false;
  double tol = 1e-9;
  std::string out;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--rational", force_rational, "force exact rational arithmetic");
    cmd->add_flag("--float", force_float, "force float arithmetic");
    cmd->add_option("--tol", tol, "validation tolerance for float inputs")
        ->capture_default_str();
    cmd->add_option("--out", out, "write the JSON result document here");
  }
};

Arithmetic resolve_arithmetic(const CommonFlags& flags,
                              const std::vector<const InstanceFile*>& files) {
  if (flags.force_rational && flags.force_float)
    throw ValidationError("--rational and --float are mutually exclusive");
  if (flags.force_rational) return Arithmetic::rational;
  if (flags.force_float) return Arithmetic::floating;
  if (files.empty()) return Arithmetic::rational;
  const Arithmetic first = files.front()->arithmetic;
  for (const auto* f : files)
    if (f->arithmetic != first)
      throw ValidationError(
          "input files disagree on arithmetic; pass --rational or --float");
  return first;
}

template <class S>
std::string show(const S& v);

template <>
std::string show<Rational>(const Rational& v) {
  std::ostringstream out;
  out << to_fraction_string(v) << " (" << to_double(v) << ")";
  return out.str();
}

template <>
std::string show<double>(const double& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

void maybe_write(const std::string& path, const json& doc) {
  if (!path.empty()) io::write_json_file(path, doc);
}

template <class S>
json strategy_to_json(const BehavioralStrategy<S>& s) {
  json rows = json::object();
  for (std::size_t y = 0; y < s.signal_labels.size(); ++y) {
    json row = json::object();
    for (std::size_t u = 0; u < s.action_labels.size(); ++u)
      row[s.action_labels[u]] = io::scalar_to_json(s.table[y][u]);
    rows[s.signal_labels[y]] = std::move(row);
  }
  return rows;
}

// ---------------------------------------------------------------- solve --

struct SolveArgs {
  std::string game_file, structure_file, oracle;
  CommonFlags common;
};

template <class S>
int run_solve(const SolveArgs& args, const InstanceFile& game_doc,
              const InstanceFile& mu_doc) {
  const S tol = ScalarTraits<S>::exact ? S(0) : S(args.common.tol);
  const auto game = io::game_from_json<S>(game_doc.doc);
  const auto mu = io::structure_from_json<S>(mu_doc.doc, tol);
  const auto gv = value(game, mu);

  std::cout << "value: " << show(gv.value) << "\n";
  std::cout << "duality_gap: " << show(gv.duality_gap) << "\n";
  std::cout << "strategy1 (minimizer), strategy2 (maximizer) follow per signal:\n";
  for (std::size_t y = 0; y < gv.strategy1.signal_labels.size(); ++y) {
    std::cout << "  s1[" << gv.strategy1.signal_labels[y] << "]:";
    for (std::size_t u = 0; u < gv.strategy1.action_labels.size(); ++u)
      std::cout << " " << gv.strategy1.action_labels[u] << "="
                << show(gv.strategy1.table[y][u]);
    std::cout << "\n";
  }
  for (std::size_t y = 0; y < gv.strategy2.signal_labels.size(); ++y) {
    std::cout << "  s2[" << gv.strategy2.signal_labels[y] << "]:";
    for (std::size_t u = 0; u < gv.strategy2.action_labels.size(); ++u)
      std::cout << " " << gv.strategy2.action_labels[u] << "="
                << show(gv.strategy2.table[y][u]);
    std::cout << "\n";
  }

  json report;
  report["value"] = io::scalar_to_json(gv.value);
  report["duality_gap"] = io::scalar_to_json(gv.duality_gap);
  report["strategy1"] = strategy_to_json(gv.strategy1);
  report["strategy2"] = strategy_to_json(gv.strategy2);

  if (!args.oracle.empty()) {
    if (args.oracle != "normal-form")
      throw ValidationError("unknown oracle '" + args.oracle + "'");
    const S oracle_value = normal_form_value(game, mu);
    const bool equal = near(oracle_value, gv.value,
                            ScalarTraits<S>::exact ? S(0) : S(1e-9));
    std::cout << "oracle value: " << show(oracle_value)
              << "  equal: " << (equal ? "true" : "false") << "\n";
    report["oracle_value"] = io::scalar_to_json(oracle_value);
    report["oracle_equal"] = equal;
  }
  maybe_write(args.common.out, report);
  return kExitYes;
}

// --------------------------------------------------------------- garble --

struct GarbleArgs {
  std::string mu_file, nu_file;
  int player = 0;  // 0: pairs given directly
  CommonFlags common;
};

template <class S>
PairMeasure<S> load_pair(const InstanceFile& doc, int player, const S& tol) {
  if (doc.kind == Kind::pair) return io::pair_from_json<S>(doc.doc, tol);
  if (doc.kind == Kind::structure) {
    if (player != 1 && player != 2)
      throw ValidationError("structure input needs --player 1|2 to pick a marginal");
    return marginal(io::structure_from_json<S>(doc.doc, tol), player);
  }
  throw ValidationError("expected a pair or structure instance");
}

template <class S>
int run_garble(const GarbleArgs& args, const InstanceFile& mu_doc,
               const InstanceFile& nu_doc) {
  const S tol = ScalarTraits<S>::exact ? S(0) : S(args.common.tol);
  const auto mu_pair = load_pair<S>(mu_doc, args.player, tol);
  const auto nu_pair = load_pair<S>(nu_doc, args.player, tol);
  const auto result = check_garbling(mu_pair, nu_pair, tol);

  json report;
  report["feasible"] = result.feasible;
  if (result.feasible) {
    std::cout << "feasible: nu is a garbling of mu\n";
    const auto applied = apply_kernel(*result.kernel, mu_pair);
    const bool verified = pairs_equal(applied, nu_pair, tol);
    std::cout << "kernel re-applies to nu exactly: " << (verified ? "yes" : "NO") << "\n";
    report["kernel"] = io::channel_to_json(*result.kernel);
    report["verified"] = verified;
    maybe_write(args.common.out, report);
    return verified ? kExitYes : kExitArithmetic;
  }

  std::cout << "infeasible: nu is not a garbling of mu\n";
  std::cout << "separating-cost margin: " << show(result.margin) << "\n";
  json cost;
  cost["x_labels"] = result.separating_cost->x_labels;
  cost["y_labels"] = result.separating_cost->y_labels;
  json rows = json::array();
  for (std::size_t ix = 0; ix < result.separating_cost->x_labels.size(); ++ix) {
    json row = json::array();
    for (std::size_t iy = 0; iy < result.separating_cost->y_labels.size(); ++iy)
      row.push_back(io::scalar_to_json(result.separating_cost->at(ix, iy)));
    rows.push_back(std::move(row));
  }
  cost["values"] = std::move(rows);
  report["separating_cost"] = std::move(cost);
  report["margin"] = io::scalar_to_json(result.margin);
  maybe_write(args.common.out, report);
  return kExitNo;
}

// ---------------------------------------------------------------- order --

struct OrderArgs {
  std::string nu_file, mu_file, mode = "auto", out_prefix;
  CommonFlags common;
};

template <class S>
int run_order(const OrderArgs& args, const InstanceFile& nu_doc,
              const InstanceFile& mu_doc, bool demand_witness) {
  const S tol = ScalarTraits<S>::exact ? S(0) : S(args.common.tol);
  const auto nu = io::structure_from_json<S>(nu_doc.doc, tol);
  const auto mu = io::structure_from_json<S>(mu_doc.doc, tol);
  OrderMode mode = OrderMode::automatic;
  if (args.mode == "joint") mode = OrderMode::joint;
  else if (args.mode == "decomposed") mode = OrderMode::decomposed;
  else if (args.mode != "auto") throw ValidationError("unknown mode '" + args.mode + "'");

  const auto result = check_order(nu, mu, mode, tol);
  const char* mode_name =
      result.mode == OrderMode::decomposed ? "decomposed" : "joint";

  json report;
  report["ordered"] = result.ordered;
  report["mode"] = mode_name;
  if (result.ordered) {
    if (demand_witness) {
      std::cerr << "error: structures are ordered; no witness game exists\n";
      return kExitInput;
    }
    std::cout << "ordered: mu is better for the maximizer than nu (mode "
              << mode_name << ")\n";
    report["kappa1"] = io::channel_to_json(*result.kappa1);
    report["kappa2"] = io::channel_to_json(*result.kappa2);
    report["common"] = io::structure_to_json(*result.common);
    if (!args.out_prefix.empty()) {
      io::write_json_file(args.out_prefix + ".kappa1.json", report["kappa1"]);
      io::write_json_file(args.out_prefix + ".kappa2.json", report["kappa2"]);
      io::write_json_file(args.out_prefix + ".common.json", report["common"]);
    }
    maybe_write(args.common.out, report);
    return kExitYes;
  }

  std::cout << "not ordered (mode " << mode_name << ")\n";
  if (result.witness) {
    const auto& w = *result.witness;
    std::cout << "witness game on side " << w.failed_side
              << ": V*(G,nu)=" << show(w.value_nu)
              << " > V*(G,mu)=" << show(w.value_mu)
              << " margin=" << show(w.margin) << "\n";
    report["witness"] = io::game_to_json(w.game);
    report["witness_side"] = w.failed_side;
    report["value_nu"] = io::scalar_to_json(w.value_nu);
    report["value_mu"] = io::scalar_to_json(w.value_mu);
    report["margin"] = io::scalar_to_json(w.margin);
    if (!args.out_prefix.empty())
      io::write_json_file(args.out_prefix + ".witness.json", report["witness"]);
  } else if (!result.joint_farkas.empty()) {
    std::cout << "joint-mode failure: raw infeasibility certificate emitted; "
                 "no verified witness game is claimed for general structures\n";
    json farkas = json::array();
    for (const auto& v : result.joint_farkas)
      farkas.push_back(io::scalar_to_json(v));
    report["joint_farkas"] = std::move(farkas);
  }
  maybe_write(args.common.out, report);
  if (demand_witness && !result.witness) return kExitNo;
  return kExitNo;
}

// ------------------------------------------------------------- quantize --

struct QuantizeArgs {
  std::string density = "gauss";
  std::vector<double> means;
  double sigma = 0.2;
  double lo = 0.0, hi = 1.0;
  std::size_t cells = 16;
  std::size_t subdivisions = 1;
  std::size_t states = 2;
  CommonFlags common;
};

int run_quantize(const QuantizeArgs& args) {
  std::function<double(double, std::size_t)> density;
  std::size_t nx = args.states;
  if (args.density == "uniform") {
    density = [](double, std::size_t) { return 1.0; };
  } else if (args.density == "gauss") {
    if (args.means.empty())
      throw ValidationError("gauss density needs --means m0,m1,...");
    nx = args.means.size();
    const double sigma = args.sigma;
    if (!(sigma > 0)) throw ValidationError("--sigma must be positive");
    auto means = args.means;
    density = [means, sigma](double y, std::size_t ix) {
      const double d = (y - means[ix]) / sigma;
      return std::exp(-0.5 * d * d);
    };
  } else {
    throw ValidationError("unknown density family '" + args.density + "'");
  }
  const auto q = quantize_channel(density, index_labels(nx, "x"), args.lo,
                                  args.hi, args.cells, args.subdivisions);
  const json doc = io::channel_to_json(q);
  if (args.common.out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    io::write_json_file(args.common.out, doc);
    std::cout << "wrote " << args.common.out << " (" << nx << " states, "
              << args.cells << " cells)\n";
  }
  return kExitYes;
}

// ------------------------------------------------------------------ gen --

struct GenArgs {
  std::uint64_t seed = 42;
  std::size_t x = 3, y1 = 0, y2 = 0, y = 3, u1 = 0, u2 = 0, u = 2;
  bool joint_form = false;
  std::string out_structure, out_game;
  CommonFlags common;
};

template <class S>
int run_gen(const GenArgs& args) {
  const std::size_t ny1 = args.y1 ? args.y1 : args.y;
  const std::size_t ny2 = args.y2 ? args.y2 : args.y;
  const std::size_t nu1 = args.u1 ? args.u1 : args.u;
  const std::size_t nu2 = args.u2 ? args.u2 : args.u;
  InstanceRng rng(args.seed);
  const auto mu = args.joint_form
                      ? random_joint_structure<S>(rng, args.x, ny1, ny2)
                      : random_cond_independent<S>(rng, args.x, ny1, ny2);
  const auto game = random_game<S>(rng, mu.x_labels, nu1, nu2);
  std::cout << "seed: " << args.seed << "\n";
  if (!args.out_structure.empty()) {
    io::write_json_file(args.out_structure, io::structure_to_json(mu));
    std::cout << "wrote " << args.out_structure << "\n";
  }
  if (!args.out_game.empty()) {
    io::write_json_file(args.out_game, io::game_to_json(game));
    std::cout << "wrote " << args.out_game << "\n";
  }
  if (args.out_structure.empty() && args.out_game.empty())
    std::cout << "nothing to write; pass --out-structure and/or --out-game\n";
  return kExitYes;
}

// ---------------------------------------------------------------- suite --

struct SuiteArgs {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::size_t jobs = 1;
  bool kernels_only = false;
  bool refinement_only = false;
  CommonFlags common;
};

template <class S>
int run_suite(const SuiteArgs& args) {
  SuiteOptions opts;
  opts.trials = args.trials;
  opts.seed = args.seed;
  opts.check_kernels = !args.refinement_only;
  opts.check_refinement = !args.kernels_only;

  SuiteReport total;
  if (args.jobs <= 1) {
    total = monotonicity_suite<S>(opts);
  } else {
    // Per-trial RNG streams make sharding order-independent.
    std::vector<SuiteReport> parts(args.jobs);
    std::vector<std::thread> workers;
    const std::size_t chunk = (args.trials + args.jobs - 1) / args.jobs;
    for (std::size_t j = 0; j < args.jobs; ++j) {
      workers.emplace_back([&, j] {
        SuiteOptions local = opts;
        local.trial_offset = j * chunk;
        local.trials = std::min(chunk, args.trials - std::min(args.trials, j * chunk));
        if (local.trials > 0) parts[j] = monotonicity_suite<S>(local);
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& p : parts) {
      total.trials += p.trials;
      total.kernel_checks += p.kernel_checks;
      total.kernel_violations += p.kernel_violations;
      total.refinement_checks += p.refinement_checks;
      total.refinement_violations += p.refinement_violations;
      total.max_violation = std::max(total.max_violation, p.max_violation);
      for (const auto& d : p.violation_dumps) total.violation_dumps.push_back(d);
    }
  }

  std::cout << "seed: " << args.seed << "\n";
  std::cout << "trials: " << total.trials << "\n";
  std::cout << "kernel checks: " << total.kernel_checks << ", violations: "
            << total.kernel_violations << "\n";
  std::cout << "refinement checks: " << total.refinement_checks
            << ", violations: " << total.refinement_violations << "\n";
  std::cout << "max violation: " << total.max_violation << "\n";
  for (const auto& d : total.violation_dumps) std::cout << d << "\n";

  json report;
  report["seed"] = args.seed;
  report["trials"] = total.trials;
  report["kernel_checks"] = total.kernel_checks;
  report["kernel_violations"] = total.kernel_violations;
  report["refinement_checks"] = total.refinement_checks;
  report["refinement_violations"] = total.refinement_violations;
  maybe_write(args.common.out, report);
  return total.clean() ? kExitYes : kExitNo;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"zsinfo: information-structure tools for zero-sum Bayesian games"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand(
      "solve", "equilibrium value and strategies of a game on a structure");
  solve_cmd->add_option("--game", solve_args.game_file, "game instance file")
      ->required();
  solve_cmd->add_option("--structure", solve_args.structure_file,
                        "information-structure instance file")
      ->required();
  solve_cmd->add_option("--oracle", solve_args.oracle,
                        "cross-check route: 'normal-form'");
  solve_args.common.attach(solve_cmd);

  GarbleArgs garble_args;
  auto* garble_cmd = app.add_subcommand(
      "garble", "is nu a stochastic degradation of mu? (single player)");
  garble_cmd->add_option("mu", garble_args.mu_file, "source pair/structure")->required();
  garble_cmd->add_option("nu", garble_args.nu_file, "target pair/structure")->required();
  garble_cmd->add_option("--player", garble_args.player,
                         "marginal to take when structures are given");
  garble_args.common.attach(garble_cmd);

  OrderArgs order_args;
  auto* order_cmd = app.add_subcommand(
      "order", "is mu better for the maximizer than nu over all games?");
  order_cmd->add_option("nu", order_args.nu_file)->required();
  order_cmd->add_option("mu", order_args.mu_file)->required();
  order_cmd->add_option("--mode", order_args.mode, "auto|joint|decomposed")
      ->capture_default_str();
  order_cmd->add_option("--out-prefix", order_args.out_prefix,
                        "write kappa1/kappa2/common (or witness) files here");
  order_args.common.attach(order_cmd);

  OrderArgs witness_args;
  auto* witness_cmd = app.add_subcommand(
      "witness", "extract a verified witness game when the order fails");
  witness_cmd->add_option("nu", witness_args.nu_file)->required();
  witness_cmd->add_option("mu", witness_args.mu_file)->required();
  witness_cmd->add_option("--out-prefix", witness_args.out_prefix);
  witness_args.common.attach(witness_cmd);

  QuantizeArgs quantize_args;
  auto* quantize_cmd = app.add_subcommand(
      "quantize", "discretize a density-specified channel into cells");
  quantize_cmd->add_option("--density", quantize_args.density, "uniform|gauss")
      ->capture_default_str();
  quantize_cmd->add_option("--means", quantize_args.means,
                           "per-state means for the gauss family")
      ->delimiter(',');
  quantize_cmd->add_option("--sigma", quantize_args.sigma)->capture_default_str();
  quantize_cmd->add_option("--lo", quantize_args.lo)->capture_default_str();
  quantize_cmd->add_option("--hi", quantize_args.hi)->capture_default_str();
  quantize_cmd->add_option("--cells", quantize_args.cells)->capture_default_str();
  quantize_cmd->add_option("--subdivisions", quantize_args.subdivisions,
                           "midpoints per cell")
      ->capture_default_str();
  quantize_cmd->add_option("--states", quantize_args.states,
                           "state count for the uniform family")
      ->capture_default_str();
  quantize_args.common.attach(quantize_cmd);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random seeded instance");
  gen_cmd->add_option("--seed", gen_args.seed)->capture_default_str();
  gen_cmd->add_option("--x", gen_args.x)->capture_default_str();
  gen_cmd->add_option("--y", gen_args.y, "both signal alphabets")->capture_default_str();
  gen_cmd->add_option("--y1", gen_args.y1);
  gen_cmd->add_option("--y2", gen_args.y2);
  gen_cmd->add_option("--u", gen_args.u, "both action alphabets")->capture_default_str();
  gen_cmd->add_option("--u1", gen_args.u1);
  gen_cmd->add_option("--u2", gen_args.u2);
  gen_cmd->add_flag("--joint-form", gen_args.joint_form,
                    "emit a general joint tensor instead of a conditionally "
                    "independent structure");
  gen_cmd->add_option("--out-structure", gen_args.out_structure);
  gen_cmd->add_option("--out-game", gen_args.out_game);
  gen_args.common.attach(gen_cmd);

  SuiteArgs suite_args;
  auto* suite_cmd = app.add_subcommand(
      "suite", "monotonicity/refinement property sweep over random instances");
  suite_cmd->add_option("--trials", suite_args.trials)->capture_default_str();
  suite_cmd->add_option("--seed", suite_args.seed)->capture_default_str();
  suite_cmd->add_option("--jobs", suite_args.jobs, "worker threads")
      ->capture_default_str();
  suite_cmd->add_flag("--kernels-only", suite_args.kernels_only);
  suite_cmd->add_flag("--refinement-only", suite_args.refinement_only);
  suite_args.common.attach(suite_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitYes : kExitInput;  // --help stays 0
  }

  if (solve_cmd->parsed()) {
    const auto game_doc = io::read_instance_file(solve_args.game_file);
    const auto mu_doc = io::read_instance_file(solve_args.structure_file);
    const auto mode = resolve_arithmetic(solve_args.common, {&game_doc, &mu_doc});
    return mode == Arithmetic::rational
               ? run_solve<Rational>(solve_args, game_doc, mu_doc)
               : run_solve<double>(solve_args, game_doc, mu_doc);
  }
  if (garble_cmd->parsed()) {
    const auto mu_doc = io::read_instance_file(garble_args.mu_file);
    const auto nu_doc = io::read_instance_file(garble_args.nu_file);
    const auto mode = resolve_arithmetic(garble_args.common, {&mu_doc, &nu_doc});
    return mode == Arithmetic::rational
               ? run_garble<Rational>(garble_args, mu_doc, nu_doc)
               : run_garble<double>(garble_args, mu_doc, nu_doc);
  }
  if (order_cmd->parsed() || witness_cmd->parsed()) {
    const bool demand_witness = witness_cmd->parsed();
    auto& args = demand_witness ? witness_args : order_args;
    const auto nu_doc = io::read_instance_file(args.nu_file);
    const auto mu_doc = io::read_instance_file(args.mu_file);
    const auto mode = resolve_arithmetic(args.common, {&nu_doc, &mu_doc});
    return mode == Arithmetic::rational
               ? run_order<Rational>(args, nu_doc, mu_doc, demand_witness)
               : run_order<double>(args, nu_doc, mu_doc, demand_witness);
  }
  if (quantize_cmd->parsed()) return run_quantize(quantize_args);
  if (gen_cmd->parsed()) {
    const auto mode = resolve_arithmetic(gen_args.common, {});
    return mode == Arithmetic::rational ? run_gen<Rational>(gen_args)
                                        : run_gen<double>(gen_args);
  }
  if (suite_cmd->parsed()) {
    // Sweeps default to float; the laws are asserted at the library-wide
    // 1e-9 tolerance either way.
    return suite_args.common.force_rational ? run_suite<Rational>(suite_args)
                                            : run_suite<double>(suite_args);
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic failure: " << e.what() << "\n";
    return kExitArithmetic;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
