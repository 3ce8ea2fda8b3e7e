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

#ifndef ZSINFO_ORDERING_HPP_
#define ZSINFO_ORDERING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zsinfo/blackwell.hpp"
#include "zsinfo/errors.hpp"
#include "zsinfo/game.hpp"
#include "zsinfo/info_structure.hpp"
#include "zsinfo/instance_gen.hpp"
#include "zsinfo/lp.hpp"
#include "zsinfo/solver.hpp"

namespace zsinfo {

enum class OrderMode { automatic, joint, decomposed };

// check_order(nu, mu) asks whether mu is better for the maximizer than nu
// over all bounded games: existence of kernels with kappa1 nu = kappa2 mu,
// where kappa1 garbles nu's minimizer coordinate and kappa2 garbles mu's
// maximizer coordinate.
template <class S>
struct WitnessInfo {
  Game<S> game;
  S value_nu{};
  S value_mu{};
  S margin{};  // value_nu - value_mu > 0: the order fails on this game
  int failed_side = 0;
};

template <class S>
struct OrderResult {
  bool ordered = false;
  OrderMode mode = OrderMode::joint;  // mode actually used
  std::optional<Channel<S>> kappa1;
  std::optional<Channel<S>> kappa2;
  std::optional<InfoStructure<S>> common;  // the meeting point kappa1 nu = kappa2 mu
  std::optional<WitnessInfo<S>> witness;   // decomposed-mode failures only
  // Raw certificate of the joint LP (all equality rows, stochasticity block
  // first) when the joint mode is infeasible; no verified game is claimed in
  // that case.
  std::vector<S> joint_farkas;
};

namespace ordering_detail {

template <class S>
void require_same_shape(const InfoStructure<S>& nu, const InfoStructure<S>& mu,
                        const S& tol) {
  if (nu.x_labels != mu.x_labels || nu.y1_labels != mu.y1_labels ||
      nu.y2_labels != mu.y2_labels)
    throw DimensionError("structures must share X, Y1, Y2 label sets");
  for (std::size_t i = 0; i < nu.prior.size(); ++i)
    if (!near(nu.prior.mass[i], mu.prior.mass[i], tol))
      throw ValidationError("structures do not share the same prior");
}

template <class S>
Game<S> build_witness_game(const CostTable<S>& f, int failed_side) {
  Game<S> g;
  g.x_labels = f.x_labels;
  if (failed_side == 1) {
    g.u1_labels = f.y_labels;
    g.u2_labels = {"0"};
    g.cost = f.values;  // c(x, u1, 0) = f(x, u1)
  } else {
    g.u1_labels = {"0"};
    g.u2_labels = f.y_labels;
    g.cost.resize(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i)
      g.cost[i] = S(-f.values[i]);  // c(x, 0, u2) = -f(x, u2)
  }
  g.validate();
  return g;
}

template <class S>
WitnessInfo<S> verified_witness(const InfoStructure<S>& nu,
                                const InfoStructure<S>& mu,
                                const CostTable<S>& f, int failed_side) {
  WitnessInfo<S> w;
  w.failed_side = failed_side;
  w.game = build_witness_game(f, failed_side);
  w.value_nu = value(w.game, nu).value;
  w.value_mu = value(w.game, mu).value;
  w.margin = w.value_nu - w.value_mu;
  if (!(w.margin > S(0)))
    throw ArithmeticError(
        "witness game failed to separate the structures (numerical stall); "
        "retry in rational mode");
  return w;
}

}  // namespace ordering_detail

// Builds the separating game from a Blackwell separating cost. Side 1
// (mu's minimizer pair is not a garbling of nu's): the minimizer plays the
// cost as a decision problem with U1 = Y1. Side 2 (nu's maximizer pair is
// not a garbling of mu's): the maximizer plays -f with U2 = Y2. Either way
// V*(G, nu) > V*(G, mu), refuting the order; both solves are run to assert
// the guarantee rather than assume it.
template <class S>
WitnessInfo<S> witness_game(const InfoStructure<S>& nu,
                            const InfoStructure<S>& mu, int failed_side,
                            const CostTable<S>& separating_cost,
                            const S& tol = ScalarTraits<S>::default_tolerance()) {
  ordering_detail::require_same_shape(nu, mu, tol);
  if (!nu.cond_independent || !mu.cond_independent)
    throw ValidationError(
        "witness extraction is only offered for conditionally independent "
        "structures");
  if (failed_side != 1 && failed_side != 2)
    throw DimensionError("failed_side must be 1 or 2");
  const auto side1 = check_garbling(marginal(nu, 1), marginal(mu, 1), tol);
  const auto side2 = check_garbling(marginal(mu, 2), marginal(nu, 2), tol);
  if (side1.feasible && side2.feasible)
    throw ValidationError("structures are ordered; no witness game exists");
  if ((failed_side == 1 && side1.feasible) ||
      (failed_side == 2 && side2.feasible))
    throw ValidationError("requested side is feasible; no witness there");
  return ordering_detail::verified_witness(nu, mu, separating_cost, failed_side);
}

template <class S>
OrderResult<S> check_order(const InfoStructure<S>& nu,
                           const InfoStructure<S>& mu,
                           OrderMode mode = OrderMode::automatic,
                           const S& tol = ScalarTraits<S>::default_tolerance()) {
  ordering_detail::require_same_shape(nu, mu, tol);
  const bool both_ci = nu.cond_independent && mu.cond_independent;
  if (mode == OrderMode::decomposed && !both_ci)
    throw ValidationError(
        "decomposed mode requires conditionally independent structures");
  const bool decomposed = mode == OrderMode::decomposed ||
                          (mode == OrderMode::automatic && both_ci);

  OrderResult<S> out;
  if (decomposed) {
    out.mode = OrderMode::decomposed;
    // kappa1 Q1_nu = Q1_mu on (X x Y1) pairs; Q2_nu = kappa2 Q2_mu on
    // (X x Y2) pairs.
    const auto nu1 = marginal(nu, 1), mu1 = marginal(mu, 1);
    const auto nu2 = marginal(nu, 2), mu2 = marginal(mu, 2);
    const auto side1 = check_garbling(nu1, mu1, tol);
    const auto side2 = check_garbling(mu2, nu2, tol);
    if (side1.feasible && side2.feasible) {
      out.ordered = true;
      out.kappa1 = side1.kernel;
      out.kappa2 = side2.kernel;
      auto lhs = apply_garbling(nu, 1, *out.kappa1);
      auto rhs = apply_garbling(mu, 2, *out.kappa2);
      if (!structures_equal(lhs, rhs, tol))
        throw ArithmeticError(
            "kernels do not meet at a common structure (numerical stall); "
            "retry in rational mode");
      out.common = std::move(lhs);
      return out;
    }
    const int failed_side = side1.feasible ? 2 : 1;
    const auto& failed = failed_side == 1 ? side1 : side2;
    out.witness = ordering_detail::verified_witness(
        nu, mu, *failed.separating_cost, failed_side);
    return out;
  }

  out.mode = OrderMode::joint;
  const std::size_t ny1 = nu.ny1(), ny2 = nu.ny2();
  const std::size_t n_k1 = ny1 * ny1, n_k2 = ny2 * ny2;
  // Variables kappa1(a|y1) then kappa2(b|y2), both input-major.
  LinearProgram<S> lp;
  lp.objective.assign(n_k1 + n_k2, S(0));
  for (std::size_t y = 0; y < ny1; ++y) {
    std::vector<S> row(n_k1 + n_k2, S(0));
    for (std::size_t a = 0; a < ny1; ++a) row[y * ny1 + a] = S(1);
    lp.add_eq(std::move(row), S(1));
  }
  for (std::size_t y = 0; y < ny2; ++y) {
    std::vector<S> row(n_k1 + n_k2, S(0));
    for (std::size_t b = 0; b < ny2; ++b) row[n_k1 + y * ny2 + b] = S(1);
    lp.add_eq(std::move(row), S(1));
  }
  for (std::size_t ix = 0; ix < nu.nx(); ++ix) {
    if (!(nu.prior.mass[ix] > S(0))) continue;
    for (std::size_t a = 0; a < ny1; ++a)
      for (std::size_t b = 0; b < ny2; ++b) {
        std::vector<S> row(n_k1 + n_k2, S(0));
        for (std::size_t y1 = 0; y1 < ny1; ++y1)
          row[y1 * ny1 + a] += nu.at(ix, y1, b);
        for (std::size_t y2 = 0; y2 < ny2; ++y2)
          row[n_k1 + y2 * ny2 + b] -= mu.at(ix, a, y2);
        lp.add_eq(std::move(row), S(0));
      }
  }

  auto cert = solve(lp);
  if (cert.status == LpStatus::optimal) {
    out.ordered = true;
    Channel<S> k1{nu.y1_labels, nu.y1_labels, {}};
    k1.rows.assign(ny1, std::vector<S>(ny1, S(0)));
    for (std::size_t y = 0; y < ny1; ++y)
      for (std::size_t a = 0; a < ny1; ++a) k1.rows[y][a] = cert.primal[y * ny1 + a];
    Channel<S> k2{nu.y2_labels, nu.y2_labels, {}};
    k2.rows.assign(ny2, std::vector<S>(ny2, S(0)));
    for (std::size_t y = 0; y < ny2; ++y)
      for (std::size_t b = 0; b < ny2; ++b)
        k2.rows[y][b] = cert.primal[n_k1 + y * ny2 + b];
    out.kappa1 = std::move(k1);
    out.kappa2 = std::move(k2);
    auto lhs = apply_garbling(nu, 1, *out.kappa1);
    auto rhs = apply_garbling(mu, 2, *out.kappa2);
    if (!structures_equal(lhs, rhs, tol))
      throw ArithmeticError(
          "kernels do not meet at a common structure (numerical stall); "
          "retry in rational mode");
    out.common = std::move(lhs);
    return out;
  }
  if (cert.status != LpStatus::infeasible)
    throw ArithmeticError("order LP returned no certificate");
  out.joint_farkas = cert.farkas_eq;
  return out;
}

// Property-suite driver for the garbling monotonicity laws and the
// extra-signal refinement law. Any violation is a build-stopping bug; the
// report carries a full instance dump for each one.
struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::uint64_t trial_offset = 0;  // for sharding trials across workers
  bool check_kernels = true;
  bool check_refinement = true;
  std::size_t max_alphabet = 4;
};

struct SuiteReport {
  std::size_t trials = 0;
  std::size_t kernel_checks = 0;
  std::size_t kernel_violations = 0;
  std::size_t refinement_checks = 0;
  std::size_t refinement_violations = 0;
  double max_violation = 0.0;
  std::vector<std::string> violation_dumps;

  bool clean() const { return kernel_violations + refinement_violations == 0; }
};

namespace ordering_detail {

template <class S>
std::string dump_instance(const InfoStructure<S>& mu, const Game<S>& g,
                          const std::string& what, double lhs, double rhs) {
  std::ostringstream out;
  out << what << ": lhs=" << lhs << " rhs=" << rhs << "\n joint=[";
  for (const auto& v : mu.joint) out << to_double(v) << ' ';
  out << "]\n cost=[";
  for (const auto& v : g.cost) out << to_double(v) << ' ';
  out << "]";
  return out.str();
}

}  // namespace ordering_detail

template <class S>
SuiteReport monotonicity_suite(const SuiteOptions& opts,
                               const InfoStructure<S>* base_mu = nullptr) {
  const S tol = ScalarTraits<S>::default_tolerance();
  SuiteReport report;
  report.trials = opts.trials;
  for (std::uint64_t t = opts.trial_offset; t < opts.trial_offset + opts.trials; ++t) {
    InstanceRng rng = InstanceRng::stream(opts.seed, t);
    auto dim = [&] {
      return static_cast<std::size_t>(rng.range(2, static_cast<long long>(opts.max_alphabet)));
    };
    // Conditionally independent structures whenever refinement checks are
    // on (extend_signal needs them); otherwise alternate with general
    // joints for breadth.
    InfoStructure<S> mu;
    if (base_mu != nullptr)
      mu = *base_mu;
    else if (opts.check_refinement || t % 2 == 0)
      mu = random_cond_independent<S>(rng, dim(), dim(), dim());
    else
      mu = random_joint_structure<S>(rng, dim(), dim(), dim());
    const Game<S> g = random_game<S>(rng, mu.x_labels, dim(), dim());
    const S v = value(g, mu).value;

    if (opts.check_kernels) {
      auto k1 = random_channel<S>(rng, mu.y1_labels, index_labels(dim(), "g"));
      auto k2 = random_channel<S>(rng, mu.y2_labels, index_labels(dim(), "h"));
      const S v_k2 = value(g, apply_garbling(mu, 2, k2)).value;
      const S v_k1 = value(g, apply_garbling(mu, 1, k1)).value;
      report.kernel_checks += 2;
      if (v_k2 > v + tol) {
        ++report.kernel_violations;
        report.violation_dumps.push_back(ordering_detail::dump_instance(
            mu, g, "V(kappa2 mu) <= V(mu) violated", to_double(v_k2), to_double(v)));
      }
      if (v > v_k1 + tol) {
        ++report.kernel_violations;
        report.violation_dumps.push_back(ordering_detail::dump_instance(
            mu, g, "V(mu) <= V(kappa1 mu) violated", to_double(v), to_double(v_k1)));
      }
      report.max_violation =
          std::max({report.max_violation, to_double(v_k2) - to_double(v),
                    to_double(v) - to_double(v_k1)});
    }

    if (opts.check_refinement && mu.cond_independent) {
      const int player = t % 2 == 0 ? 2 : 1;
      auto extra = random_channel<S>(
          rng, mu.x_labels,
          index_labels(static_cast<std::size_t>(rng.range(2, 3)), "w"));
      const S v_ref = value(g, extend_signal(mu, player, extra)).value;
      ++report.refinement_checks;
      const bool bad = player == 2 ? v_ref < v - tol : v_ref > v + tol;
      if (bad) {
        ++report.refinement_violations;
        report.violation_dumps.push_back(ordering_detail::dump_instance(
            mu, g, "refinement moved the value against player " +
                        std::to_string(player),
            to_double(v_ref), to_double(v)));
      }
      report.max_violation = std::max(
          report.max_violation, player == 2 ? to_double(v) - to_double(v_ref)
                                            : to_double(v_ref) - to_double(v));
    }
  }
  return report;
}

}  // namespace zsinfo

#endif  // ZSINFO_ORDERING_HPP_
