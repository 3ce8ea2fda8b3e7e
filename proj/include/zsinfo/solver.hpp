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

#ifndef ZSINFO_SOLVER_HPP_
#define ZSINFO_SOLVER_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zsinfo/errors.hpp"
#include "zsinfo/game.hpp"
#include "zsinfo/info_structure.hpp"
#include "zsinfo/lp.hpp"
#include "zsinfo/prob_vector.hpp"
#include "zsinfo/scalar.hpp"

namespace zsinfo {

// Randomized policy: one distribution over actions per private signal.
template <class S>
struct BehavioralStrategy {
  int player = 1;
  std::vector<std::string> signal_labels;
  std::vector<std::string> action_labels;
  std::vector<std::vector<S>> table;  // table[signal][action]

  void validate(const S& tol = ScalarTraits<S>::default_tolerance()) const {
    if (table.size() != signal_labels.size())
      throw DimensionError("strategy table size mismatch");
    for (const auto& row : table) {
      ProbVector<S> pv{action_labels, row};
      pv.validate(tol);
    }
  }
};

// V* is the maximizer's expected cost at equilibrium.
template <class S>
struct GameValue {
  S value{};
  BehavioralStrategy<S> strategy1;
  BehavioralStrategy<S> strategy2;
  S duality_gap{};
};

template <class S>
struct SingleAgentSolution {
  S value{};
  std::vector<std::size_t> policy;  // action index per signal index
};

namespace solver_detail {

// A[(y2,u2)][(y1,u1)] = sum_x mu(x,y1,y2) c(x,u1,u2): the bilinear payoff
// operator between the two behavioral strategies.
template <class S>
std::vector<S> payoff_operator(const Game<S>& game, const InfoStructure<S>& mu) {
  const std::size_t ny1 = mu.ny1(), ny2 = mu.ny2();
  const std::size_t nu1 = game.nu1(), nu2 = game.nu2();
  std::vector<S> a(ny2 * nu2 * ny1 * nu1, S(0));
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t y1 = 0; y1 < ny1; ++y1)
      for (std::size_t y2 = 0; y2 < ny2; ++y2) {
        const S& w = mu.at(ix, y1, y2);
        if (w == S(0)) continue;
        for (std::size_t u1 = 0; u1 < nu1; ++u1)
          for (std::size_t u2 = 0; u2 < nu2; ++u2)
            a[((y2 * nu2 + u2) * ny1 + y1) * nu1 + u1] +=
                w * game.at(ix, u1, u2);
      }
  return a;
}

template <class S>
void check_compatible(const Game<S>& game, const InfoStructure<S>& mu) {
  if (game.x_labels != mu.x_labels)
    throw DimensionError("game and structure disagree on state labels");
}

}  // namespace solver_detail

// Equilibrium value and strategies. Minimizer-side LP over the behavioral
// strategy a(u1|y1) with per-signal best-response slacks for the maximizer;
// the maximizer's equilibrium strategy is read off the duals of the
// best-response block, so one tableau yields both.
template <class S>
GameValue<S> value(const Game<S>& game, const InfoStructure<S>& mu,
                   const LpOptions& opts = {}) {
  solver_detail::check_compatible(game, mu);
  game.validate();
  const std::size_t ny1 = mu.ny1(), ny2 = mu.ny2();
  const std::size_t nu1 = game.nu1(), nu2 = game.nu2();
  const auto a_op = solver_detail::payoff_operator(game, mu);
  const std::size_t n_a = ny1 * nu1;

  LinearProgram<S> lp;
  lp.objective.assign(n_a + ny2, S(0));
  lp.free_vars.assign(n_a + ny2, 0);
  for (std::size_t y2 = 0; y2 < ny2; ++y2) {
    lp.objective[n_a + y2] = S(1);
    lp.free_vars[n_a + y2] = 1;
  }
  for (std::size_t y1 = 0; y1 < ny1; ++y1) {
    std::vector<S> row(n_a + ny2, S(0));
    for (std::size_t u1 = 0; u1 < nu1; ++u1) row[y1 * nu1 + u1] = S(1);
    lp.add_eq(std::move(row), S(1));
  }
  for (std::size_t y2 = 0; y2 < ny2; ++y2)
    for (std::size_t u2 = 0; u2 < nu2; ++u2) {
      std::vector<S> row(n_a + ny2, S(0));
      for (std::size_t y1 = 0; y1 < ny1; ++y1)
        for (std::size_t u1 = 0; u1 < nu1; ++u1)
          row[y1 * nu1 + u1] = a_op[((y2 * nu2 + u2) * ny1 + y1) * nu1 + u1];
      row[n_a + y2] = S(-1);
      lp.add_le(std::move(row), S(0));
    }

  auto cert = solve(lp, opts);
  if (cert.status != LpStatus::optimal)
    throw ArithmeticError("equilibrium LP failed to reach an optimum");

  GameValue<S> out;
  out.value = cert.objective_value;
  out.strategy1 = {1, mu.y1_labels, game.u1_labels, {}};
  out.strategy1.table.assign(ny1, std::vector<S>(nu1, S(0)));
  for (std::size_t y1 = 0; y1 < ny1; ++y1)
    for (std::size_t u1 = 0; u1 < nu1; ++u1)
      out.strategy1.table[y1][u1] = cert.primal[y1 * nu1 + u1];
  out.strategy2 = {2, mu.y2_labels, game.u2_labels, {}};
  out.strategy2.table.assign(ny2, std::vector<S>(nu2, S(0)));
  for (std::size_t y2 = 0; y2 < ny2; ++y2)
    for (std::size_t u2 = 0; u2 < nu2; ++u2)
      out.strategy2.table[y2][u2] = S(-cert.dual_le[y2 * nu2 + u2]);
  S dual_obj(0);
  for (const S& d : cert.dual_eq) dual_obj += d;
  out.duality_gap = abs_value(S(out.value - dual_obj));
  return out;
}

// The symmetric maximizer-side LP; must reach the same optimum. Kept public
// so minimax equality is checkable as a property rather than trusted.
template <class S>
GameValue<S> value_maximizer_side(const Game<S>& game,
                                  const InfoStructure<S>& mu,
                                  const LpOptions& opts = {}) {
  solver_detail::check_compatible(game, mu);
  game.validate();
  const std::size_t ny1 = mu.ny1(), ny2 = mu.ny2();
  const std::size_t nu1 = game.nu1(), nu2 = game.nu2();
  const auto a_op = solver_detail::payoff_operator(game, mu);
  const std::size_t n_b = ny2 * nu2;

  LinearProgram<S> lp;
  lp.sense = LpSense::maximize;
  lp.objective.assign(n_b + ny1, S(0));
  lp.free_vars.assign(n_b + ny1, 0);
  for (std::size_t y1 = 0; y1 < ny1; ++y1) {
    lp.objective[n_b + y1] = S(1);
    lp.free_vars[n_b + y1] = 1;
  }
  for (std::size_t y2 = 0; y2 < ny2; ++y2) {
    std::vector<S> row(n_b + ny1, S(0));
    for (std::size_t u2 = 0; u2 < nu2; ++u2) row[y2 * nu2 + u2] = S(1);
    lp.add_eq(std::move(row), S(1));
  }
  for (std::size_t y1 = 0; y1 < ny1; ++y1)
    for (std::size_t u1 = 0; u1 < nu1; ++u1) {
      std::vector<S> row(n_b + ny1, S(0));
      for (std::size_t y2 = 0; y2 < ny2; ++y2)
        for (std::size_t u2 = 0; u2 < nu2; ++u2)
          row[y2 * nu2 + u2] =
              S(-a_op[((y2 * nu2 + u2) * ny1 + y1) * nu1 + u1]);
      row[n_b + y1] = S(1);
      lp.add_le(std::move(row), S(0));
    }

  auto cert = solve(lp, opts);
  if (cert.status != LpStatus::optimal)
    throw ArithmeticError("equilibrium LP failed to reach an optimum");

  GameValue<S> out;
  out.value = cert.objective_value;
  out.strategy2 = {2, mu.y2_labels, game.u2_labels, {}};
  out.strategy2.table.assign(ny2, std::vector<S>(nu2, S(0)));
  for (std::size_t y2 = 0; y2 < ny2; ++y2)
    for (std::size_t u2 = 0; u2 < nu2; ++u2)
      out.strategy2.table[y2][u2] = cert.primal[y2 * nu2 + u2];
  out.strategy1 = {1, mu.y1_labels, game.u1_labels, {}};
  out.strategy1.table.assign(ny1, std::vector<S>(nu1, S(0)));
  for (std::size_t y1 = 0; y1 < ny1; ++y1)
    for (std::size_t u1 = 0; u1 < nu1; ++u1)
      out.strategy1.table[y1][u1] = cert.dual_le[y1 * nu1 + u1];
  S dual_obj(0);
  for (const S& d : cert.dual_eq) dual_obj += d;
  out.duality_gap = abs_value(S(out.value - dual_obj));
  return out;
}

// Expected cost of a fixed strategy profile.
template <class S>
S evaluate(const Game<S>& game, const InfoStructure<S>& mu,
           const BehavioralStrategy<S>& s1, const BehavioralStrategy<S>& s2) {
  solver_detail::check_compatible(game, mu);
  S total(0);
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t y1 = 0; y1 < mu.ny1(); ++y1)
      for (std::size_t y2 = 0; y2 < mu.ny2(); ++y2) {
        const S& w = mu.at(ix, y1, y2);
        if (w == S(0)) continue;
        for (std::size_t u1 = 0; u1 < game.nu1(); ++u1) {
          if (s1.table[y1][u1] == S(0)) continue;
          for (std::size_t u2 = 0; u2 < game.nu2(); ++u2)
            total += w * s1.table[y1][u1] * s2.table[y2][u2] *
                     game.at(ix, u1, u2);
        }
      }
  return total;
}

// Optimal deterministic policy for a single-agent problem: per signal, the
// action minimizing posterior expected cost, ties broken by lowest action
// index. Signals with zero marginal get action 0.
template <class S>
SingleAgentSolution<S> single_agent_value(const Game<S>& cost,
                                          const PairMeasure<S>& pair) {
  if (!cost.single_agent())
    throw DimensionError("single_agent_value needs |U2| = 1");
  if (cost.x_labels != pair.x_labels)
    throw DimensionError("cost and pair disagree on state labels");
  SingleAgentSolution<S> out;
  out.policy.assign(pair.ny(), 0);
  for (std::size_t iy = 0; iy < pair.ny(); ++iy) {
    S best(0);
    std::size_t best_u = 0;
    for (std::size_t u = 0; u < cost.nu1(); ++u) {
      S s(0);
      for (std::size_t ix = 0; ix < pair.nx(); ++ix)
        s += pair.at(ix, iy) * cost.at(ix, u, 0);
      if (u == 0 || s < best) {
        best = s;
        best_u = u;
      }
    }
    out.policy[iy] = best_u;
    out.value += best;
  }
  return out;
}

template <class S>
struct Posterior {
  S weight;              // P(y)
  std::string y_label;
  ProbVector<S> dist;    // pi_y over X
};

// Bayes disintegration of a pair: posteriors at signals of positive mass.
// Weights re-mix to the X-marginal (barycenter property).
template <class S>
std::vector<Posterior<S>> posteriors(const PairMeasure<S>& pair) {
  std::vector<Posterior<S>> out;
  for (std::size_t iy = 0; iy < pair.ny(); ++iy) {
    S py(0);
    for (std::size_t ix = 0; ix < pair.nx(); ++ix) py += pair.at(ix, iy);
    if (!(py > S(0))) continue;
    Posterior<S> p;
    p.weight = py;
    p.y_label = pair.y_labels[iy];
    p.dist.labels = pair.x_labels;
    p.dist.mass.resize(pair.nx());
    for (std::size_t ix = 0; ix < pair.nx(); ++ix)
      p.dist.mass[ix] = pair.at(ix, iy) / py;
    out.push_back(std::move(p));
  }
  return out;
}

// W*(pi) = min_u E_pi[c(x,u)]: the optimal expected cost at a posterior.
template <class S>
S posterior_optimal_cost(const Game<S>& cost, const ProbVector<S>& pi) {
  if (!cost.single_agent())
    throw DimensionError("posterior_optimal_cost needs |U2| = 1");
  S best(0);
  for (std::size_t u = 0; u < cost.nu1(); ++u) {
    S s(0);
    for (std::size_t ix = 0; ix < pi.size(); ++ix)
      s += pi.mass[ix] * cost.at(ix, u, 0);
    if (u == 0 || s < best) best = s;
  }
  return best;
}

// Posterior-space form of the single-agent comparison: true iff
// sum_y P_mu(y) W*(pi_y) <= sum_y P_nu(y) W*(pi_y), i.e. mu is weakly better
// for this decision problem.
template <class S>
bool posterior_functional_check(const Game<S>& cost,
                                const PairMeasure<S>& mu_pair,
                                const PairMeasure<S>& nu_pair) {
  const auto zeta_mu = mu_pair.x_marginal();
  const auto zeta_nu = nu_pair.x_marginal();
  if (zeta_mu.labels != zeta_nu.labels)
    throw DimensionError("pairs disagree on state labels");
  for (std::size_t i = 0; i < zeta_mu.size(); ++i)
    if (!near(zeta_mu.mass[i], zeta_nu.mass[i]))
      throw ValidationError("pairs do not share the same prior");
  auto mix = [&](const PairMeasure<S>& p) {
    S acc(0);
    for (const auto& post : posteriors(p))
      acc += post.weight * posterior_optimal_cost(cost, post.dist);
    return acc;
  };
  return mix(mu_pair) <= mix(nu_pair);
}

}  // namespace zsinfo

#endif  // ZSINFO_SOLVER_HPP_
