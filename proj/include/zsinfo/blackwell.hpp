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

#ifndef ZSINFO_BLACKWELL_HPP_
#define ZSINFO_BLACKWELL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsinfo/errors.hpp"
#include "zsinfo/game.hpp"
#include "zsinfo/info_structure.hpp"
#include "zsinfo/lp.hpp"
#include "zsinfo/solver.hpp"

namespace zsinfo {

// Bounded cost table f(x, y) on states x signals, the finite stand-in for a
// separating functional.
template <class S>
struct CostTable {
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  std::vector<S> values;  // x-major

  const S& at(std::size_t ix, std::size_t iy) const {
    return values[ix * y_labels.size() + iy];
  }
  S& at(std::size_t ix, std::size_t iy) {
    return values[ix * y_labels.size() + iy];
  }

  // As a single-agent decision problem with U = Y.
  Game<S> as_decision_problem() const {
    return single_agent_game(x_labels, y_labels, values);
  }
};

template <class S>
struct GarblingResult {
  bool feasible = false;
  std::optional<Channel<S>> kernel;           // iff feasible
  std::optional<CostTable<S>> separating_cost;  // iff infeasible
  S margin{};  // min_kappa <kappa mu, f> - <nu, f>, > 0 iff infeasible
};

namespace blackwell_detail {

template <class S>
void require_shared_prior(const PairMeasure<S>& a, const PairMeasure<S>& b,
                          const S& tol) {
  if (a.x_labels != b.x_labels)
    throw DimensionError("pairs disagree on state labels");
  const auto za = a.x_marginal(), zb = b.x_marginal();
  for (std::size_t i = 0; i < za.size(); ++i)
    if (!near(za.mass[i], zb.mass[i], tol))
      throw ValidationError("pairs do not share the same prior at state '" +
                            a.x_labels[i] + "'");
}

// min over kernels of <kappa mu, f>: the optimal value of the decision
// problem (f, U = Y_f) under mu, obtained here by an LP over kernels so the
// margin re-verification stays independent of the closed-form route.
template <class S>
S min_garbled_payoff(const PairMeasure<S>& mu_pair, const CostTable<S>& f) {
  const std::size_t ny = mu_pair.ny();
  const std::size_t nt = f.y_labels.size();
  LinearProgram<S> lp;
  lp.objective.assign(ny * nt, S(0));
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t t = 0; t < nt; ++t) {
      S coeff(0);
      for (std::size_t ix = 0; ix < mu_pair.nx(); ++ix)
        coeff += f.at(ix, t) * mu_pair.at(ix, y);
      lp.objective[y * nt + t] = coeff;
    }
  for (std::size_t y = 0; y < ny; ++y) {
    std::vector<S> row(ny * nt, S(0));
    for (std::size_t t = 0; t < nt; ++t) row[y * nt + t] = S(1);
    lp.add_eq(std::move(row), S(1));
  }
  auto cert = solve(lp);
  if (cert.status != LpStatus::optimal)
    throw ArithmeticError("garbled-payoff minimization LP failed");
  return cert.objective_value;
}

template <class S>
S pairing(const PairMeasure<S>& p, const CostTable<S>& f) {
  S acc(0);
  for (std::size_t ix = 0; ix < p.nx(); ++ix)
    for (std::size_t iy = 0; iy < p.ny(); ++iy)
      acc += f.at(ix, iy) * p.at(ix, iy);
  return acc;
}

}  // namespace blackwell_detail

// Decides whether nu_pair is a garbling (stochastic degradation) of mu_pair:
// existence of kappa >= 0, row-stochastic, with
//     sum_y mu(x, y) kappa(y~ | y) = nu(x, y~)
// at every state of positive prior. Feasible: some witnessing kernel is
// returned (the LP's vertex; the product, not the kernel, is pinned down).
// Infeasible: the Farkas components on the data rows, shifted per state and
// scaled to sup-norm 1, form a bounded separating cost f with
//     <nu, f> + margin <= min_kappa <kappa mu, f>,   margin > 0,
// the margin being re-verified by an independent minimization LP.
template <class S>
GarblingResult<S> check_garbling(
    const PairMeasure<S>& mu_pair, const PairMeasure<S>& nu_pair,
    const S& tol = ScalarTraits<S>::default_tolerance()) {
  blackwell_detail::require_shared_prior(mu_pair, nu_pair, tol);
  const std::size_t nx = mu_pair.nx();
  const std::size_t nya = mu_pair.ny();  // source signals
  const std::size_t nyb = nu_pair.ny();  // target signals
  const auto zeta = mu_pair.x_marginal();

  std::vector<std::size_t> kept_x;
  for (std::size_t ix = 0; ix < nx; ++ix)
    if (zeta.mass[ix] > S(0)) kept_x.push_back(ix);

  // Variables kappa(y~ | y), y-major.
  LinearProgram<S> lp;
  lp.objective.assign(nya * nyb, S(0));
  for (std::size_t y = 0; y < nya; ++y) {
    std::vector<S> row(nya * nyb, S(0));
    for (std::size_t t = 0; t < nyb; ++t) row[y * nyb + t] = S(1);
    lp.add_eq(std::move(row), S(1));
  }
  for (std::size_t k = 0; k < kept_x.size(); ++k) {
    const std::size_t ix = kept_x[k];
    for (std::size_t t = 0; t < nyb; ++t) {
      std::vector<S> row(nya * nyb, S(0));
      for (std::size_t y = 0; y < nya; ++y) row[y * nyb + t] = mu_pair.at(ix, y);
      lp.add_eq(std::move(row), nu_pair.at(ix, t));
    }
  }

  auto cert = solve(lp);
  GarblingResult<S> out;
  if (cert.status == LpStatus::optimal) {
    out.feasible = true;
    Channel<S> kappa;
    kappa.input_labels = mu_pair.y_labels;
    kappa.output_labels = nu_pair.y_labels;
    kappa.rows.assign(nya, std::vector<S>(nyb, S(0)));
    for (std::size_t y = 0; y < nya; ++y)
      for (std::size_t t = 0; t < nyb; ++t)
        kappa.rows[y][t] = cert.primal[y * nyb + t];
    out.kernel = std::move(kappa);
    return out;
  }
  if (cert.status != LpStatus::infeasible)
    throw ArithmeticError("garbling feasibility LP returned no certificate");

  // Farkas components paired with the data block, one per (x, y~).
  CostTable<S> f;
  f.x_labels = mu_pair.x_labels;
  f.y_labels = nu_pair.y_labels;
  f.values.assign(nx * nyb, S(0));
  for (std::size_t k = 0; k < kept_x.size(); ++k)
    for (std::size_t t = 0; t < nyb; ++t)
      f.at(kept_x[k], t) = cert.farkas_eq[nya + k * nyb + t];

  // Per-state shift to a nonnegative table, then sup-norm 1. Shifts move
  // both sides of the separation by the same constant because the pairs
  // share the prior, so the margin ordering is unchanged.
  S sup(0);
  for (const std::size_t ix : kept_x) {
    S lo = f.at(ix, 0);
    for (std::size_t t = 1; t < nyb; ++t)
      if (f.at(ix, t) < lo) lo = f.at(ix, t);
    for (std::size_t t = 0; t < nyb; ++t) {
      f.at(ix, t) -= lo;
      if (f.at(ix, t) > sup) sup = f.at(ix, t);
    }
  }
  if (sup > S(0))
    for (S& v : f.values) v = v / sup;

  out.margin = blackwell_detail::min_garbled_payoff(mu_pair, f) -
               blackwell_detail::pairing(nu_pair, f);
  if (!(out.margin > S(0)))
    throw ArithmeticError(
        "separating cost lost its margin (numerical stall); retry in "
        "rational mode");
  out.separating_cost = std::move(f);
  return out;
}

template <class S>
struct BatteryEntry {
  S value_mu;
  S value_nu;
};

template <class S>
struct BatteryReport {
  std::vector<BatteryEntry<S>> entries;
  bool mu_never_worse = true;  // J*(mu) <= J*(nu) on every cost
};

// Empirical comparison over a battery of single-agent decision problems.
// A sanity layer only: the decision procedure is check_garbling.
template <class S>
BatteryReport<S> blackwell_battery(
    const PairMeasure<S>& mu_pair, const PairMeasure<S>& nu_pair,
    const std::vector<Game<S>>& costs,
    const S& tol = ScalarTraits<S>::default_tolerance()) {
  blackwell_detail::require_shared_prior(mu_pair, nu_pair, tol);
  BatteryReport<S> report;
  for (const auto& cost : costs) {
    BatteryEntry<S> e{single_agent_value(cost, mu_pair).value,
                      single_agent_value(cost, nu_pair).value};
    if (e.value_mu > e.value_nu + tol) report.mu_never_worse = false;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace zsinfo

#endif  // ZSINFO_BLACKWELL_HPP_
