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

#ifndef ZSINFO_INFO_STRUCTURE_HPP_
#define ZSINFO_INFO_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "zsinfo/channel.hpp"
#include "zsinfo/errors.hpp"
#include "zsinfo/prob_vector.hpp"
#include "zsinfo/scalar.hpp"

namespace zsinfo {

// Joint probability measure on X x Y for one player (state, private signal).
// This is the object the single-agent machinery and the garbling feasibility
// checks operate on.
template <class S>
struct PairMeasure {
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  std::vector<S> joint;  // x-major: joint[ix * |Y| + iy]

  std::size_t nx() const { return x_labels.size(); }
  std::size_t ny() const { return y_labels.size(); }

  const S& at(std::size_t ix, std::size_t iy) const {
    return joint[ix * ny() + iy];
  }
  S& at(std::size_t ix, std::size_t iy) { return joint[ix * ny() + iy]; }

  ProbVector<S> x_marginal() const {
    std::vector<S> mass(nx(), S(0));
    for (std::size_t ix = 0; ix < nx(); ++ix)
      for (std::size_t iy = 0; iy < ny(); ++iy) mass[ix] += at(ix, iy);
    return {x_labels, std::move(mass)};
  }

  ProbVector<S> y_marginal() const {
    std::vector<S> mass(ny(), S(0));
    for (std::size_t ix = 0; ix < nx(); ++ix)
      for (std::size_t iy = 0; iy < ny(); ++iy) mass[iy] += at(ix, iy);
    return {y_labels, std::move(mass)};
  }

  void validate(const S& tol = ScalarTraits<S>::default_tolerance()) const {
    if (joint.size() != nx() * ny())
      throw DimensionError("pair table size mismatch");
    S total(0);
    for (const S& v : joint) {
      if (v < S(0) && !near_zero(v, tol))
        throw ValidationError("negative pair mass");
      total += v;
    }
    if (!near(total, S(1), tol))
      throw ValidationError("pair mass does not sum to 1");
  }
};

// Joint probability measure on X x Y1 x Y2 with an explicitly declared
// X-marginal prior. `cond_independent` records construction provenance:
// it is set by make_cond_independent and preserved by garblings of a single
// coordinate, which keep the conditional product form.
template <class S>
struct InfoStructure {
  std::vector<std::string> x_labels;
  std::vector<std::string> y1_labels;
  std::vector<std::string> y2_labels;
  std::vector<S> joint;  // x-major, then y1, then y2
  ProbVector<S> prior;
  bool cond_independent = false;

  std::size_t nx() const { return x_labels.size(); }
  std::size_t ny1() const { return y1_labels.size(); }
  std::size_t ny2() const { return y2_labels.size(); }

  const S& at(std::size_t ix, std::size_t iy1, std::size_t iy2) const {
    return joint[(ix * ny1() + iy1) * ny2() + iy2];
  }
  S& at(std::size_t ix, std::size_t iy1, std::size_t iy2) {
    return joint[(ix * ny1() + iy1) * ny2() + iy2];
  }

  void validate(const S& tol = ScalarTraits<S>::default_tolerance()) const {
    if (joint.size() != nx() * ny1() * ny2())
      throw DimensionError("joint tensor size mismatch");
    prior.validate(tol);
    if (prior.labels != x_labels)
      throw DimensionError("prior labels do not match x labels");
    S total(0);
    for (const S& v : joint) {
      if (v < S(0) && !near_zero(v, tol))
        throw ValidationError("negative joint mass");
      total += v;
    }
    if (!near(total, S(1), tol))
      throw ValidationError("joint mass does not sum to 1");
    for (std::size_t ix = 0; ix < nx(); ++ix) {
      S m(0);
      for (std::size_t iy1 = 0; iy1 < ny1(); ++iy1)
        for (std::size_t iy2 = 0; iy2 < ny2(); ++iy2) m += at(ix, iy1, iy2);
      if (!near(m, prior.mass[ix], tol))
        throw ValidationError("X-marginal does not match declared prior at '" +
                              x_labels[ix] + "'");
    }
    if (cond_independent) {
      // joint(x,a,b) * m(x) == m1(x,a) * m2(x,b) wherever the prior is
      // positive.
      for (std::size_t ix = 0; ix < nx(); ++ix) {
        const S& zx = prior.mass[ix];
        if (zx <= S(0)) continue;
        std::vector<S> m1(ny1(), S(0)), m2(ny2(), S(0));
        for (std::size_t a = 0; a < ny1(); ++a)
          for (std::size_t b = 0; b < ny2(); ++b) {
            m1[a] += at(ix, a, b);
            m2[b] += at(ix, a, b);
          }
        for (std::size_t a = 0; a < ny1(); ++a)
          for (std::size_t b = 0; b < ny2(); ++b)
            if (!near(S(at(ix, a, b) * zx), S(m1[a] * m2[b]), tol))
              throw ValidationError(
                  "cond_independent flag set but signals are conditionally "
                  "dependent at state '" + x_labels[ix] + "'");
      }
    }
  }
};

// Independent-measurements form: joint = prior ⊗ q1_bar ⊗ q2_bar scaled by
// the density f.
template <class S>
struct ReducedStructure {
  InfoStructure<S> base;
  ProbVector<S> q1_bar;
  ProbVector<S> q2_bar;
  std::vector<S> density;  // indexed like base.joint

  const S& f(std::size_t ix, std::size_t iy1, std::size_t iy2) const {
    return density[(ix * base.ny1() + iy1) * base.ny2() + iy2];
  }
};

// joint(x,y1,y2) = zeta(x) * q1(y1|x) * q2(y2|x).
template <class S>
InfoStructure<S> make_cond_independent(const ProbVector<S>& zeta,
                                       const Channel<S>& q1,
                                       const Channel<S>& q2) {
  if (q1.input_labels != zeta.labels || q2.input_labels != zeta.labels)
    throw DimensionError("channel input labels do not match the prior");
  InfoStructure<S> mu;
  mu.x_labels = zeta.labels;
  mu.y1_labels = q1.output_labels;
  mu.y2_labels = q2.output_labels;
  mu.prior = zeta;
  mu.cond_independent = true;
  mu.joint.assign(mu.nx() * mu.ny1() * mu.ny2(), S(0));
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t a = 0; a < mu.ny1(); ++a)
      for (std::size_t b = 0; b < mu.ny2(); ++b)
        mu.at(ix, a, b) = zeta.mass[ix] * q1.rows[ix][a] * q2.rows[ix][b];
  return mu;
}

// Builds an InfoStructure directly from a joint tensor; the prior is the
// computed X-marginal. The cond_independent flag is left unset.
template <class S>
InfoStructure<S> structure_from_joint(std::vector<std::string> x_labels,
                                      std::vector<std::string> y1_labels,
                                      std::vector<std::string> y2_labels,
                                      std::vector<S> joint) {
  InfoStructure<S> mu;
  mu.x_labels = std::move(x_labels);
  mu.y1_labels = std::move(y1_labels);
  mu.y2_labels = std::move(y2_labels);
  mu.joint = std::move(joint);
  if (mu.joint.size() != mu.nx() * mu.ny1() * mu.ny2())
    throw DimensionError("joint tensor size mismatch");
  std::vector<S> mass(mu.nx(), S(0));
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t a = 0; a < mu.ny1(); ++a)
      for (std::size_t b = 0; b < mu.ny2(); ++b) mass[ix] += mu.at(ix, a, b);
  mu.prior = {mu.x_labels, std::move(mass)};
  return mu;
}

// Joint measure on X x Y^player induced by summing out the other signal.
template <class S>
PairMeasure<S> marginal(const InfoStructure<S>& mu, int player) {
  if (player != 1 && player != 2) throw DimensionError("player must be 1 or 2");
  PairMeasure<S> pair;
  pair.x_labels = mu.x_labels;
  pair.y_labels = player == 1 ? mu.y1_labels : mu.y2_labels;
  pair.joint.assign(mu.nx() * pair.ny(), S(0));
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t a = 0; a < mu.ny1(); ++a)
      for (std::size_t b = 0; b < mu.ny2(); ++b)
        pair.at(ix, player == 1 ? a : b) += mu.at(ix, a, b);
  return pair;
}

// (kappa mu)(x, y~, y2) = sum_y kappa(y~|y) mu(x, y, y2), and symmetrically
// for player 2. The prior is untouched; garbling one coordinate of a
// conditionally independent structure keeps the product form, so the flag
// carries over.
template <class S>
InfoStructure<S> apply_garbling(const InfoStructure<S>& mu, int player,
                                const Channel<S>& kappa) {
  if (player != 1 && player != 2) throw DimensionError("player must be 1 or 2");
  const auto& signal_labels = player == 1 ? mu.y1_labels : mu.y2_labels;
  if (kappa.input_labels != signal_labels)
    throw DimensionError("garbling kernel input labels do not match player " +
                         std::to_string(player) + " signals");
  InfoStructure<S> out;
  out.x_labels = mu.x_labels;
  out.y1_labels = player == 1 ? kappa.output_labels : mu.y1_labels;
  out.y2_labels = player == 2 ? kappa.output_labels : mu.y2_labels;
  out.prior = mu.prior;
  out.cond_independent = mu.cond_independent;
  out.joint.assign(out.nx() * out.ny1() * out.ny2(), S(0));
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t a = 0; a < mu.ny1(); ++a)
      for (std::size_t b = 0; b < mu.ny2(); ++b) {
        const S& w = mu.at(ix, a, b);
        if (w == S(0)) continue;
        const std::size_t garbled = player == 1 ? a : b;
        for (std::size_t t = 0; t < kappa.num_outputs(); ++t) {
          const S& k = kappa.rows[garbled][t];
          if (k == S(0)) continue;
          if (player == 1)
            out.at(ix, t, b) += w * k;
          else
            out.at(ix, a, t) += w * k;
        }
      }
  return out;
}

// Same garbling applied to a single-player pair: (kappa p)(x, y~) =
// sum_y kappa(y~|y) p(x, y).
template <class S>
PairMeasure<S> apply_kernel(const Channel<S>& kappa, const PairMeasure<S>& p) {
  if (kappa.input_labels != p.y_labels)
    throw DimensionError("kernel input labels do not match pair signals");
  PairMeasure<S> out;
  out.x_labels = p.x_labels;
  out.y_labels = kappa.output_labels;
  out.joint.assign(p.nx() * kappa.num_outputs(), S(0));
  for (std::size_t ix = 0; ix < p.nx(); ++ix)
    for (std::size_t iy = 0; iy < p.ny(); ++iy) {
      const S& w = p.at(ix, iy);
      if (w == S(0)) continue;
      for (std::size_t t = 0; t < kappa.num_outputs(); ++t)
        out.at(ix, t) += w * kappa.rows[iy][t];
    }
  return out;
}

// The product pair zeta ⊗ q.
template <class S>
PairMeasure<S> pair_from_channel(const ProbVector<S>& zeta,
                                 const Channel<S>& q) {
  if (q.input_labels != zeta.labels)
    throw DimensionError("channel input labels do not match prior");
  PairMeasure<S> out;
  out.x_labels = zeta.labels;
  out.y_labels = q.output_labels;
  out.joint.assign(out.nx() * out.ny(), S(0));
  for (std::size_t ix = 0; ix < out.nx(); ++ix)
    for (std::size_t iy = 0; iy < out.ny(); ++iy)
      out.at(ix, iy) = zeta.mass[ix] * q.rows[ix][iy];
  return out;
}

// Conditional rows of a pair at states with positive prior; uniform filler
// elsewhere (those rows carry no mass and never affect downstream products).
template <class S>
Channel<S> pair_to_channel(const PairMeasure<S>& p) {
  Channel<S> q;
  q.input_labels = p.x_labels;
  q.output_labels = p.y_labels;
  q.rows.assign(p.nx(), std::vector<S>(p.ny(), S(0)));
  for (std::size_t ix = 0; ix < p.nx(); ++ix) {
    S zx(0);
    for (std::size_t iy = 0; iy < p.ny(); ++iy) zx += p.at(ix, iy);
    if (zx > S(0)) {
      for (std::size_t iy = 0; iy < p.ny(); ++iy) q.rows[ix][iy] = p.at(ix, iy) / zx;
    } else {
      for (std::size_t iy = 0; iy < p.ny(); ++iy)
        q.rows[ix][iy] = S(1) / S(static_cast<long>(p.ny()));
    }
  }
  return q;
}

// Independent-measurements reduction. Defaults to the structure's own signal
// marginals as reference measures, which makes the density always well
// defined; caller-supplied references must dominate the joint.
template <class S>
ReducedStructure<S> reduce_independent(
    const InfoStructure<S>& mu,
    std::type_identity_t<std::optional<ProbVector<S>>> q1_bar = {},
    std::type_identity_t<std::optional<ProbVector<S>>> q2_bar = {}) {
  ReducedStructure<S> red;
  red.base = mu;
  red.q1_bar = q1_bar ? std::move(*q1_bar) : marginal(mu, 1).y_marginal();
  red.q2_bar = q2_bar ? std::move(*q2_bar) : marginal(mu, 2).y_marginal();
  if (red.q1_bar.labels != mu.y1_labels || red.q2_bar.labels != mu.y2_labels)
    throw DimensionError("reference measure labels do not match signals");
  red.density.assign(mu.joint.size(), S(0));
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t a = 0; a < mu.ny1(); ++a)
      for (std::size_t b = 0; b < mu.ny2(); ++b) {
        const S& num = mu.at(ix, a, b);
        const S den = mu.prior.mass[ix] * red.q1_bar.mass[a] * red.q2_bar.mass[b];
        if (den > S(0)) {
          red.density[(ix * mu.ny1() + a) * mu.ny2() + b] = num / den;
        } else if (!(num == S(0))) {
          throw ValidationError(
              "absolute continuity violated: joint mass at ('" +
              mu.x_labels[ix] + "','" + mu.y1_labels[a] + "','" +
              mu.y2_labels[b] + "') outside the reference product support");
        }
      }
  return red;
}

// Rebuilds the joint from a reduction; inverse of reduce_independent.
template <class S>
InfoStructure<S> multiply_out(const ReducedStructure<S>& red) {
  InfoStructure<S> mu = red.base;
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t a = 0; a < mu.ny1(); ++a)
      for (std::size_t b = 0; b < mu.ny2(); ++b)
        mu.at(ix, a, b) = mu.prior.mass[ix] * red.q1_bar.mass[a] *
                          red.q2_bar.mass[b] * red.f(ix, a, b);
  return mu;
}

// Refines one player's signal with an extra conditionally independent
// component drawn from `extra`: the new signal is the pair (y, w) with
// labels "y.w". Requires a conditionally independent input.
template <class S>
InfoStructure<S> extend_signal(const InfoStructure<S>& mu, int player,
                               const Channel<S>& extra) {
  if (!mu.cond_independent)
    throw ValidationError("extend_signal requires a conditionally independent structure");
  if (extra.input_labels != mu.x_labels)
    throw DimensionError("extra component input labels must match states");
  const Channel<S> q1 = pair_to_channel(marginal(mu, 1));
  const Channel<S> q2 = pair_to_channel(marginal(mu, 2));
  const Channel<S>& base = player == 1 ? q1 : q2;

  Channel<S> refined;
  refined.input_labels = mu.x_labels;
  for (const auto& y : base.output_labels)
    for (const auto& w : extra.output_labels)
      refined.output_labels.push_back(y + "." + w);
  refined.rows.assign(mu.nx(),
                      std::vector<S>(refined.output_labels.size(), S(0)));
  for (std::size_t ix = 0; ix < mu.nx(); ++ix)
    for (std::size_t y = 0; y < base.num_outputs(); ++y)
      for (std::size_t w = 0; w < extra.num_outputs(); ++w)
        refined.rows[ix][y * extra.num_outputs() + w] =
            base.rows[ix][y] * extra.rows[ix][w];

  return player == 1 ? make_cond_independent(mu.prior, refined, q2)
                     : make_cond_independent(mu.prior, q1, refined);
}

template <class S>
bool pairs_equal(const PairMeasure<S>& a, const PairMeasure<S>& b,
                 const S& tol = ScalarTraits<S>::default_tolerance()) {
  if (a.x_labels != b.x_labels || a.y_labels != b.y_labels) return false;
  for (std::size_t i = 0; i < a.joint.size(); ++i)
    if (!near(a.joint[i], b.joint[i], tol)) return false;
  return true;
}

template <class S>
bool structures_equal(const InfoStructure<S>& a, const InfoStructure<S>& b,
                      const S& tol = ScalarTraits<S>::default_tolerance()) {
  if (a.x_labels != b.x_labels || a.y1_labels != b.y1_labels ||
      a.y2_labels != b.y2_labels)
    return false;
  for (std::size_t i = 0; i < a.joint.size(); ++i)
    if (!near(a.joint[i], b.joint[i], tol)) return false;
  return true;
}

}  // namespace zsinfo

#endif  // ZSINFO_INFO_STRUCTURE_HPP_
