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

#ifndef ZSINFO_TESTS_FIXTURES_HPP_
#define ZSINFO_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "zsinfo/channel.hpp"
#include "zsinfo/game.hpp"
#include "zsinfo/info_structure.hpp"
#include "zsinfo/prob_vector.hpp"
#include "zsinfo/scalar.hpp"

namespace zsinfo::fixtures {

inline std::vector<std::string> four() { return {"1", "2", "3", "4"}; }

// The guess-and-copy game on four states: the minimizer is paid for guessing
// the state (-12), reduced to -5 when the maximizer matches her action.
template <class S>
Game<S> guess_copy_game() {
  Game<S> g;
  g.x_labels = four();
  g.u1_labels = four();
  g.u2_labels = four();
  g.cost.assign(4 * 4 * 4, S(0));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t u1 = 0; u1 < 4; ++u1)
      for (std::size_t u2 = 0; u2 < 4; ++u2) {
        if (u1 != x) continue;
        g.at(x, u1, u2) = u1 == u2 ? S(-5) : S(-12);
      }
  return g;
}

// Four-letter symmetric noisy channel: correct with probability `hit`,
// each wrong letter with (1-hit)/3.
template <class S>
Channel<S> four_letter_noisy(const S& hit) {
  const S miss = (S(1) - hit) / S(3);
  Channel<S> q{four(), four(), {}};
  q.rows.assign(4, std::vector<S>(4, miss));
  for (std::size_t i = 0; i < 4; ++i) q.rows[i][i] = hit;
  return q;
}

// Shared-measurement structure: y1 = y2 = y with the 0.9-accurate channel.
template <class S>
InfoStructure<S> mu1_shared() {
  const auto zeta = uniform_prob<S>(four());
  const auto q = four_letter_noisy<S>(make_scalar<S>(9, 10));
  InfoStructure<S> mu;
  mu.x_labels = four();
  mu.y1_labels = four();
  mu.y2_labels = four();
  mu.prior = zeta;
  mu.joint.assign(4 * 4 * 4, S(0));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      mu.at(x, y, y) = zeta.mass[x] * q.rows[x][y];
  return mu;
}

// Conditionally independent structure: 0.85-accurate minimizer signal,
// 0.9-accurate maximizer signal.
template <class S>
InfoStructure<S> mu2_independent() {
  return make_cond_independent(uniform_prob<S>(four()),
                               four_letter_noisy<S>(make_scalar<S>(17, 20)),
                               four_letter_noisy<S>(make_scalar<S>(9, 10)));
}

// The rounded 0.9423/0.0192 garbling kernel; row sums are 0.9999, hence the
// relaxed construction tolerance in float mode.
inline Channel<double> kappa_tilde() {
  Channel<double> k{four(), four(), {}};
  k.rows.assign(4, std::vector<double>(4, 0.0192));
  for (std::size_t i = 0; i < 4; ++i) k.rows[i][i] = 0.9423;
  k.validate(1e-3);
  return k;
}

// Binary symmetric channel with flip probability eps.
template <class S>
Channel<S> bsc(const S& eps,
               std::vector<std::string> labels = {"0", "1"}) {
  Channel<S> q{labels, labels, {}};
  q.rows = {{S(1) - eps, eps}, {eps, S(1) - eps}};
  return q;
}

// Binary guessing cost 1{u != x}.
template <class S>
Game<S> guessing_cost(std::vector<std::string> labels = {"0", "1"}) {
  const std::size_t n = labels.size();
  Game<S> g;
  g.x_labels = labels;
  g.u1_labels = labels;
  g.u2_labels = {"0"};
  g.cost.assign(n * n, S(1));
  for (std::size_t x = 0; x < n; ++x) g.at(x, x, 0) = S(0);
  return g;
}

}  // namespace zsinfo::fixtures

#endif  // ZSINFO_TESTS_FIXTURES_HPP_
