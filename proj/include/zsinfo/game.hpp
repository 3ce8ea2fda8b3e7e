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

#ifndef ZSINFO_GAME_HPP_
#define ZSINFO_GAME_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zsinfo/errors.hpp"
#include "zsinfo/scalar.hpp"

namespace zsinfo {

// Bounded cost tensor c(x, u1, u2). Player 1 minimizes, player 2 maximizes.
// Single-agent decision problems are the |U2| = 1 case.
template <class S>
struct Game {
  std::vector<std::string> x_labels;
  std::vector<std::string> u1_labels;
  std::vector<std::string> u2_labels;
  std::vector<S> cost;  // x-major, then u1, then u2

  std::size_t nx() const { return x_labels.size(); }
  std::size_t nu1() const { return u1_labels.size(); }
  std::size_t nu2() const { return u2_labels.size(); }

  const S& at(std::size_t ix, std::size_t iu1, std::size_t iu2) const {
    return cost[(ix * nu1() + iu1) * nu2() + iu2];
  }
  S& at(std::size_t ix, std::size_t iu1, std::size_t iu2) {
    return cost[(ix * nu1() + iu1) * nu2() + iu2];
  }

  bool single_agent() const { return nu2() == 1; }

  void validate() const {
    if (nx() == 0 || nu1() == 0 || nu2() == 0)
      throw ValidationError("game with an empty label set");
    if (cost.size() != nx() * nu1() * nu2())
      throw DimensionError("cost tensor size mismatch");
    for (const S& c : cost)
      if (!is_finite(c)) throw ValidationError("non-finite cost entry");
  }

 private:
  static bool is_finite(double v) { return std::isfinite(v); }
  static bool is_finite(const Rational&) { return true; }
};

// Single-agent cost table c(x, u) wrapped as the degenerate |U2| = 1 game.
template <class S>
Game<S> single_agent_game(std::vector<std::string> x_labels,
                          std::vector<std::string> u_labels,
                          std::vector<S> cost) {
  Game<S> g;
  g.x_labels = std::move(x_labels);
  g.u1_labels = std::move(u_labels);
  g.u2_labels = {"0"};
  g.cost = std::move(cost);
  g.validate();
  return g;
}

}  // namespace zsinfo

#endif  // ZSINFO_GAME_HPP_
