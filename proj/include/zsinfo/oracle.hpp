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

#ifndef ZSINFO_ORACLE_HPP_
#define ZSINFO_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "zsinfo/game.hpp"
#include "zsinfo/info_structure.hpp"
#include "zsinfo/lp.hpp"

namespace zsinfo {

// Brute-force route to the game value: enumerate every deterministic policy
// map Y^i -> U^i, build the pure-strategy payoff matrix, and solve it as a
// matrix game. Exponential in |Y|, intended only as a cross-check on small
// instances; independent of the behavioral-strategy LP used by value().
template <class S>
S normal_form_value(const Game<S>& game, const InfoStructure<S>& mu,
                    std::size_t max_profiles = 1u << 20) {
  if (game.x_labels != mu.x_labels)
    throw DimensionError("game and structure disagree on state labels");
  auto count_maps = [&](std::size_t ny, std::size_t nu) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < ny; ++i) {
      if (n > max_profiles / nu + 1) throw ValidationError("normal-form oracle: too many policies");
      n *= nu;
    }
    return n;
  };
  const std::size_t n1 = count_maps(mu.ny1(), game.nu1());
  const std::size_t n2 = count_maps(mu.ny2(), game.nu2());
  if (n1 * n2 > max_profiles)
    throw ValidationError("normal-form oracle: too many policy profiles");

  auto decode = [](std::size_t code, std::size_t ny, std::size_t nu) {
    std::vector<std::size_t> pol(ny);
    for (std::size_t y = 0; y < ny; ++y) {
      pol[y] = code % nu;
      code /= nu;
    }
    return pol;
  };

  std::vector<std::vector<S>> m(n1, std::vector<S>(n2, S(0)));
  for (std::size_t p = 0; p < n1; ++p) {
    const auto pol1 = decode(p, mu.ny1(), game.nu1());
    for (std::size_t q = 0; q < n2; ++q) {
      const auto pol2 = decode(q, mu.ny2(), game.nu2());
      S payoff(0);
      for (std::size_t ix = 0; ix < mu.nx(); ++ix)
        for (std::size_t y1 = 0; y1 < mu.ny1(); ++y1)
          for (std::size_t y2 = 0; y2 < mu.ny2(); ++y2) {
            const S& w = mu.at(ix, y1, y2);
            if (w == S(0)) continue;
            payoff += w * game.at(ix, pol1[y1], pol2[y2]);
          }
      m[p][q] = payoff;
    }
  }

  // Matrix game, row player minimizing: min v s.t. sigma'M_col <= v.
  LinearProgram<S> lp;
  lp.objective.assign(n1 + 1, S(0));
  lp.objective[n1] = S(1);
  lp.free_vars.assign(n1 + 1, 0);
  lp.free_vars[n1] = 1;
  {
    std::vector<S> row(n1 + 1, S(0));
    for (std::size_t p = 0; p < n1; ++p) row[p] = S(1);
    lp.add_eq(std::move(row), S(1));
  }
  for (std::size_t q = 0; q < n2; ++q) {
    std::vector<S> row(n1 + 1, S(0));
    for (std::size_t p = 0; p < n1; ++p) row[p] = m[p][q];
    row[n1] = S(-1);
    lp.add_le(std::move(row), S(0));
  }
  auto cert = solve(lp);
  if (cert.status != LpStatus::optimal)
    throw ArithmeticError("normal-form matrix game LP failed");
  return cert.objective_value;
}

}  // namespace zsinfo

#endif  // ZSINFO_ORACLE_HPP_
