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

#ifndef ZSINFO_INSTANCE_GEN_HPP_
#define ZSINFO_INSTANCE_GEN_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zsinfo/channel.hpp"
#include "zsinfo/game.hpp"
#include "zsinfo/info_structure.hpp"
#include "zsinfo/prob_vector.hpp"
#include "zsinfo/scalar.hpp"

namespace zsinfo {

// Deterministic instance sampling. Draws are integer-based so the same seed
// yields the same instance in rational and float mode (up to representation).
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  // Independent per-trial stream derived from a base seed.
  static InstanceRng stream(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 over (seed, trial) to decorrelate nearby trials
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return InstanceRng(z ^ (z >> 31));
  }

  std::uint64_t bits() { return engine_(); }

  // Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(bits() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// Positive integer weights normalized to a distribution.
template <class S>
ProbVector<S> random_prob(InstanceRng& rng, std::vector<std::string> labels,
                          bool allow_zero_mass = false) {
  const std::size_t n = labels.size();
  std::vector<long long> w(n);
  long long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = allow_zero_mass ? rng.range(0, 9) : rng.range(1, 9);
    total += w[i];
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  std::vector<S> mass(n);
  for (std::size_t i = 0; i < n; ++i) mass[i] = make_scalar<S>(w[i], total);
  return {std::move(labels), std::move(mass)};
}

template <class S>
Channel<S> random_channel(InstanceRng& rng, std::vector<std::string> in_labels,
                          std::vector<std::string> out_labels) {
  Channel<S> q;
  q.output_labels = std::move(out_labels);
  q.input_labels = std::move(in_labels);
  for (std::size_t i = 0; i < q.input_labels.size(); ++i)
    q.rows.push_back(random_prob<S>(rng, q.output_labels, true).mass);
  return q;
}

template <class S>
InfoStructure<S> random_cond_independent(InstanceRng& rng, std::size_t nx,
                                         std::size_t ny1, std::size_t ny2) {
  auto zeta = random_prob<S>(rng, index_labels(nx, "x"));
  auto q1 = random_channel<S>(rng, zeta.labels, index_labels(ny1, "a"));
  auto q2 = random_channel<S>(rng, zeta.labels, index_labels(ny2, "b"));
  return make_cond_independent(zeta, q1, q2);
}

// Arbitrary joint tensor (generally conditionally dependent).
template <class S>
InfoStructure<S> random_joint_structure(InstanceRng& rng, std::size_t nx,
                                        std::size_t ny1, std::size_t ny2) {
  std::vector<long long> w(nx * ny1 * ny2);
  long long total = 0;
  for (auto& v : w) {
    v = rng.range(0, 9);
    total += v;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  std::vector<S> joint(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    joint[i] = make_scalar<S>(w[i], total);
  return structure_from_joint(index_labels(nx, "x"), index_labels(ny1, "a"),
                              index_labels(ny2, "b"), std::move(joint));
}

// Costs are grid points k/1000 in [-1, 1]: exact in both scalar modes.
template <class S>
Game<S> random_game(InstanceRng& rng, std::vector<std::string> x_labels,
                    std::size_t nu1, std::size_t nu2) {
  Game<S> g;
  g.x_labels = std::move(x_labels);
  g.u1_labels = index_labels(nu1, "u");
  g.u2_labels = index_labels(nu2, "v");
  g.cost.resize(g.nx() * nu1 * nu2);
  for (auto& c : g.cost) c = make_scalar<S>(rng.range(-1000, 1000), 1000);
  return g;
}

template <class S>
PairMeasure<S> random_pair(InstanceRng& rng, std::size_t nx, std::size_t ny) {
  auto zeta = random_prob<S>(rng, index_labels(nx, "x"));
  auto q = random_channel<S>(rng, zeta.labels, index_labels(ny, "y"));
  return pair_from_channel(zeta, q);
}

}  // namespace zsinfo

#endif  // ZSINFO_INSTANCE_GEN_HPP_
