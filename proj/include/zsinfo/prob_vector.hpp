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

#ifndef ZSINFO_PROB_VECTOR_HPP_
#define ZSINFO_PROB_VECTOR_HPP_

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "zsinfo/errors.hpp"
#include "zsinfo/scalar.hpp"

namespace zsinfo {

// Probability distribution over a finite, ordered, labeled outcome set.
// Holds priors and Bayes posteriors alike.
template <class S>
struct ProbVector {
  std::vector<std::string> labels;
  std::vector<S> mass;

  std::size_t size() const { return labels.size(); }

  const S& operator[](std::size_t i) const { return mass[i]; }

  // Invariants: unique labels, nonnegative mass, total mass 1 within tol.
  void validate(const S& tol = ScalarTraits<S>::default_tolerance()) const {
    if (labels.size() != mass.size())
      throw DimensionError("label/mass size mismatch");
    if (labels.empty()) throw ValidationError("empty probability vector");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw ValidationError("duplicate outcome label '" + l + "'");
    S total(0);
    for (const S& m : mass) {
      if (m < S(0) && !near_zero(m, tol))
        throw ValidationError("negative probability mass");
      total += m;
    }
    if (!near(total, S(1), tol))
      throw ValidationError("probability mass does not sum to 1");
  }
};

template <class S>
ProbVector<S> uniform_prob(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  if (n == 0) throw ValidationError("uniform distribution over empty set");
  return {std::move(labels), std::vector<S>(n, S(1) / S(static_cast<long>(n)))};
}

template <class S>
ProbVector<S> point_mass(std::vector<std::string> labels, std::size_t at) {
  if (at >= labels.size()) throw DimensionError("point mass index out of range");
  std::vector<S> mass(labels.size(), S(0));
  mass[at] = S(1);
  return {std::move(labels), std::move(mass)};
}

// Canonical numeric labels "0","1",... used where the caller has none.
inline std::vector<std::string> index_labels(std::size_t n,
                                             const std::string& prefix = "") {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace zsinfo

#endif  // ZSINFO_PROB_VECTOR_HPP_
