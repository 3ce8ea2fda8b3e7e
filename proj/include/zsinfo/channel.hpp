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

#ifndef ZSINFO_CHANNEL_HPP_
#define ZSINFO_CHANNEL_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "zsinfo/errors.hpp"
#include "zsinfo/prob_vector.hpp"
#include "zsinfo/scalar.hpp"

namespace zsinfo {

// Row-stochastic matrix from one labeled set to another. Serves both as a
// measurement channel Q(y|x) and as a garbling kernel applied to signals.
template <class S>
struct Channel {
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<std::vector<S>> rows;  // rows[i][j] = P(output j | input i)

  std::size_t num_inputs() const { return input_labels.size(); }
  std::size_t num_outputs() const { return output_labels.size(); }

  const S& at(std::size_t in, std::size_t out) const { return rows[in][out]; }

  void validate(const S& tol = ScalarTraits<S>::default_tolerance()) const {
    if (rows.size() != input_labels.size())
      throw DimensionError("channel row count does not match input labels");
    for (const auto& row : rows) {
      ProbVector<S> pv{output_labels, row};
      pv.validate(tol);
    }
  }
};

template <class S>
Channel<S> identity_channel(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<std::vector<S>> rows(n, std::vector<S>(n, S(0)));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = S(1);
  return {labels, std::move(labels), std::move(rows)};
}

// Every row equal to `law`: the output is independent of the input.
template <class S>
Channel<S> constant_channel(std::vector<std::string> input_labels,
                            const ProbVector<S>& law) {
  std::vector<std::vector<S>> rows(input_labels.size(), law.mass);
  return {std::move(input_labels), law.labels, std::move(rows)};
}

// Kernel composition (second ∘ first): the output of `first` feeds `second`.
template <class S>
Channel<S> compose(const Channel<S>& second, const Channel<S>& first) {
  if (second.input_labels != first.output_labels)
    throw DimensionError("kernel composition label mismatch");
  std::vector<std::vector<S>> rows(
      first.num_inputs(), std::vector<S>(second.num_outputs(), S(0)));
  for (std::size_t i = 0; i < first.num_inputs(); ++i)
    for (std::size_t k = 0; k < first.num_outputs(); ++k) {
      if (first.rows[i][k] == S(0)) continue;
      for (std::size_t j = 0; j < second.num_outputs(); ++j)
        rows[i][j] += first.rows[i][k] * second.rows[k][j];
    }
  return {first.input_labels, second.output_labels, std::move(rows)};
}

// Pushforward of a prior through a channel: the output-marginal law.
template <class S>
ProbVector<S> push_forward(const Channel<S>& q, const ProbVector<S>& prior) {
  if (q.input_labels != prior.labels)
    throw DimensionError("channel input labels do not match prior");
  std::vector<S> mass(q.num_outputs(), S(0));
  for (std::size_t i = 0; i < q.num_inputs(); ++i)
    for (std::size_t j = 0; j < q.num_outputs(); ++j)
      mass[j] += prior.mass[i] * q.rows[i][j];
  return {q.output_labels, std::move(mass)};
}

// Discretizes a conditional density f(y, x) on [y_lo, y_hi] into an
// n_cells-output channel. Each entry is the composite midpoint integral of
// the density over its cell (`subdivisions` midpoints per cell), after which
// each row is renormalized to sum to 1 exactly. Density inputs are a float
// mode concern, so this always produces a Channel<double>.
inline Channel<double> quantize_channel(
    const std::function<double(double, std::size_t)>& density,
    std::vector<std::string> x_labels, double y_lo, double y_hi,
    std::size_t n_cells, std::size_t subdivisions = 1) {
  if (n_cells < 1) throw ValidationError("quantize_channel: n_cells must be >= 1");
  if (subdivisions < 1) subdivisions = 1;
  if (!(y_hi > y_lo)) throw ValidationError("quantize_channel: empty interval");
  const std::size_t nx = x_labels.size();
  const double cell = (y_hi - y_lo) / static_cast<double>(n_cells);
  const double step = cell / static_cast<double>(subdivisions);

  std::vector<std::vector<double>> rows(nx, std::vector<double>(n_cells, 0.0));
  for (std::size_t ix = 0; ix < nx; ++ix) {
    double total = 0.0;
    for (std::size_t j = 0; j < n_cells; ++j) {
      double acc = 0.0;
      for (std::size_t s = 0; s < subdivisions; ++s) {
        const double y = y_lo + (static_cast<double>(j * subdivisions + s) + 0.5) * step;
        const double v = density(y, ix);
        if (v < 0.0)
          throw ValidationError("quantize_channel: density is negative");
        acc += v;
      }
      rows[ix][j] = acc * step;
      total += rows[ix][j];
    }
    if (!(total > 0.0))
      throw ValidationError("quantize_channel: row '" + x_labels[ix] +
                            "' integrates to zero (degenerate density)");
    for (double& v : rows[ix]) v /= total;
    // Pin the row sum to exactly 1.0: absorb the rounding residual into an
    // entry whose ulp can actually take it.
    auto row_sum = [&] {
      double s = 0.0;
      for (double v : rows[ix]) s += v;
      return s;
    };
    std::vector<std::size_t> order(n_cells);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows[ix][a] > rows[ix][b]; });
    for (int pass = 0; pass < 4 && row_sum() != 1.0; ++pass) {
      const double resid = 1.0 - row_sum();
      bool pinned = false;
      for (const std::size_t j : order) {
        const double saved = rows[ix][j];
        rows[ix][j] = saved + resid;
        if (row_sum() == 1.0) {
          pinned = true;
          break;
        }
        rows[ix][j] = saved;
      }
      if (!pinned) rows[ix][order.front()] += resid;
    }
  }
  return {std::move(x_labels), index_labels(n_cells, "y"), std::move(rows)};
}

}  // namespace zsinfo

#endif  // ZSINFO_CHANNEL_HPP_
