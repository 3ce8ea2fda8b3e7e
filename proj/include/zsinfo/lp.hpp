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

#ifndef ZSINFO_LP_HPP_
#define ZSINFO_LP_HPP_

#include <cstddef>
#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "zsinfo/errors.hpp"
#include "zsinfo/scalar.hpp"

namespace zsinfo {

// Dense LP:
//
//   min/max  objective' x
//   s.t.     eq_lhs  x  = eq_rhs
//            le_lhs  x <= le_rhs
//            x_j >= 0 unless free_vars[j]
//
// Solved by two-phase primal simplex on the equilibrated standard-form
// tableau. Rational mode pivots by Bland's anti-cycling rule (guaranteed
// termination, exact certificates); float mode uses a stabilized variant
// (see iterate()) and re-verifies every certificate before returning it.
// Both pivoting rules are fixed, so results are deterministic for fixed
// input.
//
// Certificate conventions (for the minimize sense; everything is negated
// when sense == maximize so the same inequalities hold with >=):
//   optimal:    dual_le <= 0,
//               (dual_eq' eq_lhs + dual_le' le_lhs)_j <= objective_j for
//               nonnegative variables and == for free ones,
//               dual_eq' eq_rhs + dual_le' le_rhs == objective_value.
//   infeasible: farkas_le >= 0,
//               (farkas_eq' eq_lhs + farkas_le' le_lhs)_j >= 0 for
//               nonnegative variables and == 0 for free ones,
//               farkas_eq' eq_rhs + farkas_le' le_rhs < 0.
// The Farkas inequalities are sign conditions on the standard-form
// aggregation y'A >= 0, y'b < 0 mapped back to the input rows.

enum class LpSense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

template <class S>
struct LinearProgram {
  LpSense sense = LpSense::minimize;
  std::vector<S> objective;
  std::vector<std::vector<S>> eq_lhs;
  std::vector<S> eq_rhs;
  std::vector<std::vector<S>> le_lhs;
  std::vector<S> le_rhs;
  std::vector<std::uint8_t> free_vars;  // empty means all nonnegative

  std::size_t num_vars() const { return objective.size(); }
  bool is_free(std::size_t j) const {
    return j < free_vars.size() && free_vars[j] != 0;
  }

  void add_eq(std::vector<S> coeffs, S rhs) {
    eq_lhs.push_back(std::move(coeffs));
    eq_rhs.push_back(std::move(rhs));
  }
  void add_le(std::vector<S> coeffs, S rhs) {
    le_lhs.push_back(std::move(coeffs));
    le_rhs.push_back(std::move(rhs));
  }

  void validate() const {
    if (eq_lhs.size() != eq_rhs.size() || le_lhs.size() != le_rhs.size())
      throw DimensionError("constraint lhs/rhs count mismatch");
    for (const auto& row : eq_lhs)
      if (row.size() != num_vars()) throw DimensionError("eq row width mismatch");
    for (const auto& row : le_lhs)
      if (row.size() != num_vars()) throw DimensionError("le row width mismatch");
    if (!free_vars.empty() && free_vars.size() != num_vars())
      throw DimensionError("free_vars size mismatch");
  }
};

template <class S>
struct LpCertificate {
  LpStatus status = LpStatus::optimal;
  S objective_value{};
  std::vector<S> primal;
  std::vector<S> dual_eq;
  std::vector<S> dual_le;
  std::vector<S> farkas_eq;
  std::vector<S> farkas_le;
  std::size_t pivots = 0;
};

struct LpOptions {
  std::size_t max_pivots = 0;  // 0 = automatic cap
  int verbosity = 0;           // 1: phase summaries, 2: tableau dumps
};

template <class S>
std::string verify_certificate(const LinearProgram<S>& lp,
                               const LpCertificate<S>& cert,
                               const S& tol = ScalarTraits<S>::default_tolerance());

namespace lp_detail {

template <class S>
class Simplex {
 public:
  Simplex(const LinearProgram<S>& lp, const LpOptions& opts)
      : lp_(lp), opts_(opts), tol_(feasibility_tolerance()) {
    lp.validate();
  }

  LpCertificate<S> run() {
    if (presolve_zero_rows()) return cert_;  // trivially infeasible
    build_standard_form();
    if (phase_one()) phase_two();
    float_guard();
    return cert_;
  }

 private:
  static S feasibility_tolerance() {
    if constexpr (ScalarTraits<S>::exact) return S(0);
    return S(1e-9);
  }

  // Rows that are identically zero either force infeasibility or can be
  // dropped (their multipliers are reported as 0).
  bool presolve_zero_rows() {
    const std::size_t n = lp_.num_vars();
    auto is_zero_row = [&](const std::vector<S>& row) {
      for (const S& v : row)
        if (!(v == S(0))) return false;
      return true;
    };
    cert_.farkas_eq.assign(lp_.eq_lhs.size(), S(0));
    cert_.farkas_le.assign(lp_.le_lhs.size(), S(0));
    for (std::size_t i = 0; i < lp_.eq_lhs.size(); ++i) {
      if (!is_zero_row(lp_.eq_lhs[i])) {
        keep_eq_.push_back(i);
      } else if (!near_zero(lp_.eq_rhs[i], tol_)) {
        cert_.status = LpStatus::infeasible;
        cert_.farkas_eq[i] = lp_.eq_rhs[i] > S(0) ? S(-1) : S(1);
        finalize_farkas_sense();
        return true;
      }
    }
    for (std::size_t i = 0; i < lp_.le_lhs.size(); ++i) {
      if (!is_zero_row(lp_.le_lhs[i])) {
        keep_le_.push_back(i);
      } else if (lp_.le_rhs[i] < S(0) && !near_zero(lp_.le_rhs[i], tol_)) {
        cert_.status = LpStatus::infeasible;
        cert_.farkas_le[i] = S(1);
        finalize_farkas_sense();
        return true;
      }
    }
    (void)n;
    cert_.farkas_eq.clear();
    cert_.farkas_le.clear();
    return false;
  }

  // Columns: x+ for every variable, x- for free variables, one slack per
  // kept <= row, artificials appended last. Rows are equilibrated to unit
  // max-abs coefficient (scaling is exact in rational mode and keeps the
  // absolute tolerances meaningful in float mode), then sign-flipped so
  // every right-hand side is nonnegative; the initial basis is the identity
  // formed by clean slacks and artificials.
  void build_standard_form() {
    const std::size_t n = lp_.num_vars();
    pos_col_.assign(n, -1);
    neg_col_.assign(n, -1);
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      pos_col_[j] = static_cast<int>(c++);
      if (lp_.is_free(j)) neg_col_[j] = static_cast<int>(c++);
    }
    const std::size_t m = keep_eq_.size() + keep_le_.size();
    slack_col_.assign(keep_le_.size(), -1);
    for (std::size_t i = 0; i < keep_le_.size(); ++i)
      slack_col_[i] = static_cast<int>(c++);
    first_artificial_ = c;

    rows_.assign(m, {});
    row_sign_.assign(m, S(1));
    row_scale_.assign(m, S(1));
    basis_.assign(m, -1);
    id0_.assign(m, -1);

    // Sign objective for the internal minimize convention.
    obj_.assign(c, S(0));
    for (std::size_t j = 0; j < n; ++j) {
      const S cj = lp_.sense == LpSense::minimize ? lp_.objective[j]
                                                  : S(-lp_.objective[j]);
      obj_[pos_col_[j]] = cj;
      if (neg_col_[j] >= 0) obj_[neg_col_[j]] = S(-cj);
    }

    std::vector<S> rhs(m, S(0));
    for (std::size_t i = 0; i < m; ++i) {
      const bool is_eq = i < keep_eq_.size();
      const auto& src =
          is_eq ? lp_.eq_lhs[keep_eq_[i]] : lp_.le_lhs[keep_le_[i - keep_eq_.size()]];
      const S& b = is_eq ? lp_.eq_rhs[keep_eq_[i]]
                         : lp_.le_rhs[keep_le_[i - keep_eq_.size()]];
      S scale(0);
      for (std::size_t j = 0; j < n; ++j)
        if (abs_value(src[j]) > scale) scale = abs_value(src[j]);
      if (scale == S(0)) scale = S(1);  // cannot happen for kept rows
      row_scale_[i] = scale;
      rows_[i].assign(c, S(0));
      for (std::size_t j = 0; j < n; ++j) {
        rows_[i][pos_col_[j]] = src[j] / scale;
        if (neg_col_[j] >= 0) rows_[i][neg_col_[j]] = S(-src[j] / scale);
      }
      if (!is_eq) rows_[i][slack_col_[i - keep_eq_.size()]] = S(1);
      rhs[i] = b / scale;
      if (rhs[i] < S(0)) {
        row_sign_[i] = S(-1);
        for (S& v : rows_[i]) v = -v;
        rhs[i] = -rhs[i];
      }
    }

    // Initial basis: a slack that survived unflipped, otherwise an artificial.
    std::size_t num_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const bool clean_slack =
          i >= keep_eq_.size() && row_sign_[i] == S(1);
      if (clean_slack) {
        basis_[i] = slack_col_[i - keep_eq_.size()];
        id0_[i] = basis_[i];
      } else {
        ++num_art;
      }
    }
    obj_.resize(c + num_art, S(0));
    for (std::size_t i = 0; i < m; ++i) rows_[i].resize(c + num_art, S(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] >= 0) continue;
      rows_[i][c] = S(1);
      basis_[i] = static_cast<int>(c);
      id0_[i] = static_cast<int>(c);
      ++c;
    }
    num_cols_ = c;
    rhs_ = std::move(rhs);
    barred_.assign(num_cols_, 0);
  }

  std::size_t pivot_cap() const {
    if (opts_.max_pivots) return opts_.max_pivots;
    return 10000 + 200 * (rows_.size() + num_cols_);
  }

  void pivot(std::size_t r, std::size_t s) {
    const S piv = rows_[r][s];
    for (S& v : rows_[r]) v = v / piv;
    rhs_[r] = rhs_[r] / piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      const S factor = rows_[i][s];
      if (factor == S(0)) continue;
      for (std::size_t j = 0; j < num_cols_; ++j)
        rows_[i][j] -= factor * rows_[r][j];
      rhs_[i] -= factor * rhs_[r];
    }
    basis_[r] = static_cast<int>(s);
    ++pivots_;
  }

  // One simplex phase under costs `cost`. Returns false on unboundedness.
  //
  // Exact mode follows Bland's rule verbatim (first negative reduced cost,
  // lowest-index ties), which guarantees termination. Float mode keeps the
  // same deterministic skeleton but picks the most negative reduced cost
  // and, among near-tied minimum ratios, the largest pivot element; pure
  // Bland on a dense float tableau happily pivots on tiny elements and
  // inflates the tableau past recovery.
  bool iterate(const std::vector<S>& cost) {
    const std::size_t cap = pivot_cap();
    for (;;) {
      if (pivots_ > cap)
        throw ArithmeticError(
            "simplex pivot limit exceeded (numerical stall); "
            "retry in rational mode");
      std::ptrdiff_t enter = -1;
      S enter_rc(0);
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (barred_[j]) continue;
        S rj = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          const S& cb = cost[basis_[i]];
          if (cb == S(0)) continue;
          rj -= cb * rows_[i][j];
        }
        if (rj < -tol_) {
          if constexpr (ScalarTraits<S>::exact) {
            enter = static_cast<std::ptrdiff_t>(j);
            break;  // Bland: first eligible column
          } else if (enter < 0 || rj < enter_rc) {
            enter = static_cast<std::ptrdiff_t>(j);
            enter_rc = rj;
          }
        }
      }
      if (enter < 0) return true;

      std::ptrdiff_t leave = -1;
      if constexpr (ScalarTraits<S>::exact) {
        S best_ratio(0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          const S& a = rows_[i][enter];
          if (!(a > S(0))) continue;
          const S ratio = rhs_[i] / a;
          if (leave < 0 || ratio < best_ratio ||
              (ratio == best_ratio && basis_[i] < basis_[leave])) {
            leave = static_cast<std::ptrdiff_t>(i);
            best_ratio = ratio;
          }
        }
      } else {
        // Two-pass ratio test: find the minimum ratio, then take the
        // largest pivot among rows within tol of it.
        S best_ratio(0);
        bool found = false;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          const S& a = rows_[i][enter];
          if (!(a > tol_)) continue;
          const S ratio = rhs_[i] / a;
          if (!found || ratio < best_ratio) {
            best_ratio = ratio;
            found = true;
          }
        }
        if (found) {
          S best_pivot(0);
          for (std::size_t i = 0; i < rows_.size(); ++i) {
            const S& a = rows_[i][enter];
            if (!(a > tol_)) continue;
            if (rhs_[i] / a > best_ratio + tol_) continue;
            if (leave < 0 || a > best_pivot ||
                (a == best_pivot && basis_[i] < basis_[leave])) {
              leave = static_cast<std::ptrdiff_t>(i);
              best_pivot = a;
            }
          }
        }
      }
      if (leave < 0) return false;  // unbounded direction

      const int leaving_var = basis_[leave];
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
      // Artificials never come back.
      if (static_cast<std::size_t>(leaving_var) >= first_artificial_)
        barred_[leaving_var] = 1;
      if (opts_.verbosity > 1) dump_tableau();
    }
  }

  // Multipliers of the current basis against costs `cost`, mapped back to
  // the input rows: undo the sign flip and the equilibration scale (a
  // multiplier m on row a/s equals m/s on row a). Dropped rows get 0.
  void extract_multipliers(const std::vector<S>& cost, std::vector<S>* out_eq,
                           std::vector<S>* out_le) const {
    out_eq->assign(lp_.eq_lhs.size(), S(0));
    out_le->assign(lp_.le_lhs.size(), S(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      S pi(0);
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        const S& cb = cost[basis_[k]];
        if (cb == S(0)) continue;
        pi += cb * rows_[k][id0_[i]];
      }
      pi = row_sign_[i] * pi / row_scale_[i];
      if (i < keep_eq_.size())
        (*out_eq)[keep_eq_[i]] = pi;
      else
        (*out_le)[keep_le_[i - keep_eq_.size()]] = pi;
    }
  }

  bool phase_one() {
    if (first_artificial_ == num_cols_) return true;  // slack basis suffices
    std::vector<S> cost(num_cols_, S(0));
    for (std::size_t j = first_artificial_; j < num_cols_; ++j) cost[j] = S(1);
    if (!iterate(cost))
      throw ArithmeticError("phase-1 objective unbounded (numerical failure); "
                            "retry in rational mode");
    S infeas(0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (static_cast<std::size_t>(basis_[i]) >= first_artificial_)
        infeas += rhs_[i];
    if (opts_.verbosity > 0)
      std::cerr << "[lp] phase 1 done, pivots=" << pivots_
                << " residual=" << to_double(infeas) << "\n";
    if (infeas > tol_) {
      cert_.status = LpStatus::infeasible;
      std::vector<S> pi_eq, pi_le;
      extract_multipliers(cost, &pi_eq, &pi_le);
      // y = -pi satisfies y'A >= 0, y'b < 0 in the standard-form aggregation.
      cert_.farkas_eq.assign(pi_eq.size(), S(0));
      cert_.farkas_le.assign(pi_le.size(), S(0));
      for (std::size_t i = 0; i < pi_eq.size(); ++i) cert_.farkas_eq[i] = -pi_eq[i];
      for (std::size_t i = 0; i < pi_le.size(); ++i) cert_.farkas_le[i] = -pi_le[i];
      finalize_farkas_sense();
      return false;
    }
    // Drive remaining artificials out of the basis, pivoting on the
    // largest-magnitude structural entry (the row's rhs is zero, so any
    // sign is admissible); rows with no structural entry are redundant and
    // stay inert.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<std::size_t>(basis_[i]) < first_artificial_) continue;
      std::ptrdiff_t best = -1;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (barred_[j] || near_zero(rows_[i][j], tol_)) continue;
        if (best < 0 || abs_value(rows_[i][j]) > abs_value(rows_[i][best]))
          best = static_cast<std::ptrdiff_t>(j);
      }
      if (best >= 0) {
        const int leaving = basis_[i];
        pivot(i, static_cast<std::size_t>(best));
        barred_[leaving] = 1;
      }
    }
    for (std::size_t j = first_artificial_; j < num_cols_; ++j) barred_[j] = 1;
    return true;
  }

  void phase_two() {
    // Artificials stay barred from entering; any still basic sit in rows
    // that phase one reduced to zero and never move again.
    std::vector<S> cost = obj_;
    cost.resize(num_cols_, S(0));
    const bool bounded = iterate(cost);
    if (!bounded) {
      cert_.status = LpStatus::unbounded;
      cert_.pivots = pivots_;
      return;
    }

    cert_.status = LpStatus::optimal;
    cert_.pivots = pivots_;
    cert_.primal.assign(lp_.num_vars(), S(0));
    std::vector<S> col_value(num_cols_, S(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      col_value[basis_[i]] = rhs_[i];
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      cert_.primal[j] = col_value[pos_col_[j]];
      if (neg_col_[j] >= 0) cert_.primal[j] -= col_value[neg_col_[j]];
    }
    S value(0);
    for (std::size_t j = 0; j < lp_.num_vars(); ++j)
      value += lp_.objective[j] * cert_.primal[j];
    cert_.objective_value = value;

    extract_multipliers(cost, &cert_.dual_eq, &cert_.dual_le);
    if (lp_.sense == LpSense::maximize) {
      for (S& v : cert_.dual_eq) v = -v;
      for (S& v : cert_.dual_le) v = -v;
    }

    // Internal consistency: strong duality against the extracted
    // multipliers. A violation here is a numerical failure, not a result.
    S dual_value(0);
    for (std::size_t i = 0; i < lp_.eq_rhs.size(); ++i)
      dual_value += cert_.dual_eq[i] * lp_.eq_rhs[i];
    for (std::size_t i = 0; i < lp_.le_rhs.size(); ++i)
      dual_value += cert_.dual_le[i] * lp_.le_rhs[i];
    if constexpr (ScalarTraits<S>::exact) {
      if (!(dual_value == value))
        throw ArithmeticError("internal error: rational duality gap");
    } else {
      const double scale =
          1.0 + std::max(std::abs(to_double(value)), std::abs(to_double(dual_value)));
      if (std::abs(to_double(dual_value) - to_double(value)) > 1e-7 * scale)
        throw ArithmeticError(
            "simplex lost primal/dual consistency (numerical stall); "
            "retry in rational mode");
    }
    if (opts_.verbosity > 0)
      std::cerr << "[lp] optimal, pivots=" << pivots_
                << " value=" << to_double(value) << "\n";
  }

  // Float mode re-checks the certificate it is about to return at a
  // magnitude-scaled tolerance, so a numerically degraded run raises an
  // error instead of reporting a wrong status.
  void float_guard() const {
    if constexpr (ScalarTraits<S>::exact) return;
    S mag(1);
    auto track = [&mag](const std::vector<S>& v) {
      for (const S& x : v)
        if (abs_value(x) > mag) mag = abs_value(x);
    };
    track(cert_.primal);
    track(cert_.dual_eq);
    track(cert_.dual_le);
    track(cert_.farkas_eq);
    track(cert_.farkas_le);
    const std::string err = verify_certificate(lp_, cert_, S(1e-6 * to_double(mag)));
    if (!err.empty())
      throw ArithmeticError("certificate failed re-verification (" + err +
                            "); retry in rational mode");
  }

  // The aggregation must certify with a strictly negative value; in float
  // mode tiny positives are rejected as numerical failures.
  void finalize_farkas_sense() {
    S agg(0);
    for (std::size_t i = 0; i < lp_.eq_rhs.size(); ++i)
      agg += cert_.farkas_eq[i] * lp_.eq_rhs[i];
    for (std::size_t i = 0; i < lp_.le_rhs.size(); ++i)
      agg += cert_.farkas_le[i] * lp_.le_rhs[i];
    if (!(agg < S(0)))
      throw ArithmeticError(
          "infeasibility certificate failed to verify (numerical stall); "
          "retry in rational mode");
    cert_.pivots = pivots_;
  }

  void dump_tableau() const {
    std::cerr << "[lp] tableau (" << rows_.size() << " x " << num_cols_ << ")\n";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::cerr << "  b" << basis_[i] << " |";
      for (std::size_t j = 0; j < num_cols_; ++j)
        std::cerr << ' ' << to_double(rows_[i][j]);
      std::cerr << " | " << to_double(rhs_[i]) << "\n";
    }
  }

  const LinearProgram<S>& lp_;
  LpOptions opts_;
  S tol_;
  LpCertificate<S> cert_;

  std::vector<std::size_t> keep_eq_, keep_le_;
  std::vector<int> pos_col_, neg_col_, slack_col_;
  std::vector<std::vector<S>> rows_;
  std::vector<S> rhs_;
  std::vector<S> row_sign_;
  std::vector<S> row_scale_;
  std::vector<S> obj_;
  std::vector<int> basis_, id0_;
  std::vector<std::uint8_t> barred_;
  std::size_t first_artificial_ = 0;
  std::size_t num_cols_ = 0;
  std::size_t pivots_ = 0;
};

}  // namespace lp_detail

template <class S>
LpCertificate<S> solve(const LinearProgram<S>& lp, const LpOptions& opts = {}) {
  lp_detail::Simplex<S> engine(lp, opts);
  return engine.run();
}

// Mechanical re-check of a certificate against the program it came from.
// Returns an empty string when everything holds within tol.
template <class S>
std::string verify_certificate(const LinearProgram<S>& lp,
                               const LpCertificate<S>& cert, const S& tol) {
  const std::size_t n = lp.num_vars();
  auto combine = [&](const std::vector<S>& w_eq, const std::vector<S>& w_le,
                     std::size_t j) {
    S acc(0);
    for (std::size_t i = 0; i < lp.eq_lhs.size(); ++i)
      acc += w_eq[i] * lp.eq_lhs[i][j];
    for (std::size_t i = 0; i < lp.le_lhs.size(); ++i)
      acc += w_le[i] * lp.le_lhs[i][j];
    return acc;
  };
  auto rhs_combine = [&](const std::vector<S>& w_eq, const std::vector<S>& w_le) {
    S acc(0);
    for (std::size_t i = 0; i < lp.eq_rhs.size(); ++i) acc += w_eq[i] * lp.eq_rhs[i];
    for (std::size_t i = 0; i < lp.le_rhs.size(); ++i) acc += w_le[i] * lp.le_rhs[i];
    return acc;
  };

  if (cert.status == LpStatus::optimal) {
    if (cert.primal.size() != n) return "primal size mismatch";
    for (std::size_t j = 0; j < n; ++j)
      if (!lp.is_free(j) && cert.primal[j] < -tol) return "primal bound violated";
    for (std::size_t i = 0; i < lp.eq_lhs.size(); ++i) {
      S lhs(0);
      for (std::size_t j = 0; j < n; ++j) lhs += lp.eq_lhs[i][j] * cert.primal[j];
      if (!near(lhs, lp.eq_rhs[i], tol)) return "primal eq violated";
    }
    for (std::size_t i = 0; i < lp.le_lhs.size(); ++i) {
      S lhs(0);
      for (std::size_t j = 0; j < n; ++j) lhs += lp.le_lhs[i][j] * cert.primal[j];
      if (lhs > lp.le_rhs[i] + tol) return "primal le violated";
    }
    const S sense_sign = lp.sense == LpSense::minimize ? S(1) : S(-1);
    for (std::size_t i = 0; i < lp.le_lhs.size(); ++i)
      if (sense_sign * cert.dual_le[i] > tol) return "dual sign violated";
    for (std::size_t j = 0; j < n; ++j) {
      const S w = combine(cert.dual_eq, cert.dual_le, j);
      if (lp.is_free(j)) {
        if (!near(w, lp.objective[j], tol)) return "dual eq (free var) violated";
      } else if (sense_sign * (w - lp.objective[j]) > tol) {
        return "dual feasibility violated";
      }
    }
    if (!near(rhs_combine(cert.dual_eq, cert.dual_le), cert.objective_value, tol))
      return "duality gap";
    S primal_obj(0);
    for (std::size_t j = 0; j < n; ++j)
      primal_obj += lp.objective[j] * cert.primal[j];
    if (!near(primal_obj, cert.objective_value, tol))
      return "objective value mismatch";
    return {};
  }

  if (cert.status == LpStatus::infeasible) {
    for (std::size_t i = 0; i < lp.le_lhs.size(); ++i)
      if (cert.farkas_le[i] < -tol) return "farkas slack sign violated";
    for (std::size_t j = 0; j < n; ++j) {
      const S w = combine(cert.farkas_eq, cert.farkas_le, j);
      if (lp.is_free(j)) {
        if (!near_zero(w, tol)) return "farkas free-var component nonzero";
      } else if (w < -tol) {
        return "farkas aggregation sign violated";
      }
    }
    if (!(rhs_combine(cert.farkas_eq, cert.farkas_le) < S(0)))
      return "farkas rhs not negative";
    return {};
  }
  return {};  // unbounded carries no certificate to check
}

}  // namespace zsinfo

#endif  // ZSINFO_LP_HPP_
