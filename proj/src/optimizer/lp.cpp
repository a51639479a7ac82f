// Copyright 2026 The qct authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qct/optimizer/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qct/simd/kernels.hpp"

namespace qct::optimizer {

void LinearProgram::validate() const {
  if (eq_matrix.size() != eq_rhs.size())
    throw std::invalid_argument("LinearProgram: row count does not match rhs length");
  for (const auto& row : eq_matrix)
    if (row.size() != cost.size())
      throw std::invalid_argument("LinearProgram: row width does not match cost length");
  auto finite = [](double v) { return std::isfinite(v); };
  for (double v : cost)
    if (!finite(v)) throw std::invalid_argument("LinearProgram: non-finite cost");
  for (double v : eq_rhs)
    if (!finite(v)) throw std::invalid_argument("LinearProgram: non-finite rhs");
  for (const auto& row : eq_matrix)
    for (double v : row)
      if (!finite(v)) throw std::invalid_argument("LinearProgram: non-finite coefficient");
}

std::size_t LpBuilder::add_variable() { return num_vars_++; }

std::size_t LpBuilder::add_variable_upper_bounded(double upper) {
  if (!(upper >= 0.0) || !std::isfinite(upper))
    throw std::invalid_argument("LpBuilder: upper bound must be finite and nonnegative");
  const std::size_t v = num_vars_++;
  upper_bounds_.emplace_back(v, upper);
  return v;
}

void LpBuilder::add_abs_objective_term(std::vector<Term> expr, double constant) {
  for (const auto& t : expr)
    if (t.var >= num_vars_) throw std::invalid_argument("LpBuilder: unknown variable in term");
  abs_terms_.push_back({std::move(expr), constant});
}

void LpBuilder::add_equality(std::vector<Term> expr, double rhs) {
  for (const auto& t : expr)
    if (t.var >= num_vars_) throw std::invalid_argument("LpBuilder: unknown variable in term");
  equalities_.push_back({std::move(expr), rhs});
}

LinearProgram LpBuilder::build() const {
  // Column layout: declared vars | one slack per abs term | two surpluses per
  // abs term | one slack per upper bound.
  const std::size_t n_abs = abs_terms_.size();
  const std::size_t n_cols = num_vars_ + 3 * n_abs + upper_bounds_.size();
  const std::size_t slack0 = num_vars_;
  const std::size_t surplus0 = num_vars_ + n_abs;
  const std::size_t ub0 = num_vars_ + 3 * n_abs;

  LinearProgram lp;
  lp.cost.assign(n_cols, 0.0);
  for (std::size_t t = 0; t < n_abs; ++t) lp.cost[slack0 + t] = 1.0;

  auto blank_row = [&]() { return std::vector<double>(n_cols, 0.0); };

  for (std::size_t t = 0; t < n_abs; ++t) {
    const auto& at = abs_terms_[t];
    // s_t - expr - u = const  and  s_t + expr - v = -const.
    auto row_hi = blank_row();
    auto row_lo = blank_row();
    row_hi[slack0 + t] = 1.0;
    row_lo[slack0 + t] = 1.0;
    for (const auto& term : at.expr) {
      row_hi[term.var] -= term.coeff;
      row_lo[term.var] += term.coeff;
    }
    row_hi[surplus0 + 2 * t] = -1.0;
    row_lo[surplus0 + 2 * t + 1] = -1.0;
    lp.eq_matrix.push_back(std::move(row_hi));
    lp.eq_rhs.push_back(at.constant);
    lp.eq_matrix.push_back(std::move(row_lo));
    lp.eq_rhs.push_back(-at.constant);
  }

  for (const auto& eq : equalities_) {
    auto row = blank_row();
    for (const auto& term : eq.expr) row[term.var] += term.coeff;
    lp.eq_matrix.push_back(std::move(row));
    lp.eq_rhs.push_back(eq.rhs);
  }

  for (std::size_t b = 0; b < upper_bounds_.size(); ++b) {
    auto row = blank_row();
    row[upper_bounds_[b].first] = 1.0;
    row[ub0 + b] = 1.0;
    lp.eq_matrix.push_back(std::move(row));
    lp.eq_rhs.push_back(upper_bounds_[b].second);
  }

  return lp;
}

namespace {

// Dense tableau: rows 0..m-1 are constraints (rhs in the last column),
// row m is the reduced-cost row (objective value negated in its rhs cell).
struct Tableau {
  std::size_t m = 0;
  std::size_t width = 0;  // columns incl. rhs
  std::vector<double> t;
  std::vector<std::size_t> basis;

  double& at(std::size_t i, std::size_t j) { return t[i * width + j]; }
  double at(std::size_t i, std::size_t j) const { return t[i * width + j]; }
  double* row(std::size_t i) { return t.data() + i * width; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    double* pr = row(r);
    for (std::size_t j = 0; j < width; ++j) pr[j] /= p;
    pr[c] = 1.0;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      simd::daxpy(-f, pr, row(i), width);
      at(i, c) = 0.0;
    }
    basis[r] = c;
  }
};

enum class StepOutcome { Optimal, Pivoted, Unbounded };
enum class PivotRule { Dantzig, Bland };

// One simplex step over the first n_cols columns, skipping blocked columns.
// The entering threshold is the feasibility tolerance: row-operation noise in
// the cost row sits near the pivot tolerance and must not trigger a pivot.
//
// Dantzig pricing with largest-pivot tie-breaking keeps the tableau well
// conditioned on the heavily degenerate kernel instances; the caller falls
// back to Bland's rule when the objective stalls, which restores the
// anti-cycling termination guarantee.
StepOutcome simplex_step(Tableau& tb, std::size_t n_cols, const std::vector<bool>& blocked,
                         PivotRule rule) {
  std::size_t enter = n_cols;
  if (rule == PivotRule::Bland) {
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (blocked[j]) continue;
      if (tb.at(tb.m, j) < -kFeasTol) {
        enter = j;
        break;
      }
    }
  } else {
    double best = -kFeasTol;
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (blocked[j]) continue;
      if (tb.at(tb.m, j) < best) {
        best = tb.at(tb.m, j);
        enter = j;
      }
    }
  }
  if (enter == n_cols) return StepOutcome::Optimal;

  std::size_t leave = tb.m;
  double best_ratio = std::numeric_limits<double>::infinity();
  double best_pivot = 0.0;
  for (std::size_t i = 0; i < tb.m; ++i) {
    const double a = tb.at(i, enter);
    if (a <= kPivotTol) continue;
    const double ratio = tb.at(i, tb.width - 1) / a;
    const double tie = 1e-12 * (1.0 + std::abs(best_ratio));
    if (leave == tb.m || ratio < best_ratio - tie) {
      best_ratio = ratio;
      best_pivot = a;
      leave = i;
    } else if (ratio <= best_ratio + tie) {
      const bool take = rule == PivotRule::Bland ? tb.basis[i] < tb.basis[leave]
                                                 : a > best_pivot;
      if (take) {
        best_ratio = std::min(best_ratio, ratio);
        best_pivot = a;
        leave = i;
      }
    }
  }
  if (leave == tb.m) return StepOutcome::Unbounded;
  tb.pivot(leave, enter);
  return StepOutcome::Pivoted;
}

// Runs steps until optimality, the iteration budget, or an unbounded ray.
// Starts with Dantzig pricing and switches to Bland's rule after a stall.
StepOutcome drive(Tableau& tb, std::size_t n_cols, const std::vector<bool>& blocked,
                  std::size_t max_iters, std::size_t& iters) {
  PivotRule rule = PivotRule::Dantzig;
  double last_objective = tb.at(tb.m, tb.width - 1);
  std::size_t stalled = 0;
  for (;;) {
    if (iters++ >= max_iters) return StepOutcome::Pivoted;  // budget hit mid-flight
    const StepOutcome s = simplex_step(tb, n_cols, blocked, rule);
    if (s != StepOutcome::Pivoted) return s;
    const double objective = tb.at(tb.m, tb.width - 1);
    if (std::abs(objective - last_objective) <= 1e-13) {
      if (++stalled > 64) rule = PivotRule::Bland;
    } else {
      stalled = 0;
      rule = PivotRule::Dantzig;
    }
    last_objective = objective;
  }
}

}  // namespace

SolveResult simplex_solve(const LinearProgram& lp, std::size_t max_iters) {
  lp.validate();
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_constraints();

  // Phase 1: artificial basis, minimize the artificial sum.
  Tableau tb;
  tb.m = m;
  tb.width = n + m + 1;
  tb.t.assign((m + 1) * tb.width, 0.0);
  tb.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = lp.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) tb.at(i, j) = sign * lp.eq_matrix[i][j];
    tb.at(i, n + i) = 1.0;
    tb.at(i, tb.width - 1) = sign * lp.eq_rhs[i];
    tb.basis[i] = n + i;
  }
  // Reduced costs of min sum(artificials): subtract every constraint row.
  for (std::size_t i = 0; i < m; ++i)
    simd::daxpy(-1.0, tb.row(i), tb.row(m), tb.width);
  for (std::size_t i = 0; i < m; ++i) tb.at(m, n + i) = 0.0;

  std::vector<bool> open(n + m, false);
  std::size_t iters = 0;
  {
    const StepOutcome s = drive(tb, n + m, open, max_iters, iters);
    if (iters > max_iters)
      return {SolveStatus::IterationLimit, 0.0, std::vector<double>(n, 0.0), {}};
    const double phase1 = -tb.at(m, tb.width - 1);
    if (s == StepOutcome::Unbounded && phase1 > kFeasTol)
      throw std::runtime_error("simplex_solve: phase-1 unbounded (internal error)");
    // An "unbounded" signal with a feasible artificial sum is cost-row noise
    // on a degenerate vertex; the basis is already feasible.
    if (phase1 > kFeasTol) return {SolveStatus::Infeasible, 0.0, {}, {}};
  }

  // Drive leftover artificials out of the basis; rows that cannot pivot on a
  // structural column are redundant.
  std::vector<bool> redundant(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(tb.at(i, j)) > kPivotTol) {
        col = j;
        break;
      }
    if (col < n)
      tb.pivot(i, col);
    else
      redundant[i] = true;
  }

  // Phase 2 tableau: structural columns only, redundant rows dropped.
  Tableau p2;
  p2.m = 0;
  p2.width = n + 1;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m; ++i)
    if (!redundant[i]) rows.push_back(i);
  p2.m = rows.size();
  p2.t.assign((p2.m + 1) * p2.width, 0.0);
  p2.basis.resize(p2.m);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) p2.at(r, j) = tb.at(rows[r], j);
    p2.at(r, n) = tb.at(rows[r], tb.width - 1);
    p2.basis[r] = tb.basis[rows[r]];
  }
  for (std::size_t j = 0; j < n; ++j) p2.at(p2.m, j) = lp.cost[j];
  for (std::size_t r = 0; r < p2.m; ++r) {
    const double c = p2.at(p2.m, p2.basis[r]);
    if (c != 0.0) simd::daxpy(-c, p2.row(r), p2.row(p2.m), p2.width);
  }

  const std::vector<bool> none(n, false);
  SolveStatus status = SolveStatus::Optimal;
  {
    const StepOutcome s = drive(p2, n, none, max_iters, iters);
    if (iters > max_iters) status = SolveStatus::IterationLimit;
    if (s == StepOutcome::Unbounded) throw std::runtime_error("simplex_solve: LP is unbounded");
  }

  SolveResult out;
  out.status = status;
  out.solution.assign(n, 0.0);
  out.reduced_costs.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) out.reduced_costs[j] = p2.at(p2.m, j);
  for (std::size_t r = 0; r < p2.m; ++r)
    if (p2.basis[r] < n) out.solution[p2.basis[r]] = p2.at(r, p2.width - 1);
  double obj = 0.0;
  for (std::size_t j = 0; j < n; ++j) obj += lp.cost[j] * out.solution[j];
  out.objective = obj;
  return out;
}

}  // namespace qct::optimizer
