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

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace qct::optimizer {

// Pivot and feasibility tolerances; they propagate to the certification
// threshold used by the criterion kernels.
inline constexpr double kPivotTol = 1e-10;
inline constexpr double kFeasTol = 1e-9;

// Standard-form LP: minimize cost . x subject to eq_matrix x = eq_rhs, x >= 0.
struct LinearProgram {
  std::vector<double> cost;
  std::vector<std::vector<double>> eq_matrix;
  std::vector<double> eq_rhs;

  std::size_t num_vars() const { return cost.size(); }
  std::size_t num_constraints() const { return eq_matrix.size(); }
  void validate() const;  // shapes and finiteness; throws std::invalid_argument
};

// Builder that lowers |expr| objective terms, equality constraints and upper
// bounds into standard form. Each |sum_i c_i x_i + const| becomes a slack s in
// the objective with two surplus-completed inequalities s >= +-expr; upper
// bounds become slack rows. All declared variables are nonnegative.
class LpBuilder {
 public:
  struct Term {
    std::size_t var;
    double coeff;
  };

  std::size_t add_variable();
  std::size_t add_variable_upper_bounded(double upper);

  void add_abs_objective_term(std::vector<Term> expr, double constant);
  void add_equality(std::vector<Term> expr, double rhs);

  LinearProgram build() const;

  // Positions of the declared variables inside the standard-form solution
  // vector (identity under the current lowering, kept explicit for callers).
  std::size_t solution_index(std::size_t var) const { return var; }
  std::size_t num_declared() const { return num_vars_; }

 private:
  struct AbsTerm {
    std::vector<Term> expr;
    double constant;
  };
  struct Equality {
    std::vector<Term> expr;
    double rhs;
  };

  std::size_t num_vars_ = 0;
  std::vector<std::pair<std::size_t, double>> upper_bounds_;
  std::vector<AbsTerm> abs_terms_;
  std::vector<Equality> equalities_;
};

enum class SolveStatus { Optimal, Infeasible, IterationLimit };

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  double objective = 0.0;
  std::vector<double> solution;       // primal values of all standard-form variables
  std::vector<double> reduced_costs;  // objective row at termination; >= 0 at an optimum
};

// Two-phase primal simplex on a dense tableau, Bland's anti-cycling rule.
// On Optimal the solution is primal feasible to kFeasTol. On IterationLimit
// the best feasible incumbent reached so far is returned. Throws
// std::runtime_error if the LP is unbounded.
SolveResult simplex_solve(const LinearProgram& lp, std::size_t max_iters = 20000);

}  // namespace qct::optimizer
