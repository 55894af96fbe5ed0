// Copyright 2026 The Colorlab Authors.
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

// Exact two-phase primal simplex over the rationals.
//
// The LP is kept as a dictionary x_B = b - T x_N with one column per
// nonbasic variable only, so memory is (#rows) x (#variables). Equalities are
// split into two inequalities and finite upper bounds become rows. Phase one
// uses a single auxiliary variable subtracted from every row. Pivot selection
// follows Bland's rule throughout, which rules out cycling and makes the
// result a deterministic function of the variable and row order.

#ifndef COLORLAB_SIMPLEX_H_
#define COLORLAB_SIMPLEX_H_

#include <cstdint>
#include <string>
#include <vector>

#include "colorlab/lp.h"
#include "colorlab/rational.h"

namespace colorlab {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };
std::string ToString(SolveStatus status);

struct TightConstraint {
  enum class Kind { kRow, kLowerBound, kUpperBound };
  Kind kind = Kind::kRow;
  int index = 0;  // row index for kRow, variable index otherwise

  friend bool operator==(const TightConstraint&, const TightConstraint&) = default;
};

struct BasicSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<Rational> values;
  Rational objective_value;
  // For kOptimal: exactly num_variables() tight constraints whose coefficient
  // vectors are linearly independent, i.e. a vertex certificate.
  std::vector<TightConstraint> basis;
  std::int64_t pivots = 0;
  int presolve_fixed = 0;  // variables fixed to zero by presolve
};

struct SolveOptions {
  // Upper limit on dictionary entries (internal rows x columns).
  std::int64_t max_dictionary_entries = 60'000'000;
  // Before pivoting, repeatedly fix to zero every variable of a forcing row
  // (e.g. -y_a - y_b >= 0 with y >= 0) and drop rows that became empty or
  // duplicate. The reported basis is still one for the original LP: the
  // fixed variables contribute their lower bounds.
  bool presolve = true;
};

// Never throws on infeasible or unbounded LPs; throws InvalidArgumentError on
// a malformed LP and BudgetError when the dictionary would be too large.
BasicSolution Solve(const RationalLP& lp, const SolveOptions& options = {});

// Human-readable constraint violations of x (empty iff feasible).
std::vector<std::string> FeasibilityViolations(const RationalLP& lp,
                                               const std::vector<Rational>& x);

// All constraints of `lp` that hold with equality at x.
std::vector<TightConstraint> TightConstraintsAt(const RationalLP& lp,
                                                const std::vector<Rational>& x);

// Coefficient vector of a constraint (row or bound) over the variables.
std::vector<Rational> ConstraintVector(const RationalLP& lp,
                                       const TightConstraint& c);

int Rank(std::vector<std::vector<Rational>> rows);

struct VertexReport {
  bool feasible = false;
  bool basis_tight = false;
  bool basis_full_rank = false;
  std::string detail;
  bool ok() const { return feasible && basis_tight && basis_full_rank; }
};

// Re-verifies an optimal solution post hoc: feasibility, tightness of every
// recorded basis constraint, and rank(basis) == num_variables().
VertexReport VerifyVertex(const RationalLP& lp, const BasicSolution& sol);

// True iff x is feasible and its tight constraints have full rank.
bool IsVertex(const RationalLP& lp, const std::vector<Rational>& x);

}  // namespace colorlab

#endif  // COLORLAB_SIMPLEX_H_
