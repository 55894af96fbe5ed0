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

// Sherali-Adams lifts of LPs over [0,1]^n.
//
// Every base constraint is read as b - a.x >= 0 (or = 0); the bounds
// x_j >= 0 and 1 - x_j >= 0 are base constraints too. For disjoint index
// sets (G, D) with |G| + |D| <= psi the constraint is multiplied by
// prod_{i in G} x_i prod_{j in D} (1 - x_j), expanded, and every monomial
// x_I is linearized to y_I using x_i^2 = x_i. The variable y_{} is the
// constant 1.
//
// Lifted LP variables are the subsets of size 1..psi+1 ordered by size and
// then lexicographically, so variable j < n is y_{j} = x_j and projecting a
// lifted point means reading its first n coordinates.

#ifndef COLORLAB_SHERALI_ADAMS_H_
#define COLORLAB_SHERALI_ADAMS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorlab/lp.h"
#include "colorlab/model.h"
#include "colorlab/rational.h"
#include "colorlab/simplex.h"

namespace colorlab {

// Sorted, duplicate-free variable indices.
using IndexSet = std::vector<int>;

std::string ToString(const IndexSet& s);  // "{0,3,7}"
IndexSet Union(const IndexSet& a, const IndexSet& b);

struct MomentVector {
  int level = 0;
  // Absent subsets are 0. The empty set must map to 1.
  std::map<IndexSet, Rational> entries;

  Rational Get(const IndexSet& s) const;
  void Set(const IndexSet& s, const Rational& value);
  bool IsSparse() const;  // zero on every subset of size >= 2
};

// The base constraint b - a.x >= 0, or = 0 when `equality`.
struct SaBaseRow {
  std::string name;
  Rational b;
  LinearTerms a;
  bool equality = false;
};

// Rows of `lp` in >= 0 form followed by "lower:<var>" and "upper:<var>".
// Throws InvalidArgumentError unless every variable has upper bound 1.
std::vector<SaBaseRow> SaBaseRows(const RationalLP& lp);

// sum_I coeffs[I] y_I >= 0 (or = 0); the key {} is the constant term.
struct LiftedConstraint {
  int base_row = 0;
  IndexSet gamma;
  IndexSet delta;
  std::map<IndexSet, Rational> coeffs;
  bool equality = false;
};

// Visits every lifted constraint of level psi without simplification, in a
// fixed order (base row, then multiplier size, then lexicographic). Stops
// early when `visit` returns false.
void ForEachLiftedRow(const std::vector<SaBaseRow>& base, int num_variables,
                      int psi,
                      const std::function<bool(const LiftedConstraint&)>& visit);

// sum_{i=1}^{psi+1} C(n, i), saturating at INT64_MAX.
std::int64_t LiftedVariableCount(int n, int psi);

struct SaOptions {
  std::int64_t max_variables = 200'000;
  // Drop 0 >= 0 rows, duplicates after scaling, and single-variable rows
  // implied by y >= 0.
  bool simplify = true;
  SolveOptions solve;
};

struct SaLift {
  RationalLP lp;
  int level = 0;
  int base_variables = 0;
  std::vector<IndexSet> subsets;  // per lifted variable
  std::map<IndexSet, int> index;
  std::int64_t generated_rows = 0;  // before simplification
};

// Throws BudgetError naming the count when the variable budget is exceeded,
// InvalidArgumentError for psi < 0 or variables outside [0,1]. The lifted
// objective is the base objective on the singleton variables.
SaLift BuildSaLift(const RationalLP& lp, int psi, const SaOptions& options = {});

struct SaOptimum {
  SolveStatus status = SolveStatus::kInfeasible;
  Rational value;
  std::vector<Rational> projection;
  std::int64_t lifted_variables = 0;
  std::int64_t lifted_rows = 0;
  std::int64_t pivots = 0;
};

// Maximizes `objective` (base variable indices; the base objective when
// empty) over the level-psi lift.
SaOptimum OptimizeLift(const RationalLP& lp, int psi, const LinearTerms& objective,
                       const SaOptions& options = {});

struct SaWitness {
  std::string base_row;
  IndexSet gamma;
  IndexSet delta;
  Rational value;  // left-hand side after substitution
  bool equality = false;

  std::string ToString() const;
};

struct SaVerdict {
  bool feasible = true;
  std::optional<SaWitness> witness;
  std::int64_t constraints_checked = 0;
};

// Substitutes mv into every explicitly generated lifted constraint of the
// level-psi lift of `lp`. Subject to the variable budget.
SaVerdict CheckExplicit(const RationalLP& lp, const MomentVector& mv, int psi,
                        const SaOptions& options = {});
SaVerdict CheckExplicit(const ColoredInstance& inst, const MomentVector& mv, int psi,
                        const SaOptions& options = {});

// Same verdict for sparse mv without enumeration. For sparse y only three
// multiplier shapes matter: |G| >= 2 gives 0 >= 0; G = {g} gives
// y_g (b - a_g); G = {} gives (b - a.y) + sum_{h in D} y_h (a_h - b), which
// is minimized by putting into D the (at most psi) most negative terms.
// Throws InvalidArgumentError when mv is not sparse.
SaVerdict CheckClosedForm(const RationalLP& lp, const MomentVector& mv, int psi);
SaVerdict CheckClosedForm(const ColoredInstance& inst, const MomentVector& mv,
                          int psi);

// rho = (1 - eps) / (2^(ell-2) + psi (1 - eps)).
Rational CandidateRho(int ell, int psi, const Rational& eps);
// lim_{eps -> 0} ell 2^(ell-1) rho = 2 ell 2^(ell-2) / (2^(ell-2) + psi).
Rational CandidateLimitValue(int ell, int psi);

struct Candidate {
  int ell = 0;
  Rational eps;
  Rational rho;
  Rational value;  // number of edges times rho
  MomentVector mv;
};

// y_{} = 1, y_{e} = rho on every edge, 0 elsewhere. Throws
// InvalidArgumentError unless `inst` is a generated hypercube instance.
Candidate CandidateVector(const ColoredInstance& inst, int psi);

// The moment vector of an integral point: y_I = prod_{i in I} x_i for
// |I| <= psi + 1.
MomentVector IntegralMoments(const std::vector<int>& chosen, int n, int psi);

}  // namespace colorlab

#endif  // COLORLAB_SHERALI_ADAMS_H_
