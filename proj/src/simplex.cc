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

#include "colorlab/simplex.h"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "colorlab/errors.h"

namespace colorlab {
namespace {

// Variable ids inside the dictionary: structural 0..n-1, the slack of
// internal row r is n + r, the phase-one auxiliary is n + m.
class Dictionary {
 public:
  Dictionary(int num_structural, std::vector<std::vector<Rational>> a,
             std::vector<Rational> b)
      : n_(num_structural),
        m_(static_cast<int>(a.size())),
        t_(std::move(a)),
        rhs_(std::move(b)),
        cost_(n_) {
    basic_.resize(m_);
    for (int r = 0; r < m_; ++r) basic_[r] = n_ + r;
    nonbasic_.resize(n_);
    for (int j = 0; j < n_; ++j) nonbasic_[j] = j;
  }

  // Returns false if the constraints are infeasible.
  bool PhaseOne() {
    int worst = -1;
    for (int r = 0; r < m_; ++r) {
      if (rhs_[r].sign() < 0 && (worst < 0 || rhs_[r] < rhs_[worst])) worst = r;
    }
    if (worst < 0) return true;
    const int aux = n_ + m_;
    const int ncols = static_cast<int>(nonbasic_.size());
    for (int r = 0; r < m_; ++r) t_[r].push_back(Rational(-1));
    nonbasic_.push_back(aux);
    cost_.assign(ncols + 1, Rational(0));
    cost_[ncols] = Rational(-1);
    z0_ = Rational(0);
    Pivot(worst, ncols);
    Run();
    if (z0_.sign() < 0) return false;

    // Drive the auxiliary out of the basis with a degenerate pivot if needed.
    auto where = std::find(basic_.begin(), basic_.end(), aux);
    if (where != basic_.end()) {
      const int r = static_cast<int>(where - basic_.begin());
      int best = -1;
      for (int k = 0; k < static_cast<int>(nonbasic_.size()); ++k) {
        if (!t_[r][k].is_zero() && (best < 0 || nonbasic_[k] < nonbasic_[best])) {
          best = k;
        }
      }
      if (best >= 0) {
        Pivot(r, best);
      } else {
        // The row reads aux = 0 identically; it carries no information.
        t_.erase(t_.begin() + r);
        rhs_.erase(rhs_.begin() + r);
        basic_.erase(basic_.begin() + r);
      }
    }
    auto col = std::find(nonbasic_.begin(), nonbasic_.end(), aux);
    if (col != nonbasic_.end()) {
      const auto k = col - nonbasic_.begin();
      for (auto& row : t_) row.erase(row.begin() + k);
      nonbasic_.erase(col);
    }
    return true;
  }

  // Installs the phase-two objective max c.x over structural variables.
  void SetObjective(const std::vector<Rational>& c) {
    const int ncols = static_cast<int>(nonbasic_.size());
    cost_.assign(ncols, Rational(0));
    z0_ = Rational(0);
    for (int k = 0; k < ncols; ++k) {
      if (nonbasic_[k] < n_) cost_[k] = c[nonbasic_[k]];
    }
    for (size_t r = 0; r < basic_.size(); ++r) {
      const int b = basic_[r];
      if (b >= n_ || c[b].is_zero()) continue;
      z0_.AddMul(c[b], rhs_[r]);
      for (int k = 0; k < ncols; ++k) {
        if (!t_[r][k].is_zero()) cost_[k].SubMul(c[b], t_[r][k]);
      }
    }
  }

  // Bland's rule. Returns false when unbounded.
  bool Run() {
    const int ncols = static_cast<int>(nonbasic_.size());
    const int nrows = static_cast<int>(basic_.size());
    for (;;) {
      int enter = -1;
      for (int k = 0; k < ncols; ++k) {
        if (cost_[k].sign() > 0 && (enter < 0 || nonbasic_[k] < nonbasic_[enter])) {
          enter = k;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      for (int r = 0; r < nrows; ++r) {
        const Rational& a = t_[r][enter];
        if (a.sign() <= 0) continue;
        if (leave < 0) {
          leave = r;
          continue;
        }
        // Compare rhs_r / a with rhs_leave / a_leave; both denominators > 0.
        const mpq_class lhs = rhs_[r].raw() * t_[leave][enter].raw();
        const mpq_class cur = rhs_[leave].raw() * a.raw();
        const int c = cmp(lhs, cur);
        if (c < 0 || (c == 0 && basic_[r] < basic_[leave])) leave = r;
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(int r, int k) {
    ++pivots_;
    const int ncols = static_cast<int>(nonbasic_.size());
    const Rational inv = Rational(1) / t_[r][k];
    std::vector<Rational>& pr = t_[r];
    for (int j = 0; j < ncols; ++j) {
      if (j != k && !pr[j].is_zero()) pr[j] *= inv;
    }
    pr[k] = inv;
    rhs_[r] *= inv;
    // The sparsity pattern of the pivot row drives the update.
    std::vector<int> nz;
    for (int j = 0; j < ncols; ++j) {
      if (j != k && !pr[j].is_zero()) nz.push_back(j);
    }
    for (size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      std::vector<Rational>& row = t_[i];
      if (row[k].is_zero()) continue;
      const Rational f = row[k];
      for (int j : nz) row[j].SubMul(f, pr[j]);
      row[k] = -f * inv;
      rhs_[i].SubMul(f, rhs_[r]);
    }
    if (!cost_[k].is_zero()) {
      const Rational f = cost_[k];
      for (int j : nz) cost_[j].SubMul(f, pr[j]);
      cost_[k] = -f * inv;
      z0_.AddMul(f, rhs_[r]);
    }
    std::swap(basic_[r], nonbasic_[k]);
  }

  std::vector<Rational> StructuralValues() const {
    std::vector<Rational> x(n_);
    for (size_t r = 0; r < basic_.size(); ++r) {
      if (basic_[r] < n_) x[basic_[r]] = rhs_[r];
    }
    return x;
  }

  const std::vector<int>& nonbasic() const { return nonbasic_; }
  const Rational& objective() const { return z0_; }
  std::int64_t pivots() const { return pivots_; }

 private:
  int n_;
  int m_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<Rational> cost_;
  Rational z0_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::int64_t pivots_ = 0;
};

bool Satisfies(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
    case Relation::kEqual:
      return lhs == rhs;
  }
  return false;
}

std::string Describe(const RationalLP& lp, const TightConstraint& c) {
  switch (c.kind) {
    case TightConstraint::Kind::kRow:
      return "row " + lp.rows[c.index].name;
    case TightConstraint::Kind::kLowerBound:
      return "lower bound of " + lp.variables[c.index].name;
    case TightConstraint::Kind::kUpperBound:
      return "upper bound of " + lp.variables[c.index].name;
  }
  return "?";
}

BasicSolution SolveDirect(const RationalLP& lp, const SolveOptions& options) {
  const int n = lp.num_variables();

  // Internal rows a.x <= b and the original constraint each one came from.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<TightConstraint> origin;
  std::int64_t internal_rows = 0;
  for (const LpRow& row : lp.rows) {
    internal_rows += row.relation == Relation::kEqual ? 2 : 1;
  }
  for (const LpVariable& v : lp.variables) internal_rows += v.upper ? 1 : 0;
  if (internal_rows * std::max(n, 1) > options.max_dictionary_entries) {
    throw BudgetError("simplex dictionary would have " +
                      std::to_string(internal_rows) + " x " + std::to_string(n) +
                      " entries, limit " +
                      std::to_string(options.max_dictionary_entries));
  }
  auto add = [&](const LinearTerms& terms, const Rational& rhs, bool negate,
                 TightConstraint from) {
    std::vector<Rational> dense(n);
    for (const auto& [j, c] : terms) dense[j] += c;
    if (negate) {
      for (Rational& v : dense) {
        if (!v.is_zero()) v = -v;
      }
    }
    a.push_back(std::move(dense));
    b.push_back(negate ? -rhs : rhs);
    origin.push_back(from);
  };
  for (int i = 0; i < lp.num_rows(); ++i) {
    const LpRow& row = lp.rows[i];
    const TightConstraint from{TightConstraint::Kind::kRow, i};
    if (row.relation != Relation::kGreaterEqual) add(row.terms, row.rhs, false, from);
    if (row.relation != Relation::kLessEqual) add(row.terms, row.rhs, true, from);
  }
  for (int j = 0; j < n; ++j) {
    if (!lp.variables[j].upper) continue;
    add(LinearTerms{{j, Rational(1)}}, *lp.variables[j].upper, false,
        TightConstraint{TightConstraint::Kind::kUpperBound, j});
  }

  std::vector<Rational> c(n);
  for (const auto& [j, coef] : lp.objective) c[j] += coef;
  const bool minimize = lp.sense == Sense::kMinimize;
  if (minimize) {
    for (Rational& v : c) {
      if (!v.is_zero()) v = -v;
    }
  }

  Dictionary dict(n, std::move(a), std::move(b));
  BasicSolution sol;
  if (!dict.PhaseOne()) {
    sol.status = SolveStatus::kInfeasible;
    sol.pivots = dict.pivots();
    return sol;
  }
  dict.SetObjective(c);
  const bool bounded = dict.Run();
  sol.pivots = dict.pivots();
  if (!bounded) {
    sol.status = SolveStatus::kUnbounded;
    return sol;
  }
  sol.status = SolveStatus::kOptimal;
  sol.values = dict.StructuralValues();
  sol.objective_value = minimize ? -dict.objective() : dict.objective();
  for (int id : dict.nonbasic()) {
    sol.basis.push_back(id < n ? TightConstraint{TightConstraint::Kind::kLowerBound, id}
                               : origin[id - n]);
  }
  return sol;
}


// Forcing-row presolve; see SolveOptions::presolve.
BasicSolution SolvePresolved(const RationalLP& lp, const SolveOptions& options) {
  const int n = lp.num_variables();
  std::vector<bool> fixed(n, false);
  for (int j = 0; j < n; ++j) {
    if (lp.variables[j].upper && lp.variables[j].upper->is_zero()) fixed[j] = true;
  }
  std::vector<LinearTerms> terms;
  for (const LpRow& row : lp.rows) terms.push_back(Normalize(row.terms));
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < lp.num_rows(); ++i) {
      const LpRow& row = lp.rows[i];
      if (!row.rhs.is_zero()) continue;
      bool any = false, nonneg = true, nonpos = true;
      for (const auto& [j, c] : terms[i]) {
        if (fixed[j]) continue;
        any = true;
        nonneg = nonneg && c.sign() >= 0;
        nonpos = nonpos && c.sign() <= 0;
      }
      const bool forcing = any && ((row.relation == Relation::kGreaterEqual && nonpos) ||
                                   (row.relation == Relation::kLessEqual && nonneg) ||
                                   (row.relation == Relation::kEqual && (nonneg || nonpos)));
      if (!forcing) continue;
      for (const auto& [j, c] : terms[i]) fixed[j] = true;
      changed = true;
    }
  }

  RationalLP red;
  red.sense = lp.sense;
  std::vector<int> new_index(n, -1);
  std::vector<int> old_var;
  for (int j = 0; j < n; ++j) {
    if (fixed[j]) continue;
    new_index[j] = red.AddVariable(lp.variables[j].name, lp.variables[j].upper);
    old_var.push_back(j);
  }
  for (const auto& [j, c] : lp.objective) {
    if (new_index[j] >= 0) red.objective.emplace_back(new_index[j], c);
  }
  std::vector<int> old_row;
  std::set<std::tuple<Relation, LinearTerms, Rational>> seen;
  for (int i = 0; i < lp.num_rows(); ++i) {
    LinearTerms live;
    for (const auto& [j, c] : terms[i]) {
      if (new_index[j] >= 0) live.emplace_back(new_index[j], c);
    }
    const LpRow& row = lp.rows[i];
    if (live.empty() && Satisfies(Rational(0), row.relation, row.rhs)) continue;
    if (!seen.emplace(row.relation, live, row.rhs).second) continue;
    red.AddRow(row.name, std::move(live), row.relation, row.rhs);
    old_row.push_back(i);
  }

  BasicSolution inner = SolveDirect(red, options);
  BasicSolution sol;
  sol.status = inner.status;
  sol.pivots = inner.pivots;
  sol.presolve_fixed = n - red.num_variables();
  if (inner.status != SolveStatus::kOptimal) return sol;
  sol.objective_value = inner.objective_value;
  sol.values.assign(n, Rational(0));
  for (int k = 0; k < red.num_variables(); ++k) sol.values[old_var[k]] = inner.values[k];
  for (const TightConstraint& c : inner.basis) {
    sol.basis.push_back(c.kind == TightConstraint::Kind::kRow
                            ? TightConstraint{c.kind, old_row[c.index]}
                            : TightConstraint{c.kind, old_var[c.index]});
  }
  for (int j = 0; j < n; ++j) {
    if (fixed[j]) sol.basis.push_back({TightConstraint::Kind::kLowerBound, j});
  }
  return sol;
}

}  // namespace

std::string ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

BasicSolution Solve(const RationalLP& lp, const SolveOptions& options) {
  if (auto problems = ValidateLp(lp); !problems.empty()) {
    throw InvalidArgumentError("malformed LP: " + problems.front());
  }
  return options.presolve ? SolvePresolved(lp, options) : SolveDirect(lp, options);
}

std::vector<std::string> FeasibilityViolations(const RationalLP& lp,
                                               const std::vector<Rational>& x) {
  std::vector<std::string> out;
  if (static_cast<int>(x.size()) != lp.num_variables()) {
    out.push_back("point has " + std::to_string(x.size()) + " coordinates, LP has " +
                  std::to_string(lp.num_variables()) + " variables");
    return out;
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (x[j].sign() < 0) {
      out.push_back(lp.variables[j].name + " = " + x[j].ToString() + " < 0");
    }
    if (lp.variables[j].upper && x[j] > *lp.variables[j].upper) {
      out.push_back(lp.variables[j].name + " = " + x[j].ToString() + " > " +
                    lp.variables[j].upper->ToString());
    }
  }
  for (const LpRow& row : lp.rows) {
    const Rational lhs = Evaluate(row.terms, x);
    if (!Satisfies(lhs, row.relation, row.rhs)) {
      out.push_back("row " + row.name + ": " + lhs.ToString() + " " +
                    ToString(row.relation) + " " + row.rhs.ToString() + " fails");
    }
  }
  return out;
}

std::vector<TightConstraint> TightConstraintsAt(const RationalLP& lp,
                                                const std::vector<Rational>& x) {
  std::vector<TightConstraint> out;
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (Evaluate(lp.rows[i].terms, x) == lp.rows[i].rhs) {
      out.push_back({TightConstraint::Kind::kRow, i});
    }
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (x[j].is_zero()) out.push_back({TightConstraint::Kind::kLowerBound, j});
    if (lp.variables[j].upper && x[j] == *lp.variables[j].upper) {
      out.push_back({TightConstraint::Kind::kUpperBound, j});
    }
  }
  return out;
}

std::vector<Rational> ConstraintVector(const RationalLP& lp,
                                       const TightConstraint& c) {
  std::vector<Rational> v(lp.num_variables());
  if (c.kind == TightConstraint::Kind::kRow) {
    for (const auto& [j, coef] : lp.rows[c.index].terms) v[j] += coef;
  } else {
    v[c.index] = Rational(1);
  }
  return v;
}

int Rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  int rank = 0;
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col] * inv;
      for (size_t j = col; j < cols; ++j) {
        if (!rows[rank][j].is_zero()) rows[i][j].SubMul(f, rows[rank][j]);
      }
    }
    ++rank;
  }
  return rank;
}

VertexReport VerifyVertex(const RationalLP& lp, const BasicSolution& sol) {
  VertexReport report;
  if (sol.status != SolveStatus::kOptimal) {
    report.detail = "status is " + ToString(sol.status);
    return report;
  }
  const auto violations = FeasibilityViolations(lp, sol.values);
  report.feasible = violations.empty();
  if (!report.feasible) report.detail = violations.front();

  report.basis_tight = true;
  std::vector<std::vector<Rational>> rows;
  for (const TightConstraint& c : sol.basis) {
    bool tight = false;
    switch (c.kind) {
      case TightConstraint::Kind::kRow:
        tight = Evaluate(lp.rows[c.index].terms, sol.values) == lp.rows[c.index].rhs;
        break;
      case TightConstraint::Kind::kLowerBound:
        tight = sol.values[c.index].is_zero();
        break;
      case TightConstraint::Kind::kUpperBound:
        tight = lp.variables[c.index].upper &&
                sol.values[c.index] == *lp.variables[c.index].upper;
        break;
    }
    if (!tight) {
      report.basis_tight = false;
      if (report.detail.empty()) report.detail = Describe(lp, c) + " is not tight";
    }
    rows.push_back(ConstraintVector(lp, c));
  }
  const int n = lp.num_variables();
  report.basis_full_rank =
      static_cast<int>(sol.basis.size()) == n && Rank(std::move(rows)) == n;
  if (!report.basis_full_rank && report.detail.empty()) {
    report.detail = "basis of " + std::to_string(sol.basis.size()) +
                    " constraints does not have rank " + std::to_string(n);
  }
  return report;
}

bool IsVertex(const RationalLP& lp, const std::vector<Rational>& x) {
  if (!FeasibilityViolations(lp, x).empty()) return false;
  const int n = lp.num_variables();
  if (n == 0) return true;
  std::vector<std::vector<Rational>> rows;
  for (const TightConstraint& c : TightConstraintsAt(lp, x)) {
    rows.push_back(ConstraintVector(lp, c));
  }
  return Rank(std::move(rows)) == n;
}

}  // namespace colorlab
