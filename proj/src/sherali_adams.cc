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

#include "colorlab/sherali_adams.h"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>
#include <utility>

#include "colorlab/errors.h"
#include "colorlab/generators.h"
#include "colorlab/relaxations.h"

namespace colorlab {
namespace {

// Calls visit(s) for every size-k subset of {0..n-1} in lexicographic order.
template <typename Visit>
bool ForEachSubset(int n, int k, Visit&& visit) {
  IndexSet s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  if (k > n) return true;
  for (;;) {
    if (!visit(s)) return false;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return true;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

IndexSet Insert(const IndexSet& s, int j) {
  IndexSet out = s;
  auto it = std::lower_bound(out.begin(), out.end(), j);
  if (it == out.end() || *it != j) out.insert(it, j);
  return out;
}

LiftedConstraint Expand(const SaBaseRow& row, int base_row, const IndexSet& gamma,
                        const IndexSet& delta) {
  LiftedConstraint out;
  out.base_row = base_row;
  out.gamma = gamma;
  out.delta = delta;
  out.equality = row.equality;
  const int d = static_cast<int>(delta.size());
  for (int mask = 0; mask < (1 << d); ++mask) {
    IndexSet base = gamma;
    for (int i = 0; i < d; ++i) {
      if (mask & (1 << i)) base = Insert(base, delta[i]);
    }
    const bool odd = __builtin_popcount(mask) % 2 == 1;
    if (!row.b.is_zero()) {
      Rational& c = out.coeffs[base];
      odd ? c -= row.b : c += row.b;
    }
    for (const auto& [j, a] : row.a) {
      Rational& c = out.coeffs[Insert(base, j)];
      odd ? c += a : c -= a;
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void CheckLevel(int psi) {
  if (psi < 0) {
    throw InvalidArgumentError("Sherali-Adams level must be >= 0, got " +
                               std::to_string(psi));
  }
}

void CheckBudget(int n, int psi, const SaOptions& options) {
  const std::int64_t count = LiftedVariableCount(n, psi);
  if (count > options.max_variables) {
    throw BudgetError("level-" + std::to_string(psi) + " lift of " + std::to_string(n) +
                      " variables needs " + std::to_string(count) +
                      " lifted variables, budget is " +
                      std::to_string(options.max_variables));
  }
}

bool Holds(const Rational& value, bool equality) {
  return equality ? value.is_zero() : value.sign() >= 0;
}

}  // namespace

std::string ToString(const IndexSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

IndexSet Union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Rational MomentVector::Get(const IndexSet& s) const {
  auto it = entries.find(s);
  return it == entries.end() ? Rational(0) : it->second;
}

void MomentVector::Set(const IndexSet& s, const Rational& value) {
  if (value.is_zero() && !s.empty()) {
    entries.erase(s);
  } else {
    entries[s] = value;
  }
}

bool MomentVector::IsSparse() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& kv) {
    return kv.first.size() < 2 || kv.second.is_zero();
  });
}

std::vector<SaBaseRow> SaBaseRows(const RationalLP& lp) {
  std::vector<SaBaseRow> out;
  for (const LpVariable& v : lp.variables) {
    if (!v.upper || *v.upper != Rational(1)) {
      throw InvalidArgumentError("Sherali-Adams needs [0,1] variables; " + v.name +
                                 " is not bounded by 1");
    }
  }
  for (const LpRow& row : lp.rows) {
    SaBaseRow base{row.name, row.rhs, Normalize(row.terms),
                   row.relation == Relation::kEqual};
    if (row.relation == Relation::kGreaterEqual) {
      base.b = -base.b;
      for (auto& t : base.a) t.second = -t.second;
    }
    out.push_back(std::move(base));
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    out.push_back(SaBaseRow{"lower:" + lp.variables[j].name, Rational(0),
                            LinearTerms{{j, Rational(-1)}}, false});
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    out.push_back(SaBaseRow{"upper:" + lp.variables[j].name, Rational(1),
                            LinearTerms{{j, Rational(1)}}, false});
  }
  return out;
}

void ForEachLiftedRow(const std::vector<SaBaseRow>& base, int num_variables,
                      int psi,
                      const std::function<bool(const LiftedConstraint&)>& visit) {
  CheckLevel(psi);
  for (int r = 0; r < static_cast<int>(base.size()); ++r) {
    for (int k = 0; k <= psi; ++k) {
      const bool go_on = ForEachSubset(num_variables, k, [&](const IndexSet& s) {
        for (int mask = 0; mask < (1 << k); ++mask) {
          IndexSet gamma, delta;
          for (int i = 0; i < k; ++i) {
            (mask & (1 << i) ? delta : gamma).push_back(s[i]);
          }
          if (!visit(Expand(base[r], r, gamma, delta))) return false;
        }
        return true;
      });
      if (!go_on) return;
    }
  }
}

std::int64_t LiftedVariableCount(int n, int psi) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  __int128 binom = 1;  // C(n, i)
  for (int i = 1; i <= psi + 1 && i <= n; ++i) {
    binom = binom * (n - i + 1) / i;
    if (binom > kMax || total > kMax - static_cast<std::int64_t>(binom)) return kMax;
    total += static_cast<std::int64_t>(binom);
  }
  return total;
}

SaLift BuildSaLift(const RationalLP& lp, int psi, const SaOptions& options) {
  CheckLevel(psi);
  const int n = lp.num_variables();
  CheckBudget(n, psi, options);
  const std::vector<SaBaseRow> base = SaBaseRows(lp);

  SaLift lift;
  lift.level = psi;
  lift.base_variables = n;
  for (int size = 1; size <= psi + 1; ++size) {
    ForEachSubset(n, size, [&](const IndexSet& s) {
      lift.index.emplace(s, static_cast<int>(lift.subsets.size()));
      lift.subsets.push_back(s);
      lift.lp.AddVariable("y" + ToString(s), Rational(1));
      return true;
    });
  }
  lift.lp.objective = Normalize(lp.objective);
  lift.lp.sense = lp.sense;

  std::set<std::tuple<bool, LinearTerms, Rational>> seen;
  ForEachLiftedRow(base, n, psi, [&](const LiftedConstraint& c) {
    ++lift.generated_rows;
    LinearTerms terms;
    Rational rhs;
    for (const auto& [s, coef] : c.coeffs) {
      if (s.empty()) {
        rhs = -coef;
      } else {
        terms.emplace_back(lift.index.at(s), coef);
      }
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (options.simplify) {
      if (terms.empty() && (c.equality ? rhs.is_zero() : rhs.sign() <= 0)) return true;
      if (!c.equality && terms.size() == 1 && terms[0].second.sign() > 0 &&
          rhs.sign() <= 0) {
        return true;
      }
      if (!terms.empty()) {
        const Rational scale = c.equality ? terms[0].second : terms[0].second.Abs();
        if (scale != Rational(1)) {
          for (auto& t : terms) t.second /= scale;
          rhs /= scale;
        }
      }
      if (!seen.emplace(c.equality, terms, rhs).second) return true;
    }
    lift.lp.AddRow(base[c.base_row].name + "|G" + ToString(c.gamma) + "D" +
                       ToString(c.delta),
                   std::move(terms), c.equality ? Relation::kEqual : Relation::kGreaterEqual,
                   rhs);
    return true;
  });
  return lift;
}

SaOptimum OptimizeLift(const RationalLP& lp, int psi, const LinearTerms& objective,
                       const SaOptions& options) {
  SaLift lift = BuildSaLift(lp, psi, options);
  if (!objective.empty()) lift.lp.objective = Normalize(objective);
  lift.lp.sense = Sense::kMaximize;
  if (lp.sense == Sense::kMinimize && objective.empty()) lift.lp.sense = Sense::kMinimize;
  const BasicSolution sol = Solve(lift.lp, options.solve);
  SaOptimum out;
  out.status = sol.status;
  out.lifted_variables = lift.lp.num_variables();
  out.lifted_rows = lift.lp.num_rows();
  out.pivots = sol.pivots;
  if (sol.status == SolveStatus::kOptimal) {
    out.value = sol.objective_value;
    out.projection.assign(sol.values.begin(), sol.values.begin() + lp.num_variables());
  }
  return out;
}

std::string SaWitness::ToString() const {
  return "row " + base_row + " with G=" + colorlab::ToString(gamma) +
         " D=" + colorlab::ToString(delta) + " evaluates to " + value.ToString() +
         (equality ? " (must be 0)" : " (must be >= 0)");
}

SaVerdict CheckExplicit(const RationalLP& lp, const MomentVector& mv, int psi,
                        const SaOptions& options) {
  CheckLevel(psi);
  CheckBudget(lp.num_variables(), psi, options);
  if (mv.Get({}) != Rational(1)) {
    throw InvalidArgumentError("moment vector must have y_{} = 1");
  }
  const std::vector<SaBaseRow> base = SaBaseRows(lp);
  SaVerdict verdict;
  ForEachLiftedRow(base, lp.num_variables(), psi, [&](const LiftedConstraint& c) {
    ++verdict.constraints_checked;
    Rational value;
    for (const auto& [s, coef] : c.coeffs) {
      auto it = mv.entries.find(s);
      if (it != mv.entries.end()) value.AddMul(coef, it->second);
    }
    if (Holds(value, c.equality)) return true;
    verdict.feasible = false;
    verdict.witness =
        SaWitness{base[c.base_row].name, c.gamma, c.delta, value, c.equality};
    return false;
  });
  return verdict;
}

SaVerdict CheckExplicit(const ColoredInstance& inst, const MomentVector& mv, int psi,
                        const SaOptions& options) {
  return CheckExplicit(BuildMc(inst), mv, psi, options);
}

SaVerdict CheckClosedForm(const RationalLP& lp, const MomentVector& mv, int psi) {
  CheckLevel(psi);
  if (!mv.IsSparse()) {
    throw InvalidArgumentError(
        "closed-form check needs a sparse moment vector (zero on |I| >= 2)");
  }
  if (mv.Get({}) != Rational(1)) {
    throw InvalidArgumentError("moment vector must have y_{} = 1");
  }
  const int n = lp.num_variables();
  std::vector<std::pair<int, Rational>> support;  // nonzero y_{j}
  for (int j = 0; j < n; ++j) {
    if (Rational z = mv.Get({j}); !z.is_zero()) support.emplace_back(j, std::move(z));
  }
  SaVerdict verdict;
  for (const SaBaseRow& row : SaBaseRows(lp)) {
    std::map<int, Rational> a(row.a.begin(), row.a.end());
    auto coef = [&](int j) {
      auto it = a.find(j);
      return it == a.end() ? Rational(0) : it->second;
    };
    auto fail = [&](IndexSet gamma, IndexSet delta, Rational value) {
      verdict.feasible = false;
      verdict.witness = SaWitness{row.name, std::move(gamma), std::move(delta),
                                  std::move(value), row.equality};
    };

    // G = {}: f(D) = (b - a.y) + sum_{h in D} t_h with t_h = y_h (a_h - b).
    Rational slack = row.b;
    for (const auto& [j, z] : support) slack.SubMul(coef(j), z);
    std::vector<std::pair<Rational, int>> t;
    for (const auto& [j, z] : support) {
      Rational th = z * (coef(j) - row.b);
      if (!th.is_zero()) t.emplace_back(std::move(th), j);
    }
    std::sort(t.begin(), t.end());
    ++verdict.constraints_checked;
    if (row.equality) {
      if (!slack.is_zero()) {
        fail({}, {}, slack);
        return verdict;
      }
      if (psi >= 1 && !t.empty()) {
        fail({}, {t.front().second}, t.front().first);
        return verdict;
      }
    } else {
      Rational worst = slack;
      IndexSet delta;
      for (int i = 0; i < static_cast<int>(t.size()) && i < psi && t[i].first.sign() < 0;
           ++i) {
        worst += t[i].first;
        delta.push_back(t[i].second);
      }
      if (worst.sign() < 0) {
        std::sort(delta.begin(), delta.end());
        fail({}, std::move(delta), std::move(worst));
        return verdict;
      }
    }

    // G = {g}, D = {}: y_g (b - a_g).
    if (psi >= 1) {
      for (const auto& [g, z] : support) {
        ++verdict.constraints_checked;
        const Rational value = z * (row.b - coef(g));
        if (!Holds(value, row.equality)) {
          fail({g}, {}, value);
          return verdict;
        }
      }
    }
  }
  return verdict;
}

SaVerdict CheckClosedForm(const ColoredInstance& inst, const MomentVector& mv,
                          int psi) {
  return CheckClosedForm(BuildMc(inst), mv, psi);
}

Rational CandidateRho(int ell, int psi, const Rational& eps) {
  if (ell < 2 || psi < 0) {
    throw InvalidArgumentError("candidate needs ell >= 2 and psi >= 0");
  }
  const Rational one_minus = Rational(1) - eps;
  return one_minus / (PowerOfTwo(ell - 2) + Rational(psi) * one_minus);
}

Rational CandidateLimitValue(int ell, int psi) {
  if (ell < 2 || psi < 0) {
    throw InvalidArgumentError("candidate needs ell >= 2 and psi >= 0");
  }
  const Rational q = PowerOfTwo(ell - 2);
  return Rational(2 * ell) * q / (q + Rational(psi));
}

Candidate CandidateVector(const ColoredInstance& inst, int psi) {
  const auto found = RecognizeHypercube(inst);
  if (!found) {
    throw InvalidArgumentError(
        "candidate vector is defined only for generated hypercube instances");
  }
  Candidate out;
  out.ell = found->first;
  out.eps = found->second;
  out.rho = CandidateRho(out.ell, psi, out.eps);
  out.value = Rational(inst.num_edges()) * out.rho;
  out.mv.level = psi;
  out.mv.Set({}, Rational(1));
  for (int j = 0; j < inst.num_edges(); ++j) out.mv.Set({j}, out.rho);
  return out;
}

MomentVector IntegralMoments(const std::vector<int>& chosen, int n, int psi) {
  IndexSet sorted = chosen;
  std::sort(sorted.begin(), sorted.end());
  for (int j : sorted) {
    if (j < 0 || j >= n) throw InvalidArgumentError("index out of range");
  }
  MomentVector mv;
  mv.level = psi;
  mv.Set({}, Rational(1));
  const int k = static_cast<int>(sorted.size());
  for (int size = 1; size <= psi + 1 && size <= k; ++size) {
    ForEachSubset(k, size, [&](const IndexSet& pos) {
      IndexSet s;
      for (int p : pos) s.push_back(sorted[p]);
      mv.Set(s, Rational(1));
      return true;
    });
  }
  return mv;
}

}  // namespace colorlab
