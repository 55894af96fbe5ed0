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

#include <optional>
#include <random>
#include <vector>

#include "colorlab/errors.h"
#include "gtest/gtest.h"

namespace colorlab {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Solves the square system m x = rhs; nullopt when singular.
std::optional<std::vector<Rational>> SolveSquare(Matrix m, std::vector<Rational> rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[col]);
    std::swap(rhs[p], rhs[col]);
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      const Rational f = m[i][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Ground truth for tiny bounded LPs: the best objective over all vertices,
// found by intersecting every choice of n constraint hyperplanes.
std::optional<Rational> BruteForceOptimum(const RationalLP& lp) {
  const int n = lp.num_variables();
  std::vector<std::pair<std::vector<Rational>, Rational>> planes;
  for (const LpRow& row : lp.rows) {
    std::vector<Rational> a(n);
    for (const auto& [j, c] : row.terms) a[j] += c;
    planes.emplace_back(a, row.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = Rational(1);
    planes.emplace_back(e, Rational(0));
    if (lp.variables[j].upper) planes.emplace_back(e, *lp.variables[j].upper);
  }
  const int p = static_cast<int>(planes.size());
  std::optional<Rational> best;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == n) {
      Matrix m;
      std::vector<Rational> rhs;
      for (int i : pick) {
        m.push_back(planes[i].first);
        rhs.push_back(planes[i].second);
      }
      const auto x = SolveSquare(m, rhs);
      if (!x || !FeasibilityViolations(lp, *x).empty()) return;
      Rational obj = Evaluate(lp.objective, *x);
      if (lp.sense == Sense::kMinimize) obj = -obj;
      if (!best || obj > *best) best = obj;
      return;
    }
    for (int i = start; i < p; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  if (best && lp.sense == Sense::kMinimize) best = -*best;
  return best;
}

TEST(SimplexTest, SmallMaximization) {
  RationalLP lp;
  lp.AddVariable("a", std::nullopt);
  lp.AddVariable("b", std::nullopt);
  lp.objective = {{0, Rational(3)}, {1, Rational(2)}};
  lp.AddRow("r1", {{0, Rational(1)}, {1, Rational(1)}}, Relation::kLessEqual, Rational(4));
  lp.AddRow("r2", {{0, Rational(1)}, {1, Rational(3)}}, Relation::kLessEqual, Rational(6));
  lp.AddRow("r3", {{0, Rational(1)}}, Relation::kLessEqual, Rational(3));
  const BasicSolution sol = Solve(lp);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.objective_value, Rational(11));
  EXPECT_EQ(sol.values[0], Rational(3));
  EXPECT_EQ(sol.values[1], Rational(1));
  EXPECT_TRUE(VerifyVertex(lp, sol).ok());
}

TEST(SimplexTest, PhaseOneHandlesGreaterEqualAndEquality) {
  RationalLP lp;
  lp.sense = Sense::kMinimize;
  lp.AddVariable("a", std::nullopt);
  lp.AddVariable("b", std::nullopt);
  lp.objective = {{0, Rational(1)}, {1, Rational(1)}};
  lp.AddRow("cover", {{0, Rational(2)}, {1, Rational(1)}}, Relation::kGreaterEqual,
            Rational(3));
  lp.AddRow("tie", {{0, Rational(1)}, {1, Rational(-1)}}, Relation::kEqual, Rational(0));
  const BasicSolution sol = Solve(lp);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.objective_value, Rational(2));
  EXPECT_EQ(sol.values[0], Rational(1));
  EXPECT_TRUE(VerifyVertex(lp, sol).ok());
}

TEST(SimplexTest, ReportsInfeasibleAndUnbounded) {
  RationalLP infeasible;
  infeasible.AddVariable("a", Rational(1));
  infeasible.AddRow("big", {{0, Rational(1)}}, Relation::kGreaterEqual, Rational(2));
  EXPECT_EQ(Solve(infeasible).status, SolveStatus::kInfeasible);

  RationalLP empty_row;
  empty_row.AddVariable("a", std::nullopt);
  empty_row.AddRow("neg", {}, Relation::kLessEqual, Rational(-1));
  EXPECT_EQ(Solve(empty_row).status, SolveStatus::kInfeasible);

  RationalLP unbounded;
  unbounded.AddVariable("a", std::nullopt);
  unbounded.AddVariable("b", std::nullopt);
  unbounded.objective = {{0, Rational(1)}};
  unbounded.AddRow("r", {{0, Rational(1)}, {1, Rational(-1)}}, Relation::kLessEqual,
                   Rational(1));
  EXPECT_EQ(Solve(unbounded).status, SolveStatus::kUnbounded);
}

TEST(SimplexTest, EmptyLpHasOptimumZero) {
  RationalLP lp;
  const BasicSolution sol = Solve(lp);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.objective_value, Rational(0));
  EXPECT_TRUE(VerifyVertex(lp, sol).ok());
}

TEST(SimplexTest, RejectsMalformedAndOversizedLps) {
  RationalLP bad;
  bad.AddVariable("a", std::nullopt);
  bad.AddRow("r", {{3, Rational(1)}}, Relation::kLessEqual, Rational(1));
  EXPECT_THROW(Solve(bad), InvalidArgumentError);

  RationalLP lp;
  for (int j = 0; j < 20; ++j) lp.AddVariable("x" + std::to_string(j), Rational(1));
  SolveOptions tiny;
  tiny.max_dictionary_entries = 10;
  EXPECT_THROW(Solve(lp, tiny), BudgetError);
}

TEST(SimplexTest, DegenerateVertexStillCertified) {
  // Three constraints meet at (1, 1) in the plane.
  RationalLP lp;
  lp.AddVariable("a", std::nullopt);
  lp.AddVariable("b", std::nullopt);
  lp.objective = {{0, Rational(1)}, {1, Rational(1)}};
  lp.AddRow("r1", {{0, Rational(1)}}, Relation::kLessEqual, Rational(1));
  lp.AddRow("r2", {{1, Rational(1)}}, Relation::kLessEqual, Rational(1));
  lp.AddRow("r3", {{0, Rational(1)}, {1, Rational(1)}}, Relation::kLessEqual, Rational(2));
  const BasicSolution sol = Solve(lp);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.objective_value, Rational(2));
  EXPECT_TRUE(VerifyVertex(lp, sol).ok());
  EXPECT_TRUE(IsVertex(lp, sol.values));
  EXPECT_FALSE(IsVertex(lp, {Rational(1, 2), Rational(1, 2)}));
}

TEST(SimplexTest, VerifyVertexFlagsBrokenCertificate) {
  RationalLP lp;
  lp.AddVariable("a", Rational(1));
  lp.objective = {{0, Rational(1)}};
  BasicSolution fake;
  fake.status = SolveStatus::kOptimal;
  fake.values = {Rational(1, 2)};
  fake.basis = {{TightConstraint::Kind::kUpperBound, 0}};
  const VertexReport report = VerifyVertex(lp, fake);
  EXPECT_TRUE(report.feasible);
  EXPECT_FALSE(report.basis_tight);
  EXPECT_FALSE(report.ok());
}

TEST(SimplexTest, AgreesWithVertexEnumerationOnRandomLps) {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> coef(-3, 4);
  std::uniform_int_distribution<int> size(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    RationalLP lp;
    const int n = size(rng);
    const int m = size(rng);
    lp.sense = trial % 3 == 0 ? Sense::kMinimize : Sense::kMaximize;
    for (int j = 0; j < n; ++j) {
      lp.AddVariable("x" + std::to_string(j), Rational(1 + trial % 3));
      lp.objective.emplace_back(j, Rational(coef(rng)));
    }
    for (int i = 0; i < m; ++i) {
      LinearTerms terms;
      for (int j = 0; j < n; ++j) {
        if (const int c = coef(rng); c != 0) terms.emplace_back(j, Rational(c));
      }
      const Relation rel = static_cast<Relation>(std::abs(coef(rng)) % 3);
      lp.AddRow("r" + std::to_string(i), terms, rel, Rational(coef(rng), 2));
    }
    const auto expected = BruteForceOptimum(lp);
    const BasicSolution sol = Solve(lp);
    if (!expected) {
      EXPECT_EQ(sol.status, SolveStatus::kInfeasible) << ExportLpText(lp);
      continue;
    }
    ASSERT_EQ(sol.status, SolveStatus::kOptimal) << ExportLpText(lp);
    EXPECT_EQ(sol.objective_value, *expected) << ExportLpText(lp);
    EXPECT_TRUE(VerifyVertex(lp, sol).ok()) << VerifyVertex(lp, sol).detail;
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(RankTest, DetectsDependence) {
  EXPECT_EQ(Rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), 1);
  EXPECT_EQ(Rank({{Rational(1), Rational(2)}, {Rational(0), Rational(1, 3)}}), 2);
  EXPECT_EQ(Rank({}), 0);
}

}  // namespace
}  // namespace colorlab
