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

#include <map>
#include <random>
#include <vector>

#include "colorlab/errors.h"
#include "colorlab/generators.h"
#include "colorlab/relaxations.h"
#include "gtest/gtest.h"

namespace colorlab {
namespace {

MomentVector Uniform(int n, const Rational& value, int psi) {
  MomentVector mv;
  mv.level = psi;
  mv.Set({}, Rational(1));
  for (int j = 0; j < n; ++j) mv.Set({j}, value);
  return mv;
}

// The lifted point for a moment vector, in BuildSaLift's variable order.
std::vector<Rational> LiftedPoint(const SaLift& lift, const MomentVector& mv) {
  std::vector<Rational> x;
  for (const IndexSet& s : lift.subsets) x.push_back(mv.Get(s));
  return x;
}

TEST(SaLiftTest, SingleVariableExpansion) {
  RationalLP lp;
  lp.AddVariable("x", Rational(1));
  lp.AddRow("r", {{0, Rational(1)}}, Relation::kLessEqual, Rational(1));
  bool saw_product = false;
  int rows = 0;
  ForEachLiftedRow(SaBaseRows(lp), 1, 1, [&](const LiftedConstraint& c) {
    ++rows;
    // (1 - x) x >= 0 linearizes to y_{0} - y_{0} >= 0.
    if (c.base_row == 0 && c.gamma == IndexSet{0}) {
      saw_product = true;
      EXPECT_TRUE(c.coeffs.empty());
    }
    return true;
  });
  EXPECT_TRUE(saw_product);
  EXPECT_EQ(rows, 3 * 3);  // 3 base rows x multipliers {(), G={0}, D={0}}
  const SaLift lift = BuildSaLift(lp, 1);
  EXPECT_EQ(lift.lp.num_variables(), 1);
  EXPECT_EQ(lift.lp.variables[0].name, "y{0}");
}

TEST(SaLiftTest, ExpansionMatchesHandComputation) {
  // For the row 1 - x0 - x1 >= 0:
  //   G = {0}:          x0 (1 - x0 - x1) = -x01
  //   D = {0}:          (1 - x0)(1 - x0 - x1) = 1 - x0 - x1 + x01
  //   G = {0}, D = {1}: x0 (1 - x1)(1 - x0 - x1) = 0
  RationalLP lp;
  lp.AddVariable("a", Rational(1));
  lp.AddVariable("b", Rational(1));
  lp.AddRow("deg", {{0, Rational(1)}, {1, Rational(1)}}, Relation::kLessEqual,
            Rational(1));
  using Coeffs = std::map<IndexSet, Rational>;
  int seen = 0;
  ForEachLiftedRow(SaBaseRows(lp), 2, 2, [&](const LiftedConstraint& c) {
    if (c.base_row != 0) return true;
    if (c.gamma == IndexSet{0} && c.delta.empty()) {
      EXPECT_EQ(c.coeffs, (Coeffs{{{0, 1}, Rational(-1)}}));
      ++seen;
    }
    if (c.gamma.empty() && c.delta == IndexSet{0}) {
      EXPECT_EQ(c.coeffs, (Coeffs{{{}, Rational(1)},
                                  {{0}, Rational(-1)},
                                  {{1}, Rational(-1)},
                                  {{0, 1}, Rational(1)}}));
      ++seen;
    }
    if (c.gamma == IndexSet{0} && c.delta == IndexSet{1}) {
      EXPECT_TRUE(c.coeffs.empty());
      ++seen;
    }
    return true;
  });
  EXPECT_EQ(seen, 3);
}

TEST(SaLiftTest, VariableCountAndBudget) {
  EXPECT_EQ(LiftedVariableCount(12, 2), 12 + 66 + 220);
  EXPECT_EQ(LiftedVariableCount(3, 5), 7);
  const RationalLP lp = BuildMc(GenHypercube(5, Rational(1, 100)));
  try {
    BuildSaLift(lp, 3);
    FAIL() << "expected a budget error";
  } catch (const BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find("1666980"), std::string::npos) << e.what();
  }
  SaOptions small;
  small.max_variables = 9;
  EXPECT_THROW(CheckExplicit(GenBichromaticC4(), Uniform(4, 0, 1), 1, small),
               BudgetError);
  EXPECT_THROW(BuildSaLift(lp, -1), InvalidArgumentError);
}

TEST(SaLiftTest, RejectsUnboundedVariables) {
  RationalLP lp;
  lp.AddVariable("x", std::nullopt);
  EXPECT_THROW(BuildSaLift(lp, 1), InvalidArgumentError);
}

TEST(SaLiftTest, LevelZeroIsTheBaseLp) {
  const RationalLP lp = BuildMc(GenExemplar(Exemplar::kRight));
  const SaOptimum opt = OptimizeLift(lp, 0, {});
  ASSERT_EQ(opt.status, SolveStatus::kOptimal);
  EXPECT_EQ(opt.value, Rational(5, 3));
}

TEST(SaLiftTest, RainbowFourCycleLevels) {
  const RationalLP lp = BuildMc(GenBichromaticC4());
  const SaOptimum l1 = OptimizeLift(lp, 1, {});
  const SaOptimum l2 = OptimizeLift(lp, 2, {});
  ASSERT_EQ(l2.status, SolveStatus::kOptimal);
  EXPECT_EQ(l1.value, Rational(4, 3));
  EXPECT_EQ(l2.value, Rational(1));
}

TEST(SaLiftTest, ValuesAreMonotoneAndProjectionsFeasible) {
  for (const ColoredInstance& inst :
       {GenBichromaticC4(), GenExemplar(Exemplar::kLeft), GenExemplar(Exemplar::kRight),
        GenBichromaticC4(Rational(99, 50)), GenCyclicLatin(1)}) {
    const RationalLP lp = BuildMc(inst);
    Rational previous(1000);
    for (int psi = 0; psi <= 3; ++psi) {
      const SaOptimum opt = OptimizeLift(lp, psi, {});
      ASSERT_EQ(opt.status, SolveStatus::kOptimal);
      EXPECT_LE(opt.value, previous);
      EXPECT_TRUE(FeasibilityViolations(lp, opt.projection).empty());
      previous = opt.value;
    }
  }
}

TEST(SaLiftTest, SimplificationKeepsTheFeasibleSet) {
  const RationalLP lp = BuildMc(GenExemplar(Exemplar::kRight));
  SaOptions raw;
  raw.simplify = false;
  for (int psi = 1; psi <= 2; ++psi) {
    const SaLift simple = BuildSaLift(lp, psi);
    const SaLift full = BuildSaLift(lp, psi, raw);
    EXPECT_LT(simple.lp.num_rows(), full.lp.num_rows());
    EXPECT_EQ(Solve(simple.lp).objective_value, Solve(full.lp).objective_value);
  }
}

TEST(CandidateTest, RhoFormula) {
  EXPECT_EQ(CandidateRho(3, 2, Rational(1, 100)), Rational(99, 398));
  EXPECT_EQ(CandidateRho(4, 1, Rational(1, 4)), Rational(3, 19));
  EXPECT_EQ(CandidateRho(3, 0, Rational(0)), Rational(1, 2));
  EXPECT_EQ(CandidateLimitValue(3, 0), Rational(6));
}

TEST(CandidateTest, ValueConvergesToLimit) {
  // value(eps) = ell 2^(ell-1) rho; the gap to the limit is exactly
  // ell 2^(ell-1) eps 2^(ell-2) / ((2^(ell-2)+psi)(2^(ell-2)+psi(1-eps))).
  for (int ell = 2; ell <= 6; ++ell) {
    for (int psi = 0; psi <= 3; ++psi) {
      const Rational q = PowerOfTwo(ell - 2);
      const Rational edges = Rational(ell) * PowerOfTwo(ell - 1);
      for (const Rational& eps : {Rational(1, 10), Rational(1, 1000), Rational(1, 1000000)}) {
        const Rational value = edges * CandidateRho(ell, psi, eps);
        const Rational gap = edges * eps * q /
                             ((q + Rational(psi)) * (q + Rational(psi) * (Rational(1) - eps)));
        EXPECT_EQ(CandidateLimitValue(ell, psi) - value, gap);
      }
    }
  }
}

TEST(CandidateTest, VectorOnHypercube) {
  const Candidate c = CandidateVector(GenHypercube(3, Rational(1, 100)), 2);
  EXPECT_EQ(c.ell, 3);
  EXPECT_EQ(c.eps, Rational(1, 100));
  EXPECT_EQ(c.rho, Rational(99, 398));
  EXPECT_EQ(c.value, Rational(12) * Rational(99, 398));
  EXPECT_EQ(c.mv.Get({}), Rational(1));
  EXPECT_EQ(c.mv.Get({5}), Rational(99, 398));
  EXPECT_TRUE(c.mv.IsSparse());
  EXPECT_THROW(CandidateVector(GenC4Chain(2), 1), InvalidArgumentError);
}

TEST(ClosedFormTest, ZeroVectorIsFeasible) {
  const ColoredInstance inst = GenHypercube(3, Rational(1, 100));
  for (int psi = 0; psi <= 3; ++psi) {
    EXPECT_TRUE(CheckClosedForm(inst, Uniform(12, 0, psi), psi).feasible);
  }
}

TEST(ClosedFormTest, DegreeWitness) {
  const ColoredInstance inst = GenHypercube(3, Rational(1, 100));
  const SaVerdict v = CheckClosedForm(inst, Uniform(12, Rational(51, 100), 1), 1);
  ASSERT_FALSE(v.feasible);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(v.witness->base_row.starts_with("deg:")) << v.witness->ToString();
  EXPECT_EQ(v.witness->value, Rational(1) - Rational(4) * Rational(51, 100));
  EXPECT_EQ(v.witness->delta.size(), 1u);
}

TEST(ClosedFormTest, RejectsDenseVectors) {
  MomentVector mv = Uniform(4, Rational(1, 4), 1);
  mv.Set({0, 2}, Rational(1, 8));
  EXPECT_THROW(CheckClosedForm(GenBichromaticC4(), mv, 1), InvalidArgumentError);
}

// At ell = 3 the candidate fails the degree rows: rho (ell + psi) > 1 for
// psi = 1, 2, 3, and even at level 0 (3 * 99/200 > 1).
TEST(ClosedFormTest, CandidateAtEllThreeViolatesDegreeRows) {
  const ColoredInstance inst = GenHypercube(3, Rational(1, 100));
  for (int psi = 0; psi <= 3; ++psi) {
    const Candidate c = CandidateVector(inst, psi);
    EXPECT_GT(c.rho * Rational(3 + psi), Rational(1));
    const SaVerdict closed = CheckClosedForm(inst, c.mv, psi);
    const SaVerdict explicit_check = CheckExplicit(inst, c.mv, psi);
    EXPECT_FALSE(closed.feasible);
    EXPECT_FALSE(explicit_check.feasible);
    EXPECT_TRUE(closed.witness->base_row.starts_with("deg:"));
  }
}

TEST(ClosedFormTest, CandidateAtEllFourIsFeasible) {
  const ColoredInstance inst = GenHypercube(4, Rational(1, 100));
  for (int psi = 1; psi <= 2; ++psi) {
    const Candidate c = CandidateVector(inst, psi);
    EXPECT_TRUE(CheckClosedForm(inst, c.mv, psi).feasible);
    EXPECT_TRUE(CheckExplicit(inst, c.mv, psi).feasible);
  }
}

TEST(CrossValidationTest, ClosedFormAgreesWithEnumeration) {
  std::mt19937_64 rng(7);
  const std::vector<Rational> palette = {Rational(0),    Rational(1, 10), Rational(1, 6),
                                         Rational(1, 4), Rational(1, 3),  Rational(99, 298),
                                         Rational(1, 2), Rational(1)};
  std::uniform_int_distribution<size_t> pick(0, palette.size() - 1);
  int feasible = 0, infeasible = 0;
  for (int ell = 2; ell <= 3; ++ell) {
    for (const Rational& eps : {Rational(1, 100), Rational(1, 4)}) {
      const ColoredInstance inst = GenHypercube(ell, eps);
      const RationalLP lp = BuildMc(inst);
      const int m = inst.num_edges();
      for (int psi = 1; psi <= 3; ++psi) {
        const SaLift lift = BuildSaLift(lp, psi);
        for (int trial = 0; trial < 24; ++trial) {
          MomentVector mv;
          if (trial < static_cast<int>(palette.size())) {
            mv = Uniform(m, palette[trial], psi);
          } else {
            mv = Uniform(m, 0, psi);
            for (int j = 0; j < m; ++j) {
              if (rng() % 2) mv.Set({j}, palette[pick(rng)]);
            }
          }
          const SaVerdict a = CheckClosedForm(lp, mv, psi);
          const SaVerdict b = CheckExplicit(lp, mv, psi);
          ASSERT_EQ(a.feasible, b.feasible)
              << "ell=" << ell << " psi=" << psi << " trial=" << trial
              << (a.witness ? " closed: " + a.witness->ToString() : "")
              << (b.witness ? " explicit: " + b.witness->ToString() : "");
          // Independent third path: the simplified lifted LP.
          EXPECT_EQ(FeasibilityViolations(lift.lp, LiftedPoint(lift, mv)).empty(), a.feasible);
          (a.feasible ? feasible : infeasible)++;
        }
      }
    }
  }
  EXPECT_GT(feasible, 10);
  EXPECT_GT(infeasible, 10);
}

TEST(CrossValidationTest, ViolationIsMonotoneInLevel) {
  const ColoredInstance inst = GenHypercube(3, Rational(1, 4));
  for (int k = 1; k <= 12; ++k) {
    const MomentVector mv = Uniform(12, Rational(k, 24), 0);
    for (int psi = 0; psi < 3; ++psi) {
      if (!CheckExplicit(inst, mv, psi).feasible) {
        EXPECT_FALSE(CheckExplicit(inst, mv, psi + 1).feasible) << k << " " << psi;
      }
    }
  }
}

TEST(ExplicitTest, AllOnesViolatesDegreeRows) {
  const ColoredInstance inst = GenHypercube(3, Rational(1, 100));
  const SaVerdict v = CheckExplicit(inst, Uniform(12, 1, 1), 1);
  ASSERT_FALSE(v.feasible);
  EXPECT_TRUE(v.witness->base_row.starts_with("deg:"));
}

TEST(ExplicitTest, IntegralMatchingsSurviveEveryLevel) {
  const ColoredInstance inst = GenHypercube(3, Rational(1, 100));
  // Edges 0 (d0 at 000), 6 (d1 at 100) and 11 (d2 at 011) form a colorful
  // matching.
  const std::vector<int> matching = {0, 6, 11};
  for (int psi = 0; psi <= 3; ++psi) {
    EXPECT_TRUE(CheckExplicit(inst, IntegralMoments(matching, 12, psi), psi).feasible);
  }
  const std::vector<int> clash = {0, 1, 2};
  EXPECT_FALSE(CheckExplicit(inst, IntegralMoments(clash, 12, 2), 2).feasible);
}

}  // namespace
}  // namespace colorlab
