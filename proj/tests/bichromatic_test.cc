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

#include "colorlab/bichromatic.h"

#include <map>
#include <set>

#include "colorlab/generators.h"
#include "colorlab/oracle.h"
#include "colorlab/relaxations.h"
#include "colorlab/simplex.h"
#include "gtest/gtest.h"

namespace colorlab {
namespace {

// Number of 4-edge subsets forming a connected 2-regular graph on 4
// vertices whose two color classes are its two perfect matchings.
int SubsetCycleCount(const ColoredInstance& inst) {
  const int m = inst.num_edges();
  int count = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        for (int d = c + 1; d < m; ++d) {
          std::map<VertexId, int> degree;
          std::map<ColorId, std::vector<int>> colors;
          for (int e : {a, b, c, d}) {
            ++degree[inst.edges[e].u];
            ++degree[inst.edges[e].v];
            colors[inst.edges[e].color].push_back(e);
          }
          if (degree.size() != 4 || colors.size() != 2) continue;
          bool regular = true;
          for (const auto& [v, k] : degree) regular = regular && k == 2;
          bool matchings = true;
          for (const auto& [col, es] : colors) {
            if (es.size() != 2) {
              matchings = false;
              continue;
            }
            const Edge& x = inst.edges[es[0]];
            const Edge& y = inst.edges[es[1]];
            matchings = matchings && x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v;
          }
          // Two disjoint perfect matchings of 4 vertices always form a C4.
          if (regular && matchings) ++count;
        }
      }
    }
  }
  return count;
}

Rational Optimum(const RationalLP& lp) {
  const BasicSolution sol = Solve(lp);
  EXPECT_EQ(sol.status, SolveStatus::kOptimal);
  return sol.objective_value;
}

TEST(EnumerateBcTest, FamilyCounts) {
  EXPECT_EQ(EnumerateBc(GenC4Chain(2)).size(), 2u);
  EXPECT_EQ(EnumerateBc(GenC4Chain(3)).size(), 3u);
  EXPECT_EQ(EnumerateBc(GenHypercube(2, Rational(1, 100))).size(), 1u);
  EXPECT_EQ(EnumerateBc(GenHypercube(3, Rational(1, 100))).size(), 6u);
  EXPECT_EQ(EnumerateBc(GenExemplar(Exemplar::kLeft)).size(), 0u);
  EXPECT_EQ(EnumerateBc(GenExemplar(Exemplar::kRight)).size(), 0u);
  EXPECT_EQ(EnumerateBc(GenBichromaticC4()).size(), 1u);
}

TEST(EnumerateBcTest, CanonicalForm) {
  const auto cycles = EnumerateBc(GenBichromaticC4());
  ASSERT_EQ(cycles.size(), 1u);
  const BiChromaticCycle& bc = cycles[0];
  EXPECT_EQ(bc.Name(), "a-b-c-d");
  EXPECT_EQ(bc.color_x, "x");
  EXPECT_EQ(bc.color_y, "y");
  const ColoredInstance inst = GenBichromaticC4();
  for (int i = 0; i < 4; ++i) {
    const Edge& e = inst.edges[bc.edges[i]];
    const std::set<VertexId> ends = {e.u, e.v};
    EXPECT_EQ(ends, (std::set<VertexId>{bc.vertices[i], bc.vertices[(i + 1) % 4]}));
    EXPECT_EQ(e.color, i % 2 == 0 ? bc.color_x : bc.color_y);
  }
}

TEST(EnumerateBcTest, AgreesWithSubsetEnumeration) {
  std::vector<ColoredInstance> fixtures = {GenC4Chain(2), GenHypercube(3, Rational(1, 100)),
                                           GenCyclicLatin(2), GenExemplar(Exemplar::kRight)};
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    fixtures.push_back(RandomRainbowInstance(seed, {6, 10, 2}));
  }
  int with_cycles = 0;
  for (const ColoredInstance& inst : fixtures) {
    const auto cycles = EnumerateBc(inst);
    ASSERT_EQ(static_cast<int>(cycles.size()), SubsetCycleCount(inst));
    with_cycles += !cycles.empty();
    std::set<std::string> names;
    for (const auto& bc : cycles) {
      EXPECT_TRUE(names.insert(bc.Name()).second);
      EXPECT_LT(bc.vertices[0], bc.vertices[1]);
      EXPECT_LT(bc.vertices[0], bc.vertices[2]);
      EXPECT_LT(bc.vertices[1], bc.vertices[3]);
    }
  }
  EXPECT_GT(with_cycles, 10);
}

TEST(EnhancedLpTest, Optima) {
  EXPECT_EQ(Optimum(EnhancedLp(GenBichromaticC4())), Rational(1));
  EXPECT_EQ(Optimum(EnhancedLp(GenC4Chain(2))), Rational(3));
  EXPECT_EQ(Optimum(EnhancedLp(GenExemplar(Exemplar::kLeft))), Rational(3, 2));
}

TEST(EnhancedLpTest, NoCyclesMeansSameLp) {
  const ColoredInstance inst = GenExemplar(Exemplar::kRight);
  EXPECT_EQ(ExportLpText(EnhancedLp(inst)), ExportLpText(BuildMc(inst)));
}

TEST(EnhancedLpTest, RowNames) {
  const RationalLP lp = EnhancedLp(GenBichromaticC4());
  EXPECT_EQ(lp.rows.back().name, "bc:a-b-c-d");
  EXPECT_EQ(lp.rows.back().rhs, Rational(1));
}

TEST(EnhancedLpTest, TightensAndStaysWithinRatio) {
  std::vector<ColoredInstance> fixtures = {GenC4Chain(2), GenC4Chain(3), GenCyclicLatin(2),
                                           GenExemplar(Exemplar::kLeft),
                                           GenExemplar(Exemplar::kRight)};
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    fixtures.push_back(RandomRainbowInstance(seed, {7, 10, 3}));
  }
  for (const ColoredInstance& inst : fixtures) {
    const Rational cut = Optimum(EnhancedLp(inst));
    EXPECT_LE(cut, Optimum(BuildMc(inst)));
    const Rational ilp(MaxColorfulMatching(inst).size);
    EXPECT_GE(cut, ilp);
    const Rational limit = IsBipartiteGraph(inst) ? Rational(3, 2) + Rational(1, 100)
                                                  : Rational(5, 3) + Rational(1, 100);
    EXPECT_LE(cut, limit * ilp);
  }
}

TEST(Sa2ImpliesBcTest, RainbowFourCycle) {
  const ColoredInstance inst = GenBichromaticC4();
  const Sa2Report r = Sa2ImpliesBc(inst, EnumerateBc(inst)[0]);
  EXPECT_EQ(r.max_value, Rational(1));
  EXPECT_TRUE(r.unit_bound_cycle);
  ASSERT_TRUE(r.implied.has_value());
  EXPECT_TRUE(*r.implied);
  ASSERT_EQ(r.forcing.size(), 6u);
  for (const ForcingRow& f : r.forcing) EXPECT_FALSE(f.row.empty());
  EXPECT_TRUE(r.algebra_confirmed);
  EXPECT_GT(r.lifted_variables, 0);
}

TEST(Sa2ImpliesBcTest, FractionalBoundsOutsideScope) {
  const ColoredInstance inst = GenBichromaticC4(Rational(99, 50));
  const Sa2Report r = Sa2ImpliesBc(inst, EnumerateBc(inst)[0]);
  EXPECT_FALSE(r.unit_bound_cycle);
  EXPECT_FALSE(r.implied.has_value());
  EXPECT_EQ(r.max_value, Rational(1));
  // Degree rows still force the adjacent products, color rows with bound
  // 99/50 do not force the same-colored ones.
  ASSERT_EQ(r.forcing.size(), 6u);
  EXPECT_TRUE(r.forcing[0].row.empty());
  EXPECT_TRUE(r.forcing[1].row.empty());
  for (int i = 2; i < 6; ++i) EXPECT_FALSE(r.forcing[i].row.empty()) << i;
  EXPECT_FALSE(r.algebra_confirmed);
}

}  // namespace
}  // namespace colorlab
