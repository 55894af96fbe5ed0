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

#include "colorlab/dual_certificate.h"

#include <set>

#include "colorlab/bichromatic.h"
#include "colorlab/errors.h"
#include "colorlab/generators.h"
#include "colorlab/oracle.h"
#include "colorlab/relaxations.h"
#include "gtest/gtest.h"

namespace colorlab {
namespace {

EdgeSet All(const Hypergraph3& h) {
  EdgeSet s;
  for (int e = 0; e < h.num_edges(); ++e) s.push_back(e);
  return s;
}

// Maximum number of pairwise disjoint cycles found by EnumerateBc on the
// graph, each cycle occupying its four vertices and its two colors. Bitmask
// enumeration, so only for a handful of cycles.
int CyclePackingOracle(const ColoredInstance& inst) {
  const auto cycles = EnumerateBc(inst);
  const int n = static_cast<int>(cycles.size());
  EXPECT_LE(n, 16);
  int best = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::set<std::string> used;
    bool ok = true;
    int count = 0;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ++count;
      std::vector<std::string> items(cycles[i].vertices.begin(), cycles[i].vertices.end());
      items.push_back("color:" + cycles[i].color_x);
      items.push_back("color:" + cycles[i].color_y);
      for (const std::string& x : items) ok = ok && used.insert(x).second;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

BasicSolution SolveHm(const Hypergraph3& h) {
  const BasicSolution sol = Solve(BuildHm(h));
  EXPECT_EQ(sol.status, SolveStatus::kOptimal);
  return sol;
}

DualCertificate Certify(const ColoredInstance& inst) {
  const Hypergraph3 h = ToHypergraph(inst);
  CertificateOptions options;
  options.bipartite = IsBipartiteHypergraph(h);
  return BuildCertificate(h, SolveHm(h), options);
}

std::vector<ColoredInstance> Families() {
  return {GenCyclicLatin(1), GenCyclicLatin(2), GenBichromaticC4(),
          GenExemplar(Exemplar::kLeft), GenExemplar(Exemplar::kRight), GenC4Chain(2)};
}

TEST(MuOracleTest, Examples) {
  EXPECT_EQ(MuOracle(ToHypergraph(GenCyclicLatin(2))), 3);
  EXPECT_EQ(MuOracle(ToHypergraph(GenC4Chain(2))), 3);
  EXPECT_EQ(MuOracle(ToHypergraph(GenBichromaticC4())), 1);
  EXPECT_EQ(MuOracle(ToHypergraph(GenCyclicLatin(3))), 5);
}

TEST(MuOracleTest, AgreesWithColorfulMatchingSearch) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const ColoredInstance inst = RandomRainbowInstance(seed);
    ASSERT_EQ(MuOracle(ToHypergraph(inst)), MaxColorfulMatching(inst).size) << seed;
  }
}

TEST(MuOracleTest, ColorCopiesCountSeparately) {
  // Bound 2 expands color x into two vertices, so both x edges fit.
  const ColoredInstance inst = GenBichromaticC4(Rational(2));
  EXPECT_EQ(MuOracle(ToHypergraph(inst)), 2);
  EXPECT_EQ(MaxColorfulMatching(inst).size, 2);
}

TEST(MuOracleTest, Limits) {
  const Hypergraph3 h = ToHypergraph(GenCyclicLatin(2));
  OracleLimits limits;
  limits.max_edges = 10;
  EXPECT_THROW(MuOracle(h, limits), BudgetError);
  limits.max_edges = 200;
  limits.max_nodes = 2;
  EXPECT_THROW(MuOracle(h, limits), BudgetError);
}

TEST(IsBcTest, Examples) {
  const Hypergraph3 bc = ToHypergraph(GenBichromaticC4());
  EXPECT_TRUE(IsBc(bc, All(bc)));
  EXPECT_FALSE(IsBc(bc, {0, 1, 2}));
  const Hypergraph3 left = ToHypergraph(GenExemplar(Exemplar::kLeft));
  EXPECT_FALSE(IsBc(left, All(left)));

  ColoredInstance path;
  path.vertices = {"a", "b", "c", "d", "e"};
  path.edges = {{"a", "b", "r"}, {"b", "c", "r"}, {"c", "d", "r"}, {"d", "e", "r"}};
  path.bounds = {{"r", Rational(1)}};
  const Hypergraph3 mono = ToHypergraph(path);
  EXPECT_FALSE(IsBc(mono, All(mono)));
}

TEST(IsBcTest, RejectsTwoCopiesOfOneColor) {
  // With bound 2 the x edges sit on different color vertices.
  const Hypergraph3 h = ToHypergraph(GenBichromaticC4(Rational(2)));
  EXPECT_FALSE(IsBc(h, All(h)));
}

TEST(QOracleTest, Examples) {
  EXPECT_EQ(QOracle(GenC4Chain(2)), 2);
  EXPECT_EQ(QOracle(GenC4Chain(3)), 3);
  EXPECT_EQ(QOracle(GenBichromaticC4()), 1);
  EXPECT_EQ(QOracle(GenExemplar(Exemplar::kLeft)), 0);
  const Hypergraph3 h = ToHypergraph(GenC4Chain(2));
  EXPECT_EQ(FindBcCopies(h, All(h)).size(), 2u);
}

TEST(QOracleTest, AgreesWithGraphCycles) {
  std::vector<ColoredInstance> fixtures = Families();
  fixtures.push_back(GenC4Chain(3));
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    fixtures.push_back(RandomRainbowInstance(seed, {6, 10, 3}));
  }
  for (const ColoredInstance& inst : fixtures) {
    const Hypergraph3 h = ToHypergraph(inst);
    ASSERT_EQ(FindBcCopies(h, All(h)).size(), EnumerateBc(inst).size());
    ASSERT_EQ(QOracle(inst), CyclePackingOracle(inst));
  }
}

TEST(LowDegreeVertexTest, Examples) {
  const Hypergraph3 bc = ToHypergraph(GenBichromaticC4());
  const LowDegree ld = LowDegreeVertex(bc, All(bc));
  EXPECT_EQ(ld.vertex, 0);
  EXPECT_EQ(ld.edges.size(), 2u);

  const Hypergraph3 one = ToHypergraph(GenExemplar(Exemplar::kLeft));
  const LowDegree single = LowDegreeVertex(one, {1});
  EXPECT_EQ(single.edges, std::vector<int>{1});
  EXPECT_TRUE(one.hyperedges[1].Contains(single.vertex));

  EXPECT_THROW(LowDegreeVertex(bc, {}), DiagnosticError);
}

TEST(LowDegreeVertexTest, PrefersDegreeTwo) {
  // Path a-b-c with two colors: only b has degree 2.
  ColoredInstance inst;
  inst.vertices = {"a", "b", "c"};
  inst.edges = {{"a", "b", "r"}, {"b", "c", "s"}};
  inst.bounds = {{"r", Rational(1)}, {"s", Rational(1)}};
  const Hypergraph3 h = ToHypergraph(inst);
  const LowDegree ld = LowDegreeVertex(h, All(h));
  EXPECT_EQ(h.vertex_ids[ld.vertex], "b");
}

TEST(LowDegreeVertexTest, FractionalBasicOptimaHaveOne) {
  std::vector<ColoredInstance> fixtures = Families();
  fixtures.push_back(GenC4Chain(3));
  fixtures.push_back(GenCyclicLatin(3));
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    fixtures.push_back(RandomRainbowInstance(seed));
  }
  int fractional = 0;
  for (const ColoredInstance& inst : fixtures) {
    const Hypergraph3 h = ToHypergraph(inst);
    const BasicSolution sol = SolveHm(h);
    EdgeSet support;
    for (int e = 0; e < h.num_edges(); ++e) {
      if (sol.values[e].sign() > 0 && sol.values[e] < Rational(1)) support.push_back(e);
    }
    if (support.empty()) continue;
    ++fractional;
    const LowDegree ld = LowDegreeVertex(h, support);
    EXPECT_GE(ld.edges.size(), 1u);
    EXPECT_LE(ld.edges.size(), 2u);
  }
  EXPECT_GT(fractional, 20);
}

TEST(BuildCertificateTest, AlternatingCycle) {
  const Hypergraph3 h = ToHypergraph(GenBichromaticC4());
  const BasicSolution sol = SolveHm(h);
  for (const Rational& x : sol.values) EXPECT_EQ(x, Rational(1, 2));
  const DualCertificate cert = BuildCertificate(h, sol);
  EXPECT_EQ(cert.value, Rational(2));
  EXPECT_EQ(cert.mu, 1);
  EXPECT_EQ(cert.q, 1);
  EXPECT_EQ(GeneralBound(cert.mu, cert.q), Rational(2));
  ASSERT_EQ(cert.trace.size(), 1u);
  EXPECT_EQ(cert.trace[0].kind, "base-bc");
  const CertificateReport report = VerifyCertificate(h, cert, sol.objective_value);
  ASSERT_EQ(report.checks.size(), 4u);
  EXPECT_TRUE(report.ok());
}

TEST(BuildCertificateTest, LeftExemplarBipartite) {
  const DualCertificate cert = Certify(GenExemplar(Exemplar::kLeft));
  EXPECT_TRUE(cert.bipartite);
  EXPECT_EQ(cert.value, Rational(3, 2));
  EXPECT_EQ(cert.mu, 1);
  EXPECT_EQ(cert.q, 0);
  EXPECT_EQ(cert.trace.back().kind, "base-lp");
  ASSERT_TRUE(cert.trace.back().base_bound_ok.has_value());
  EXPECT_TRUE(*cert.trace.back().base_bound_ok);
}

TEST(BuildCertificateTest, SingleEdge) {
  ColoredInstance inst;
  inst.vertices = {"a", "b"};
  inst.edges = {{"a", "b", "r"}};
  inst.bounds = {{"r", Rational(1)}};
  const DualCertificate cert = Certify(inst);
  EXPECT_EQ(cert.value, Rational(1));
  EXPECT_EQ(cert.peeled, 1);
  EXPECT_LE(cert.value, GeneralBound(1, 0));
}

TEST(BuildCertificateTest, RejectsUnverifiedSolution) {
  const Hypergraph3 h = ToHypergraph(GenBichromaticC4());
  BasicSolution sol = SolveHm(h);
  sol.basis.clear();
  EXPECT_THROW(BuildCertificate(h, sol), InvalidArgumentError);
}

TEST(BuildCertificateTest, ChainOfTwo) {
  const DualCertificate cert = Certify(GenC4Chain(2));
  EXPECT_EQ(cert.mu, 3);
  EXPECT_EQ(cert.q, 2);
  EXPECT_EQ(cert.recursion_value, Rational(4));
  EXPECT_LE(cert.value, GeneralBound(3, 2));
}

// The sandwich LP <= value <= bound on every family with unit bounds and on
// 300 random rainbow instances, plus the per-step records.
TEST(BuildCertificateTest, SandwichOnFamiliesAndRandomInstances) {
  std::vector<ColoredInstance> fixtures = Families();
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    fixtures.push_back(RandomRainbowInstance(seed));
  }
  int steps = 0;
  for (const ColoredInstance& inst : fixtures) {
    const Hypergraph3 h = ToHypergraph(inst);
    const BasicSolution sol = SolveHm(h);
    CertificateOptions options;
    options.bipartite = IsBipartiteHypergraph(h);
    const DualCertificate cert = BuildCertificate(h, sol, options);
    const CertificateReport report = VerifyCertificate(h, cert, sol.objective_value);
    for (const CertificateCheck& c : report.checks) {
      EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
    }
    const Rational bound = options.bipartite ? BipartiteBound(cert.mu, cert.q)
                                             : GeneralBound(cert.mu, cert.q);
    EXPECT_GE(cert.recursion_value, sol.objective_value);
    EXPECT_LE(cert.recursion_value, bound);
    EXPECT_LE(cert.value, cert.recursion_value + cert.completion_value);
    for (const CertificateStep& step : cert.trace) {
      ++steps;
      EXPECT_TRUE(step.covered) << step.kind;
      EXPECT_TRUE(step.within_bound) << step.kind;
      EXPECT_NE(step.base_bound_ok, std::optional<bool>(false));
      EXPECT_NE(step.q_drop_ok, std::optional<bool>(false));
    }
  }
  EXPECT_GT(steps, 100);
}

// x restricted to H(e_i) need not stay a vertex: on the order-4 cyclic
// instance the first split leaves two hyperedges through v0 at 1/2 each,
// where only the v0 row is tight.
TEST(BuildCertificateTest, RestrictionCanLoseBasicness) {
  const Hypergraph3 h = ToHypergraph(GenCyclicLatin(2));
  const DualCertificate cert = BuildCertificate(h, SolveHm(h));
  bool lost = false;
  for (const CertificateStep& step : cert.trace) {
    for (bool b : step.restriction_basic) lost = lost || !b;
  }
  EXPECT_TRUE(lost);

  Hypergraph3 two;
  two.vertex_ids = {"a", "b", "c", "color:r", "color:s"};
  two.num_graph_vertices = 3;
  two.hyperedges.resize(2);
  two.hyperedges[0].u = 0;
  two.hyperedges[0].v = 1;
  two.hyperedges[0].c = 3;
  two.hyperedges[1].u = 0;
  two.hyperedges[1].v = 2;
  two.hyperedges[1].c = 4;
  const std::vector<Rational> half = {Rational(1, 2), Rational(1, 2)};
  EXPECT_TRUE(FeasibilityViolations(BuildHm(two), half).empty());
  EXPECT_FALSE(IsVertex(BuildHm(two), half));
}

TEST(VerifyCertificateTest, ReportsFailures) {
  const Hypergraph3 h = ToHypergraph(GenBichromaticC4());
  const BasicSolution sol = SolveHm(h);
  DualCertificate cert = BuildCertificate(h, sol);

  DualCertificate zero = cert;
  std::fill(zero.weights.begin(), zero.weights.end(), Rational(0));
  CertificateReport r = VerifyCertificate(h, zero, sol.objective_value);
  EXPECT_FALSE(r.checks[0].passed);
  EXPECT_EQ(r.checks[0].name, "coverage");
  EXPECT_NE(r.checks[0].witness.find("hyperedge 0"), std::string::npos);

  r = VerifyCertificate(h, cert, Rational(3));
  EXPECT_FALSE(r.checks[2].passed);
  EXPECT_EQ(r.checks[2].name, "weak-duality");

  DualCertificate negative = cert;
  negative.weights[0] = Rational(-1);
  r = VerifyCertificate(h, negative, sol.objective_value);
  EXPECT_FALSE(r.checks[1].passed);

  DualCertificate heavy = cert;
  heavy.weights[0] += Rational(1);
  r = VerifyCertificate(h, heavy, sol.objective_value);
  EXPECT_FALSE(r.checks[3].passed);
  EXPECT_FALSE(r.ok());
}

}  // namespace
}  // namespace colorlab
