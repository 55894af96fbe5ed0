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

#include "colorlab/acceptance.h"

#include <chrono>
#include <cstdio>
#include <functional>

#include "colorlab/bichromatic.h"
#include "colorlab/dual_certificate.h"
#include "colorlab/errors.h"
#include "colorlab/generators.h"
#include "colorlab/oracle.h"
#include "colorlab/relaxations.h"
#include "colorlab/sherali_adams.h"
#include "colorlab/simplex.h"

namespace colorlab {
namespace {

// Collects measured values and failed checks of one criterion.
class Checks {
 public:
  void Note(const std::string& text) { notes_.push_back(text); }
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string Detail() const {
    std::string out;
    for (const std::string& n : notes_) out += (out.empty() ? "" : ", ") + n;
    for (const std::string& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
};

std::string S(const Rational& r) { return r.ToString(); }

Rational LpOptimum(const RationalLP& lp) {
  const BasicSolution sol = Solve(lp);
  if (sol.status != SolveStatus::kOptimal) {
    throw DiagnosticError("LP is " + ToString(sol.status));
  }
  if (!VerifyVertex(lp, sol).ok()) throw DiagnosticError("optimum failed vertex re-check");
  return sol.objective_value;
}

Rational McOptimum(const ColoredInstance& inst) { return LpOptimum(BuildMc(inst)); }

int Ilp(const ColoredInstance& inst) { return MaxColorfulMatching(inst).size; }

void HypercubeGap(Checks& c) {
  const Rational eps(1, 100);
  const ColoredInstance inst = GenHypercube(3, eps);
  const Rational lp = McOptimum(inst);
  const Rational expected =
      Rational(12) * Min(Rational(1, 3), (Rational(1) - eps) * Rational(1, 2));
  const int ilp = Ilp(inst);
  const Rational gap = lp / Rational(ilp);
  c.Note("LP " + S(lp) + " (formula " + S(expected) + ")");
  c.Note("ILP " + std::to_string(ilp));
  c.Note("gap " + S(gap));
  c.Expect(lp == expected, "LP differs from 12 min(1/3, (1-eps)/2)");
  c.Expect(ilp == 3, "ILP is not 3");
  c.Expect(gap >= Rational(19, 10), "gap " + S(gap) + " < 19/10");
}

void HypercubeCandidate(Checks& c) {
  const ColoredInstance inst = GenHypercube(3, Rational(1, 100));
  for (int psi : {1, 2, 3}) {
    const Candidate cand = CandidateVector(inst, psi);
    const SaVerdict closed = CheckClosedForm(inst, cand.mv, psi);
    const SaVerdict expl = CheckExplicit(inst, cand.mv, psi);
    const std::string tag = "psi=" + std::to_string(psi);
    c.Note(tag + " rho " + S(cand.rho) + " closed-form " +
           (closed.feasible ? "feasible" : "infeasible") + " explicit " +
           (expl.feasible ? "feasible" : "infeasible"));
    c.Expect(closed.feasible == expl.feasible, tag + " checkers disagree");
    if (!closed.feasible) {
      c.Expect(false, tag + " closed-form witness " + closed.witness->ToString());
    }
    if (!expl.feasible) {
      c.Expect(false, tag + " explicit witness " + expl.witness->ToString());
    }
  }
}

void ChainFamily(Checks& c) {
  for (int k : {2, 3}) {
    const ColoredInstance inst = GenC4Chain(k);
    const Rational lp = McOptimum(inst);
    const int ilp = Ilp(inst);
    c.Note("k=" + std::to_string(k) + " LP " + S(lp) + " ILP " + std::to_string(ilp));
    c.Expect(lp == Rational(2 * k), "k=" + std::to_string(k) + " LP is not 2k");
    c.Expect(ilp == k + 1, "k=" + std::to_string(k) + " ILP is not k+1");
  }
  const ColoredInstance chain2 = GenC4Chain(2);
  const RationalLP mc = BuildMc(chain2);
  const SaOptimum lifted = OptimizeLift(mc, 2, {});
  const Rational enhanced = LpOptimum(EnhancedLp(chain2));
  c.Note("k=2 level-2 " + S(lifted.value) + " enhanced " + S(enhanced));
  c.Expect(lifted.status == SolveStatus::kOptimal && lifted.value == Rational(3),
           "k=2 level-2 optimum is not 3");
  c.Expect(enhanced == lifted.value, "enhanced LP differs from level-2 optimum");
}

void CyclicFamily(Checks& c) {
  const GapReport r = MakeGapReport(GenCyclicLatin(2), {});
  c.Note("k=4 LP " + S(r.lp_value) + " ILP " + S(r.ilp_value) + " gap " + S(r.gap));
  c.Expect(r.lp_value == Rational(4) && r.ilp_value == Rational(3) &&
               r.gap == Rational(4, 3),
           "k=4 values differ from LP 4, ILP 3, gap 4/3");
  std::string none, some;
  for (int k : {2, 4, 6}) {
    const bool has = LatinTransversal(CyclicLatinSquare(k)).has_value();
    c.Expect(!has, "order " + std::to_string(k) + " has a transversal");
    none += (none.empty() ? "" : ",") + std::to_string(k);
  }
  for (int k : {3, 5}) {
    const bool has = LatinTransversal(CyclicLatinSquare(k)).has_value();
    c.Expect(has, "order " + std::to_string(k) + " has no transversal");
    const LatinSquare t = CyclicLatinSquare(k);
    std::vector<char> right(k, 0), colors(k, 0);
    bool ryser = true;
    for (const RyserEdge& e : RyserMatching(k)) {
      ryser = ryser && !right[e.u]++ && !colors[e.color]++ && t[e.v][e.u] == e.color;
    }
    c.Expect(ryser, "Ryser matching of order " + std::to_string(k) + " is not colorful");
    some += (some.empty() ? "" : ",") + std::to_string(k);
  }
  c.Note("no transversal at " + none + ", transversal and Ryser matching at " + some);
}

void Exemplars(Checks& c) {
  const Rational left = McOptimum(GenExemplar(Exemplar::kLeft));
  const Rational right = McOptimum(GenExemplar(Exemplar::kRight));
  c.Note("left " + S(left) + ", right " + S(right));
  c.Expect(left == Rational(3, 2), "left optimum is not 3/2");
  c.Expect(right == Rational(5, 3), "right optimum is not 5/3");
}

void Certificates(Checks& c) {
  std::vector<std::pair<std::string, ColoredInstance>> fixtures = {
      {"cyclic k=2", GenCyclicLatin(1)},
      {"cyclic k=4", GenCyclicLatin(2)},
      {"rainbow C4", GenBichromaticC4()},
      {"exemplar left", GenExemplar(Exemplar::kLeft)},
      {"exemplar right", GenExemplar(Exemplar::kRight)},
      {"chain k=2", GenC4Chain(2)}};
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    fixtures.emplace_back("random seed " + std::to_string(seed), RandomRainbowInstance(seed));
  }
  int passed = 0, exact = 0;
  for (const auto& [name, inst] : fixtures) {
    const Hypergraph3 h = ToHypergraph(inst);
    const BasicSolution sol = Solve(BuildHm(h));
    CertificateOptions options;
    options.bipartite = IsBipartiteHypergraph(h);
    const DualCertificate cert = BuildCertificate(h, sol, options);
    const CertificateReport report = VerifyCertificate(h, cert, McOptimum(inst));
    if (report.ok()) ++passed;
    if (cert.cover_source == "exact-dual") ++exact;
    for (const CertificateCheck& check : report.checks) {
      c.Expect(check.passed, name + " " + check.name + ": " + check.witness);
    }
  }
  c.Note(std::to_string(passed) + "/" + std::to_string(fixtures.size()) +
         " certificates verified");
  c.Note(std::to_string(exact) + " replaced by the exact cover of H");
}

void CycleCuts(Checks& c) {
  const ColoredInstance rainbow = GenBichromaticC4();
  const ColoredInstance chain = GenC4Chain(2);
  std::vector<std::pair<const ColoredInstance*, BiChromaticCycle>> cycles;
  for (const auto& bc : EnumerateBc(rainbow)) cycles.emplace_back(&rainbow, bc);
  for (const auto& bc : EnumerateBc(chain)) cycles.emplace_back(&chain, bc);
  c.Expect(cycles.size() == 3, "expected 1 + 2 cycles, found " + std::to_string(cycles.size()));
  for (const auto& [inst, bc] : cycles) {
    const Sa2Report r = Sa2ImpliesBc(*inst, bc);
    const std::string tag = (inst == &rainbow ? "rainbow " : "chain ") + bc.Name();
    c.Note(tag + " " + S(r.max_value));
    c.Expect(r.max_value == Rational(1), tag + " level-2 maximum is not 1");
  }
}

void Properties(Checks& c) {
  std::vector<ColoredInstance> fixtures = {
      GenBichromaticC4(), GenExemplar(Exemplar::kLeft), GenExemplar(Exemplar::kRight),
      GenCyclicLatin(1), GenCyclicLatin(2), GenC4Chain(2), GenC4Chain(3)};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    fixtures.push_back(RandomRainbowInstance(seed));
  }
  int duality = 0, sparsity = 0, greedy = 0;
  for (const ColoredInstance& inst : fixtures) {
    const Hypergraph3 h = ToHypergraph(inst);
    const BasicSolution primal = Solve(BuildHm(h));
    const Rational dual = LpOptimum(BuildDual(h));
    c.Expect(primal.objective_value == dual, "primal " + S(primal.objective_value) +
                                                 " != dual " + S(dual));
    ++duality;
    EdgeSet support;
    for (int e = 0; e < h.num_edges(); ++e) {
      if (primal.values[e].sign() > 0 && primal.values[e] < Rational(1)) support.push_back(e);
    }
    if (!support.empty()) {
      try {
        LowDegreeVertex(h, support);
      } catch (const DiagnosticError& e) {
        c.Expect(false, e.what());
      }
      ++sparsity;
    }
    const int ilp = Ilp(inst);
    c.Expect(3 * GreedyColorfulMatching(inst).size >= ilp, "greedy below ILP/3");
    ++greedy;
  }
  std::vector<ColoredInstance> lifted = {GenBichromaticC4(), GenBichromaticC4(Rational(99, 50)),
                                         GenExemplar(Exemplar::kLeft),
                                         GenExemplar(Exemplar::kRight),
                                         GenHypercube(2, Rational(1, 100)), GenCyclicLatin(1)};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    lifted.push_back(RandomRainbowInstance(seed, {6, 6, 3}));
  }
  for (const ColoredInstance& inst : lifted) {
    const RationalLP lp = BuildMc(inst);
    Rational previous = LpOptimum(lp);
    for (int psi : {1, 2}) {
      const Rational v = OptimizeLift(lp, psi, {}).value;
      c.Expect(v <= previous, "SA level " + std::to_string(psi) + " value " + S(v) +
                                  " exceeds level " + std::to_string(psi - 1));
      previous = v;
    }
  }
  c.Note(std::to_string(duality) + " primal/dual pairs");
  c.Note(std::to_string(lifted.size()) + " SA chains");
  c.Note(std::to_string(sparsity) + " fractional supports");
  c.Note(std::to_string(greedy) + " greedy checks");
}

struct Spec {
  const char* title;
  double limit_seconds;
  std::function<void(Checks&)> run;
};

const std::vector<Spec>& Specs() {
  static const std::vector<Spec> specs = {
      {"hypercube l=3 gap", 5, HypercubeGap},
      {"hypercube l=3 candidate at levels 1-3", 120, HypercubeCandidate},
      {"chain family", 600, ChainFamily},
      {"cyclic Latin family", 60, CyclicFamily},
      {"exemplar optima", 1, Exemplars},
      {"dual certificates", 600, Certificates},
      {"level 2 implies cycle cuts", 60, CycleCuts},
      {"property suites", 600, Properties},
  };
  return specs;
}

}  // namespace

CriterionResult RunCriterion(int id) {
  if (id < 1 || id > kNumCriteria) {
    throw InvalidArgumentError("criterion must be in 1.." + std::to_string(kNumCriteria));
  }
  const Spec& spec = Specs()[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = spec.title;
  result.limit_seconds = spec.limit_seconds;
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(checks);
  } catch (const std::exception& e) {
    checks.Expect(false, std::string("error: ") + e.what());
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  checks.Expect(result.seconds < result.limit_seconds, "time limit exceeded");
  result.passed = checks.ok();
  result.detail = checks.Detail();
  return result;
}

std::vector<CriterionResult> RunAcceptance(const std::vector<int>& ids,
                                           std::ostream* progress) {
  std::vector<int> todo = ids;
  if (todo.empty()) {
    for (int i = 1; i <= kNumCriteria; ++i) todo.push_back(i);
  }
  std::vector<CriterionResult> out;
  for (int id : todo) {
    out.push_back(RunCriterion(id));
    if (progress) *progress << FormatCriterion(out.back()) << std::endl;
  }
  return out;
}

std::string FormatCriterion(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof(timing), " [%.1f s of %g s]", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.title +
         ": " + r.detail + timing;
}

Json AcceptanceToJson(const std::vector<CriterionResult>& results) {
  Json out = Json::array();
  for (const CriterionResult& r : results) {
    Json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    j["limit_seconds"] = r.limit_seconds;
    out.push_back(j);
  }
  return out;
}

}  // namespace colorlab
