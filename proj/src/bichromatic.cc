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

#include <algorithm>
#include <map>
#include <set>

#include "colorlab/relaxations.h"

namespace colorlab {

std::string BiChromaticCycle::Name() const {
  return vertices[0] + "-" + vertices[1] + "-" + vertices[2] + "-" + vertices[3];
}

std::vector<BiChromaticCycle> EnumerateBc(const ColoredInstance& inst) {
  std::map<VertexId, std::map<VertexId, int>> adj;  // neighbor -> edge index
  for (int i = 0; i < inst.num_edges(); ++i) {
    adj[inst.edges[i].u][inst.edges[i].v] = i;
    adj[inst.edges[i].v][inst.edges[i].u] = i;
  }
  auto color = [&](int e) -> const ColorId& { return inst.edges[e].color; };
  std::vector<BiChromaticCycle> out;
  for (const auto& [a, na] : adj) {
    for (auto ib = na.upper_bound(a); ib != na.end(); ++ib) {
      for (auto id = std::next(ib); id != na.end(); ++id) {
        const VertexId& b = ib->first;
        const VertexId& d = id->first;
        for (const auto& [c, bc_edge] : adj.at(b)) {
          if (c <= a || c == d) continue;
          auto cd = adj.at(d).find(c);
          if (cd == adj.at(d).end()) continue;
          const std::array<int, 4> e = {ib->second, bc_edge, cd->second, id->second};
          if (color(e[0]) != color(e[2]) || color(e[1]) != color(e[3]) ||
              color(e[0]) == color(e[1])) {
            continue;
          }
          out.push_back(BiChromaticCycle{{a, b, c, d}, e, color(e[0]), color(e[1])});
        }
      }
    }
  }
  return out;
}

RationalLP EnhancedLp(const ColoredInstance& inst) {
  RationalLP lp = BuildMc(inst);
  for (const BiChromaticCycle& bc : EnumerateBc(inst)) {
    LinearTerms terms;
    for (int e : bc.edges) terms.emplace_back(e, Rational(1));
    lp.AddRow("bc:" + bc.Name(), Normalize(std::move(terms)), Relation::kLessEqual,
              Rational(1));
  }
  return lp;
}

Sa2Report Sa2ImpliesBc(const ColoredInstance& inst, const BiChromaticCycle& bc,
                       const SaOptions& options) {
  const RationalLP lp = BuildMc(inst);
  Sa2Report report;
  LinearTerms objective;
  for (int e : bc.edges) objective.emplace_back(e, Rational(1));
  const SaOptimum opt = OptimizeLift(lp, 2, objective, options);
  report.max_value = opt.value;
  report.lifted_variables = opt.lifted_variables;
  report.lifted_rows = opt.lifted_rows;
  report.unit_bound_cycle = inst.bounds.at(bc.color_x) == Rational(1) &&
                          inst.bounds.at(bc.color_y) == Rational(1);
  if (report.unit_bound_cycle) report.implied = opt.value <= Rational(1);

  const auto& e = bc.edges;
  const std::vector<std::array<int, 2>> pairs = {
      {e[0], e[2]}, {e[1], e[3]}, {e[0], e[1]}, {e[1], e[2]}, {e[2], e[3]}, {e[3], e[0]}};
  for (const auto& p : pairs) report.forcing.push_back(ForcingRow{p, ""});

  const std::set<int> cycle_edges(e.begin(), e.end());
  const std::vector<SaBaseRow> base = SaBaseRows(lp);
  ForEachLiftedRow(base, lp.num_variables(), 1, [&](const LiftedConstraint& c) {
    if (c.gamma.size() != 1 || !c.delta.empty() || !cycle_edges.contains(c.gamma[0])) {
      return true;
    }
    if (c.coeffs.contains(IndexSet{})) return true;
    for (const auto& [s, coef] : c.coeffs) {
      if (coef.sign() > 0) return true;
    }
    for (ForcingRow& f : report.forcing) {
      if (!f.row.empty()) continue;
      IndexSet key = {std::min(f.pair[0], f.pair[1]), std::max(f.pair[0], f.pair[1])};
      auto it = c.coeffs.find(key);
      if (it != c.coeffs.end() && it->second.sign() < 0) {
        f.row = base[c.base_row].name + "|G" + ToString(c.gamma) + "D{}";
      }
    }
    return true;
  });
  report.algebra_confirmed = std::all_of(report.forcing.begin(), report.forcing.end(),
                                         [](const ForcingRow& f) { return !f.row.empty(); });
  return report;
}

}  // namespace colorlab
