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

#include "colorlab/relaxations.h"

#include <map>
#include <string>

#include "colorlab/errors.h"

namespace colorlab {
namespace {

LinearTerms OnesOver(const std::vector<int>& indices) {
  LinearTerms terms;
  for (int i : indices) terms.emplace_back(i, Rational(1));
  return terms;
}

}  // namespace

RationalLP BuildMc(const ColoredInstance& inst) {
  if (const auto violations = Validate(inst); !violations.empty()) {
    throw InvalidArgumentError("invalid instance: " + violations.front().message);
  }
  RationalLP lp;
  for (int i = 0; i < inst.num_edges(); ++i) {
    lp.AddVariable("x" + std::to_string(i), Rational(1));
    lp.objective.emplace_back(i, inst.edges[i].profit);
  }
  for (const auto& [v, incident] : inst.Incidence()) {
    lp.AddRow("deg:" + v, OnesOver(incident), Relation::kLessEqual, Rational(1));
  }
  for (const auto& [color, members] : inst.ColorClasses()) {
    lp.AddRow("color:" + color, OnesOver(members), Relation::kLessEqual,
              inst.bounds.at(color));
  }
  return lp;
}

RationalLP BuildHm(const Hypergraph3& h) {
  RationalLP lp;
  for (int i = 0; i < h.num_edges(); ++i) {
    lp.AddVariable("x" + std::to_string(i), std::nullopt);
    lp.objective.emplace_back(i, Rational(1));
  }
  const auto incidence = h.Incidence();
  for (int v = 0; v < h.num_vertices(); ++v) {
    lp.AddRow("vtx:" + h.vertex_ids[v], OnesOver(incidence[v]), Relation::kLessEqual,
              Rational(1));
  }
  return lp;
}

RationalLP BuildDual(const Hypergraph3& h) {
  RationalLP lp;
  lp.sense = Sense::kMinimize;
  for (int v = 0; v < h.num_vertices(); ++v) {
    lp.AddVariable("y:" + h.vertex_ids[v], std::nullopt);
    lp.objective.emplace_back(v, Rational(1));
  }
  for (int i = 0; i < h.num_edges(); ++i) {
    const Hyperedge& e = h.hyperedges[i];
    lp.AddRow("cover:" + std::to_string(i),
              LinearTerms{{e.u, Rational(1)}, {e.v, Rational(1)}, {e.c, Rational(1)}},
              Relation::kGreaterEqual, Rational(1));
  }
  return lp;
}

std::vector<int> ColorRows(const RationalLP& lp) {
  std::vector<int> out;
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (lp.rows[i].name.starts_with("color:")) out.push_back(i);
  }
  return out;
}

RationalLP ChvatalRoundOnes(const RationalLP& lp, const std::vector<int>& rows,
                            const ChvatalOptions& options) {
  RationalLP out = lp;
  if (rows.empty()) return out;
  auto le_form = [&](int i, LinearTerms& terms, Rational& rhs) {
    const LpRow& row = lp.rows.at(i);
    terms = row.terms;
    rhs = row.rhs;
    if (row.relation == Relation::kGreaterEqual) {
      for (auto& t : terms) t.second = -t.second;
      rhs = -rhs;
    }
  };
  auto add_cut = [&](const std::string& name, LinearTerms terms, const Rational& rhs) {
    terms = Normalize(std::move(terms));
    for (auto& t : terms) t.second = t.second.Floor();
    out.AddRow(name, Normalize(std::move(terms)), Relation::kLessEqual, rhs.Floor());
  };
  LinearTerms sum_terms;
  Rational sum_rhs;
  for (int i : rows) {
    LinearTerms terms;
    Rational rhs;
    le_form(i, terms, rhs);
    if (options.per_row) add_cut("cg:" + lp.rows[i].name, terms, rhs);
    sum_terms.insert(sum_terms.end(), terms.begin(), terms.end());
    sum_rhs += rhs;
  }
  if (options.aggregate) add_cut("cg:sum", std::move(sum_terms), sum_rhs);
  return out;
}

}  // namespace colorlab
