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

#include "colorlab/report_json.h"

namespace colorlab {
namespace {

std::string EdgeLabel(const ColoredInstance& inst, int e) {
  return inst.edges[e].u + "-" + inst.edges[e].v;
}

Json StepToJson(const Hypergraph3& h, const CertificateStep& step) {
  Json j;
  j["kind"] = step.kind;
  j["edges"] = step.edges;
  j["vertex"] = step.vertex < 0 ? Json(nullptr) : Json(h.vertex_ids[step.vertex]);
  j["incident"] = step.incident;
  j["mu"] = step.mu;
  j["q"] = step.q;
  j["value"] = RationalToJson(step.value);
  j["bound"] = RationalToJson(step.bound);
  j["covered"] = step.covered;
  j["within_bound"] = step.within_bound;
  j["base_bound_ok"] = step.base_bound_ok ? Json(*step.base_bound_ok) : Json(nullptr);
  j["restriction_basic"] = step.restriction_basic;
  j["q_drop_ok"] = step.q_drop_ok ? Json(*step.q_drop_ok) : Json(nullptr);
  return j;
}

}  // namespace

std::string ConstraintId(const RationalLP& lp, const TightConstraint& c) {
  switch (c.kind) {
    case TightConstraint::Kind::kRow:
      return "row:" + lp.rows[c.index].name;
    case TightConstraint::Kind::kLowerBound:
      return "lower:" + lp.variables[c.index].name;
    case TightConstraint::Kind::kUpperBound:
      return "upper:" + lp.variables[c.index].name;
  }
  return "?";
}

Json SolutionToJson(const RationalLP& lp, const BasicSolution& sol) {
  Json j;
  j["status"] = ToString(sol.status);
  if (sol.status == SolveStatus::kOptimal) {
    j["objective_value"] = RationalToJson(sol.objective_value);
    Json values = Json::object();
    for (int i = 0; i < lp.num_variables(); ++i) {
      values[lp.variables[i].name] = RationalToJson(sol.values[i]);
    }
    j["values"] = values;
    Json basis = Json::array();
    for (const TightConstraint& c : sol.basis) basis.push_back(ConstraintId(lp, c));
    j["basis"] = basis;
  }
  j["pivots"] = sol.pivots;
  return j;
}

Json VerdictToJson(const SaVerdict& verdict) {
  Json j;
  j["feasible"] = verdict.feasible;
  j["constraints_checked"] = verdict.constraints_checked;
  if (verdict.witness) {
    Json w;
    w["base_row"] = verdict.witness->base_row;
    w["gamma"] = verdict.witness->gamma;
    w["delta"] = verdict.witness->delta;
    w["value"] = RationalToJson(verdict.witness->value);
    w["equality"] = verdict.witness->equality;
    w["text"] = verdict.witness->ToString();
    j["witness"] = w;
  }
  return j;
}

Json CertificateToJson(const Hypergraph3& h, const DualCertificate& cert,
                       const CertificateReport& report) {
  Json j;
  j["value"] = RationalToJson(cert.value);
  j["mu"] = cert.mu;
  j["q"] = cert.q;
  j["bipartite"] = cert.bipartite;
  j["bound"] = RationalToJson(cert.bipartite ? BipartiteBound(cert.mu, cert.q)
                                             : GeneralBound(cert.mu, cert.q));
  j["q_disjointness"] = "graph-and-color-vertices";
  j["peeled"] = cert.peeled;
  j["support_value"] = RationalToJson(cert.support_value);
  j["support_mu"] = cert.support_mu;
  j["support_q"] = cert.support_q;
  j["recursion_value"] = RationalToJson(cert.recursion_value);
  j["completion_value"] = RationalToJson(cert.completion_value);
  j["cover_source"] = cert.cover_source;
  Json weights = Json::object();
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (!cert.weights[v].is_zero()) weights[h.vertex_ids[v]] = RationalToJson(cert.weights[v]);
  }
  j["weights"] = weights;
  Json checks = Json::array();
  for (const CertificateCheck& c : report.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.passed) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["ok"] = report.ok();
  Json trace = Json::array();
  for (const CertificateStep& step : cert.trace) trace.push_back(StepToJson(h, step));
  j["trace"] = trace;
  return j;
}

Json GapReportToJson(const GapReport& report) {
  Json j;
  j["instance"] = report.fingerprint;
  j["lp"] = RationalToJson(report.lp_value);
  j["ilp"] = RationalToJson(report.ilp_value);
  j["gap"] = RationalToJson(report.gap);
  j["witness"] = report.witness;
  Json sa = Json::object();
  for (const auto& [level, value] : report.sa_values) {
    sa[std::to_string(level)] = RationalToJson(value);
  }
  j["sa"] = sa;
  return j;
}

Json CycleToJson(const ColoredInstance& inst, const BiChromaticCycle& bc) {
  Json j;
  j["name"] = bc.Name();
  j["vertices"] = bc.vertices;
  Json edges = Json::array();
  for (int e : bc.edges) {
    Json ej;
    ej["index"] = e;
    ej["u"] = inst.edges[e].u;
    ej["v"] = inst.edges[e].v;
    ej["color"] = inst.edges[e].color;
    edges.push_back(ej);
  }
  j["edges"] = edges;
  j["colors"] = {bc.color_x, bc.color_y};
  return j;
}

Json Sa2ReportToJson(const ColoredInstance& inst, const Sa2Report& report) {
  Json j;
  j["max_value"] = RationalToJson(report.max_value);
  j["unit_bound_cycle"] = report.unit_bound_cycle;
  j["implied"] = report.implied ? Json(*report.implied) : Json(nullptr);
  Json forcing = Json::array();
  for (const ForcingRow& f : report.forcing) {
    Json fj;
    fj["pair"] = {EdgeLabel(inst, f.pair[0]), EdgeLabel(inst, f.pair[1])};
    fj["edges"] = f.pair;
    fj["row"] = f.row.empty() ? Json(nullptr) : Json(f.row);
    forcing.push_back(fj);
  }
  j["forcing"] = forcing;
  j["algebra_confirmed"] = report.algebra_confirmed;
  j["lifted_variables"] = report.lifted_variables;
  j["lifted_rows"] = report.lifted_rows;
  return j;
}

}  // namespace colorlab
