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

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "colorlab/errors.h"
#include "colorlab/lp.h"
#include "colorlab/relaxations.h"

namespace colorlab {
namespace {

EdgeSet AllEdges(const Hypergraph3& h) {
  EdgeSet all(h.num_edges());
  for (int i = 0; i < h.num_edges(); ++i) all[i] = i;
  return all;
}

void CheckLimits(int edges, const OracleLimits& limits, const char* what) {
  if (edges > limits.max_edges) {
    throw BudgetError(std::string(what) + " oracle limited to " +
                      std::to_string(limits.max_edges) + " hyperedges, got " +
                      std::to_string(edges));
  }
}

// Branch and bound for a maximum family of pairwise disjoint items, each a
// set of vertex indices. `bound(i, used)` must over-estimate how many of the
// items i.. can still be added.
template <typename Bound>
int MaxDisjoint(const std::vector<std::vector<int>>& items, int universe,
                std::int64_t max_nodes, const char* what, Bound&& bound) {
  const int n = static_cast<int>(items.size());
  std::vector<char> used(universe, 0);
  int best = 0;
  std::int64_t nodes = 0;
  auto free = [&](int i) {
    return std::none_of(items[i].begin(), items[i].end(), [&](int x) { return used[x]; });
  };
  auto rec = [&](auto&& self, int i, int count) -> void {
    if (++nodes > max_nodes) {
      throw BudgetError(std::string(what) + " search exceeded " +
                        std::to_string(max_nodes) + " nodes");
    }
    while (i < n && !free(i)) ++i;
    if (i == n) {
      best = std::max(best, count);
      return;
    }
    if (count + bound(i, used) <= best) return;
    for (int x : items[i]) used[x] = 1;
    self(self, i + 1, count + 1);
    for (int x : items[i]) used[x] = 0;
    self(self, i + 1, count);
  };
  rec(rec, 0, 0);
  return best;
}

Hypergraph3 Restrict(const Hypergraph3& h, const EdgeSet& edges) {
  Hypergraph3 sub;
  sub.vertex_ids = h.vertex_ids;
  sub.num_graph_vertices = h.num_graph_vertices;
  for (int e : edges) sub.hyperedges.push_back(h.hyperedges[e]);
  return sub;
}

std::vector<Rational> ExactCover(const Hypergraph3& h, const EdgeSet& edges) {
  const BasicSolution sol = Solve(BuildDual(Restrict(h, edges)));
  if (sol.status != SolveStatus::kOptimal) {
    throw DiagnosticError("cover LP of a sub-hypergraph is not optimal: " +
                          ToString(sol.status));
  }
  return sol.values;
}

Rational Load(const Hypergraph3& h, const std::vector<Rational>& y, int e) {
  Rational sum;
  for (int x : h.hyperedges[e].members()) sum += y[x];
  return sum;
}

Rational Sum(const std::vector<Rational>& y) {
  Rational s;
  for (const Rational& v : y) s += v;
  return s;
}

std::string EdgeName(const Hypergraph3& h, int e) {
  const Hyperedge& he = h.hyperedges[e];
  return "hyperedge " + std::to_string(e) + " {" + h.vertex_ids[he.u] + "," +
         h.vertex_ids[he.v] + "," + h.vertex_ids[he.c] + "}";
}

std::string Dump(const Hypergraph3& h, const EdgeSet& edges) {
  std::string out;
  for (int e : edges) out += (out.empty() ? "" : "; ") + EdgeName(h, e);
  return out;
}

class Recursion {
 public:
  struct Node {
    std::vector<Rational> y;
    Rational value;
    int mu = 0;
    int q = 0;
  };

  Recursion(const Hypergraph3& h, const std::vector<Rational>& x,
            const CertificateOptions& options)
      : h_(h), x_(x), options_(options) {}

  const Node& Run(const EdgeSet& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    Node node;
    node.y.assign(h_.num_vertices(), Rational(0));
    if (s.empty()) return memo_.emplace(s, std::move(node)).first->second;

    CertificateStep step;
    step.edges = s;
    step.mu = MuOracle(h_, s, options_.limits);
    step.q = QOracle(h_, s, options_.limits);
    step.bound = options_.bipartite ? BipartiteBound(step.mu, step.q)
                                    : GeneralBound(step.mu, step.q);
    std::vector<Rational>& y = node.y;

    if (step.mu == 1) {
      if (IsBc(h_, s)) {
        step.kind = "base-bc";
        const LowDegree ld = LowDegreeVertex(h_, s);
        step.vertex = ld.vertex;
        step.incident = ld.edges;
        AddDelta(ld, Rational(1, 2), y);
      } else {
        step.kind = "base-lp";
        y = ExactCover(h_, s);
        if (step.q == 0) {
          step.base_bound_ok =
              Sum(y) <= (options_.bipartite ? Rational(3, 2) : Rational(5, 3));
        }
      }
    } else {
      const LowDegree ld = LowDegreeVertex(h_, s);
      step.vertex = ld.vertex;
      step.incident = ld.edges;
      const int e1 = ld.edges[0];
      const EdgeSet h1 = Disjoint(s, e1);
      step.restriction_basic.push_back(RestrictionIsBasic(h1));
      const Node n1 = Run(h1);
      if (ld.edges.size() == 1) {
        step.kind = "degree1";
        AddDelta(ld, Rational(1), y);
        Add(n1.y, Rational(1), y);
      } else {
        const int e2 = ld.edges[1];
        const EdgeSet h2 = Disjoint(s, e2);
        step.restriction_basic.push_back(RestrictionIsBasic(h2));
        const Node n2 = Run(h2);
        const Hyperedge& a = h_.hyperedges[e1];
        const Hyperedge& b = h_.hyperedges[e2];
        const bool meets_one = std::any_of(s.begin(), s.end(), [&](int e) {
          if (e == e1 || e == e2) return false;
          const Hyperedge& c = h_.hyperedges[e];
          return c.Intersects(a) != c.Intersects(b);
        });
        if (meets_one) {
          step.kind = "case2";
          AddDelta(ld, Rational(1, 2), y);
          Add(n1.y, Rational(1, 2), y);
          Add(n2.y, Rational(1, 2), y);
        } else {
          const EdgeSet r1 = Meeting(s, e1);
          const EdgeSet r2 = Meeting(s, e2);
          if (r1 != r2) {
            throw DiagnosticError("R(e1) != R(e2) although no edge meets exactly one: " +
                                  Dump(h_, r1) + " vs " + Dump(h_, r2));
          }
          const bool bc1 = IsBc(h_, r1);
          const bool bc2 = IsBc(h_, r2);
          if (bc1 != bc2) {
            throw DiagnosticError("exactly one of R(e1), R(e2) is a cycle copy: " +
                                  Dump(h_, r1) + " vs " + Dump(h_, r2));
          }
          if (!bc1) {
            step.kind = "case1a";
            Add(ExactCover(h_, r1), Rational(1), y);
            Add(n1.y, Rational(1, 2), y);
            Add(n2.y, Rational(1, 2), y);
          } else {
            step.kind = "case1b";
            AddDelta(ld, Rational(1, 2), y);
            Add(n1.y, Rational(1, 2), y);
            Add(n2.y, Rational(1, 2), y);
            step.q_drop_ok = n1.q <= step.q - 1 && n2.q <= step.q - 1;
          }
        }
      }
      if (step.kind != "case1a") y[ld.vertex] = Rational(0);
    }

    node.value = Sum(y);
    node.mu = step.mu;
    node.q = step.q;
    step.value = node.value;
    step.covered = std::all_of(s.begin(), s.end(), [&](int e) {
      return Load(h_, y, e) >= Rational(1);
    });
    step.within_bound = node.value <= step.bound;
    trace_.push_back(std::move(step));
    return memo_.emplace(s, std::move(node)).first->second;
  }

  std::vector<CertificateStep>& trace() { return trace_; }

 private:
  EdgeSet Disjoint(const EdgeSet& s, int e) const {
    EdgeSet out;
    for (int f : s) {
      if (!h_.hyperedges[f].Intersects(h_.hyperedges[e])) out.push_back(f);
    }
    return out;
  }

  EdgeSet Meeting(const EdgeSet& s, int e) const {
    EdgeSet out;
    for (int f : s) {
      if (h_.hyperedges[f].Intersects(h_.hyperedges[e])) out.push_back(f);
    }
    return out;
  }

  bool RestrictionIsBasic(const EdgeSet& s) const {
    std::vector<Rational> xs;
    for (int e : s) xs.push_back(x_[e]);
    return IsVertex(BuildHm(Restrict(h_, s)), xs);
  }

  // y(u) += scale * delta_v(u) for u != v, delta_v(u) = the number of the
  // low-degree vertex's edges containing u.
  void AddDelta(const LowDegree& ld, const Rational& scale,
                std::vector<Rational>& y) const {
    for (int e : ld.edges) {
      for (int u : h_.hyperedges[e].members()) {
        if (u != ld.vertex) y[u] += scale;
      }
    }
  }

  static void Add(const std::vector<Rational>& from, const Rational& scale,
                  std::vector<Rational>& to) {
    for (size_t i = 0; i < to.size(); ++i) {
      if (!from[i].is_zero()) to[i].AddMul(scale, from[i]);
    }
  }

  const Hypergraph3& h_;
  const std::vector<Rational>& x_;
  const CertificateOptions& options_;
  std::map<EdgeSet, Node> memo_;
  std::vector<CertificateStep> trace_;
};

}  // namespace

int MuOracle(const Hypergraph3& h, const OracleLimits& limits) {
  return MuOracle(h, AllEdges(h), limits);
}

int MuOracle(const Hypergraph3& h, const EdgeSet& edges, const OracleLimits& limits) {
  CheckLimits(static_cast<int>(edges.size()), limits, "matching");
  std::vector<std::vector<int>> items;
  for (int e : edges) {
    const auto m = h.hyperedges[e].members();
    items.push_back({m.begin(), m.end()});
  }
  // Every matching edge needs two free graph vertices and a free color vertex
  // that some remaining edge uses.
  std::vector<char> seen(h.num_vertices(), 0);
  auto bound = [&](int i, const std::vector<char>& used) {
    std::fill(seen.begin(), seen.end(), 0);
    int graph = 0, colors = 0, live = 0;
    for (int j = i; j < static_cast<int>(items.size()); ++j) {
      const auto& it = items[j];
      if (used[it[0]] || used[it[1]] || used[it[2]]) continue;
      ++live;
      for (int k = 0; k < 2; ++k) {
        if (!seen[it[k]]) {
          seen[it[k]] = 1;
          ++graph;
        }
      }
      if (!seen[it[2]]) {
        seen[it[2]] = 1;
        ++colors;
      }
    }
    return std::min({live, graph / 2, colors});
  };
  return MaxDisjoint(items, h.num_vertices(), limits.max_nodes, "matching", bound);
}

bool IsBc(const Hypergraph3& h, const EdgeSet& edges) {
  if (edges.size() != 4) return false;
  std::map<int, int> graph_degree;
  std::map<int, std::vector<int>> by_color;
  std::set<std::pair<int, int>> pairs;
  for (int e : edges) {
    const Hyperedge& he = h.hyperedges[e];
    if (h.IsColorVertex(he.u) || h.IsColorVertex(he.v) || !h.IsColorVertex(he.c)) {
      return false;
    }
    ++graph_degree[he.u];
    ++graph_degree[he.v];
    by_color[he.c].push_back(e);
    pairs.emplace(he.u, he.v);
  }
  if (pairs.size() != 4 || graph_degree.size() != 4 || by_color.size() != 2) return false;
  for (const auto& [v, d] : graph_degree) {
    if (d != 2) return false;
  }
  for (const auto& [c, es] : by_color) {
    if (es.size() != 2) return false;
    const Hyperedge& a = h.hyperedges[es[0]];
    const Hyperedge& b = h.hyperedges[es[1]];
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  }
  return true;
}

std::vector<EdgeSet> FindBcCopies(const Hypergraph3& h, const EdgeSet& edges) {
  // Pairs of hyperedges sharing a color vertex and disjoint on graph
  // vertices, grouped by color vertex.
  std::map<int, std::vector<std::pair<int, int>>> pairs_by_color;
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const Hyperedge& a = h.hyperedges[edges[i]];
      const Hyperedge& b = h.hyperedges[edges[j]];
      if (a.c != b.c) continue;
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      pairs_by_color[a.c].emplace_back(edges[i], edges[j]);
    }
  }
  std::set<EdgeSet> found;
  for (auto c1 = pairs_by_color.begin(); c1 != pairs_by_color.end(); ++c1) {
    for (auto c2 = std::next(c1); c2 != pairs_by_color.end(); ++c2) {
      for (const auto& [a, b] : c1->second) {
        for (const auto& [c, d] : c2->second) {
          EdgeSet s = {a, b, c, d};
          std::sort(s.begin(), s.end());
          if (IsBc(h, s)) found.insert(s);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

int QOracle(const Hypergraph3& h, const EdgeSet& edges, const OracleLimits& limits) {
  CheckLimits(static_cast<int>(edges.size()), limits, "cycle packing");
  std::vector<std::vector<int>> items;
  for (const EdgeSet& copy : FindBcCopies(h, edges)) {
    std::set<int> vs;
    for (int e : copy) {
      for (int x : h.hyperedges[e].members()) vs.insert(x);
    }
    items.emplace_back(vs.begin(), vs.end());
  }
  auto bound = [&](int i, const std::vector<char>&) {
    return static_cast<int>(items.size()) - i;
  };
  return MaxDisjoint(items, h.num_vertices(), limits.max_nodes, "cycle packing", bound);
}

int QOracle(const Hypergraph3& h, const OracleLimits& limits) {
  return QOracle(h, AllEdges(h), limits);
}

int QOracle(const ColoredInstance& inst, const OracleLimits& limits) {
  return QOracle(ToHypergraph(inst), limits);
}

LowDegree LowDegreeVertex(const Hypergraph3& h, const EdgeSet& edges) {
  if (edges.empty()) throw DiagnosticError("low-degree vertex of an empty support");
  std::vector<std::vector<int>> incident(h.num_vertices());
  for (int e : edges) {
    for (int x : h.hyperedges[e].members()) incident[x].push_back(e);
  }
  for (int want : {2, 1}) {
    for (int v = 0; v < h.num_vertices(); ++v) {
      if (static_cast<int>(incident[v].size()) == want) return LowDegree{v, incident[v]};
    }
  }
  throw DiagnosticError(
      "no vertex of degree 1 or 2 in the support; the solution is not basic: " +
      Dump(h, edges));
}

Rational GeneralBound(int mu, int q) { return Rational(5 * mu + q, 3); }

Rational BipartiteBound(int mu, int q) { return Rational(3 * mu + q, 2); }

DualCertificate BuildCertificate(const Hypergraph3& h, const BasicSolution& sol,
                                 const CertificateOptions& options) {
  const RationalLP hm = BuildHm(h);
  if (const VertexReport vr = VerifyVertex(hm, sol); !vr.ok()) {
    throw InvalidArgumentError("certificate needs a basic optimal solution: " + vr.detail);
  }
  const std::vector<Rational>& x = sol.values;
  DualCertificate cert;
  cert.bipartite = options.bipartite;
  cert.weights.assign(h.num_vertices(), Rational(0));

  EdgeSet support;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (x[e] == Rational(1)) {
      cert.weights[h.hyperedges[e].u] += Rational(1);
      ++cert.peeled;
    } else if (x[e].sign() > 0) {
      support.push_back(e);
    }
  }

  Recursion rec(h, x, options);
  const Recursion::Node root = rec.Run(support);
  for (int v = 0; v < h.num_vertices(); ++v) cert.weights[v] += root.y[v];
  cert.support_value = root.value;
  cert.support_mu = root.mu;
  cert.support_q = root.q;
  cert.trace = std::move(rec.trace());

  // Residual cover: min sum z subject to z(e) >= 1 - y(e) on uncovered e.
  RationalLP residual;
  residual.sense = Sense::kMinimize;
  for (int v = 0; v < h.num_vertices(); ++v) {
    residual.AddVariable("z:" + h.vertex_ids[v], std::nullopt);
    residual.objective.emplace_back(v, Rational(1));
  }
  for (int e = 0; e < h.num_edges(); ++e) {
    const Rational load = Load(h, cert.weights, e);
    if (load >= Rational(1)) continue;
    LinearTerms terms;
    for (int u : h.hyperedges[e].members()) terms.emplace_back(u, Rational(1));
    residual.AddRow("residual:" + std::to_string(e), std::move(terms),
                    Relation::kGreaterEqual, Rational(1) - load);
  }
  cert.recursion_value = Rational(cert.peeled) + cert.support_value;
  cert.cover_source = "recursion";
  if (residual.num_rows() > 0) {
    const BasicSolution z = Solve(residual);
    if (z.status != SolveStatus::kOptimal) {
      throw DiagnosticError("residual cover LP is " + ToString(z.status));
    }
    for (int v = 0; v < h.num_vertices(); ++v) cert.weights[v] += z.values[v];
    cert.completion_value = z.objective_value;
    cert.cover_source = "residual";
  }
  cert.value = Sum(cert.weights);
  cert.mu = MuOracle(h, options.limits);
  cert.q = QOracle(h, options.limits);
  const Rational bound =
      options.bipartite ? BipartiteBound(cert.mu, cert.q) : GeneralBound(cert.mu, cert.q);
  if (cert.value > bound) {
    cert.weights = ExactCover(h, AllEdges(h));
    cert.value = Sum(cert.weights);
    cert.cover_source = "exact-dual";
  }
  return cert;
}

bool CertificateReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificateCheck& c) { return c.passed; });
}

CertificateReport VerifyCertificate(const Hypergraph3& h, const DualCertificate& cert,
                                    const Rational& lp_opt) {
  CertificateReport report;
  CertificateCheck coverage{"coverage", true, ""};
  if (static_cast<int>(cert.weights.size()) != h.num_vertices()) {
    coverage.passed = false;
    coverage.witness = "certificate has " + std::to_string(cert.weights.size()) +
                       " weights for " + std::to_string(h.num_vertices()) + " vertices";
    report.checks.push_back(coverage);
    return report;
  }
  for (int e = 0; e < h.num_edges(); ++e) {
    const Rational load = Load(h, cert.weights, e);
    if (load < Rational(1)) {
      coverage.passed = false;
      coverage.witness = EdgeName(h, e) + " has load " + load.ToString();
      break;
    }
  }
  report.checks.push_back(coverage);

  CertificateCheck nonneg{"nonnegativity", true, ""};
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (cert.weights[v].sign() < 0) {
      nonneg.passed = false;
      nonneg.witness = h.vertex_ids[v] + " has weight " + cert.weights[v].ToString();
      break;
    }
  }
  report.checks.push_back(nonneg);

  const Rational value = Sum(cert.weights);
  CertificateCheck duality{"weak-duality", value >= lp_opt, ""};
  if (!duality.passed) {
    duality.witness = "value " + value.ToString() + " < LP optimum " + lp_opt.ToString();
  }
  report.checks.push_back(duality);

  const Rational bound =
      cert.bipartite ? BipartiteBound(cert.mu, cert.q) : GeneralBound(cert.mu, cert.q);
  CertificateCheck within{"bound", value <= bound, ""};
  if (!within.passed) {
    within.witness = "value " + value.ToString() + " > bound " + bound.ToString() +
                     " (mu=" + std::to_string(cert.mu) + ", q=" + std::to_string(cert.q) +
                     ")";
  }
  report.checks.push_back(within);
  return report;
}

}  // namespace colorlab
