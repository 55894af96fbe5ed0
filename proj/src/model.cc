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

#include "colorlab/model.h"

#include <algorithm>
#include <deque>

#include "colorlab/errors.h"

namespace colorlab {
namespace {

std::string EdgeLabel(const ColoredInstance& inst, int i) {
  const Edge& e = inst.edges[i];
  return "edge " + std::to_string(i) + " {" + e.u + "," + e.v + "}";
}

// 2-coloring of an adjacency list; false when an odd cycle exists.
bool TwoColorable(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<int> queue = {s};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : adj[x]) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::map<ColorId, std::vector<int>> ColoredInstance::ColorClasses() const {
  std::map<ColorId, std::vector<int>> classes;
  for (int i = 0; i < num_edges(); ++i) classes[edges[i].color].push_back(i);
  return classes;
}

std::map<VertexId, std::vector<int>> ColoredInstance::Incidence() const {
  std::map<VertexId, std::vector<int>> inc;
  for (const VertexId& v : vertices) inc[v];
  for (int i = 0; i < num_edges(); ++i) {
    inc[edges[i].u].push_back(i);
    inc[edges[i].v].push_back(i);
  }
  return inc;
}

bool ColoredInstance::AllBoundsOne() const {
  return std::all_of(bounds.begin(), bounds.end(),
                     [](const auto& kv) { return kv.second == Rational(1); });
}

bool ColoredInstance::AllProfitsOne() const {
  return std::all_of(edges.begin(), edges.end(),
                     [](const Edge& e) { return e.profit == Rational(1); });
}

std::string ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kSelfLoop:
      return "self-loop";
    case ViolationKind::kMultiEdge:
      return "multi-edge";
    case ViolationKind::kUnknownVertex:
      return "unknown-vertex";
    case ViolationKind::kUnboundedColor:
      return "color-without-bound";
    case ViolationKind::kUnusedColor:
      return "unused-color";
    case ViolationKind::kBoundBelowOne:
      return "bound-below-one";
    case ViolationKind::kNonPositiveProfit:
      return "non-positive-profit";
    case ViolationKind::kBipartition:
      return "bipartition";
  }
  return "unknown";
}

std::vector<Violation> Validate(const ColoredInstance& inst) {
  std::vector<Violation> out;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::set<ColorId> used;
  for (int i = 0; i < inst.num_edges(); ++i) {
    const Edge& e = inst.edges[i];
    const std::string label = EdgeLabel(inst, i);
    for (const VertexId* end : {&e.u, &e.v}) {
      if (!inst.vertices.contains(*end)) {
        out.push_back({ViolationKind::kUnknownVertex, label,
                       "endpoint '" + *end + "' is not a declared vertex"});
      }
    }
    if (e.u == e.v) {
      out.push_back({ViolationKind::kSelfLoop, label, "edge is a self-loop"});
    } else {
      auto key = std::minmax(e.u, e.v);
      if (!seen.emplace(key.first, key.second).second) {
        out.push_back({ViolationKind::kMultiEdge, label,
                       "duplicate edge {" + e.u + "," + e.v + "}"});
      }
    }
    if (!inst.bounds.contains(e.color)) {
      out.push_back({ViolationKind::kUnboundedColor, label,
                     "color '" + e.color + "' has no bound"});
    }
    used.insert(e.color);
    if (e.profit.sign() <= 0) {
      out.push_back({ViolationKind::kNonPositiveProfit, label,
                     "profit " + e.profit.ToString() + " is not positive"});
    }
  }
  for (const auto& [color, w] : inst.bounds) {
    if (!used.contains(color)) {
      out.push_back({ViolationKind::kUnusedColor, color,
                     "color '" + color + "' is not used by any edge"});
    }
    if (w < Rational(1)) {
      out.push_back({ViolationKind::kBoundBelowOne, color,
                     "bound " + w.ToString() + " of color '" + color +
                         "' is below 1"});
    }
  }
  if (inst.bipartition) {
    const Bipartition& bp = *inst.bipartition;
    for (const VertexId& v : inst.vertices) {
      const bool l = bp.left.contains(v);
      const bool r = bp.right.contains(v);
      if (l == r) {
        out.push_back({ViolationKind::kBipartition, v,
                       l ? "vertex is on both sides of the bipartition"
                         : "vertex is on neither side of the bipartition"});
      }
    }
    for (int i = 0; i < inst.num_edges(); ++i) {
      const Edge& e = inst.edges[i];
      const bool crosses = (bp.left.contains(e.u) && bp.right.contains(e.v)) ||
                           (bp.right.contains(e.u) && bp.left.contains(e.v));
      if (!crosses) {
        out.push_back({ViolationKind::kBipartition, EdgeLabel(inst, i),
                       "edge does not cross the bipartition"});
      }
    }
  }
  return out;
}

bool IsBipartiteGraph(const ColoredInstance& inst) {
  std::map<VertexId, int> index;
  for (const VertexId& v : inst.vertices) index.emplace(v, index.size());
  for (const Edge& e : inst.edges) {
    index.emplace(e.u, index.size());
    index.emplace(e.v, index.size());
  }
  std::vector<std::vector<int>> adj(index.size());
  for (const Edge& e : inst.edges) {
    adj[index[e.u]].push_back(index[e.v]);
    adj[index[e.v]].push_back(index[e.u]);
  }
  return TwoColorable(static_cast<int>(index.size()), adj);
}

std::vector<std::vector<int>> Hypergraph3::Incidence() const {
  std::vector<std::vector<int>> inc(num_vertices());
  for (int i = 0; i < num_edges(); ++i) {
    for (int x : hyperedges[i].members()) inc[x].push_back(i);
  }
  return inc;
}

std::vector<std::string> ValidateHypergraph(const Hypergraph3& h) {
  std::vector<std::string> out;
  std::set<std::array<int, 3>> seen;
  for (int i = 0; i < h.num_edges(); ++i) {
    const Hyperedge& e = h.hyperedges[i];
    const std::string label = "hyperedge " + std::to_string(i);
    for (int x : e.members()) {
      if (x < 0 || x >= h.num_vertices()) {
        out.push_back(label + " references vertex " + std::to_string(x) +
                      " out of range");
      }
    }
    if (e.u == e.v || h.IsColorVertex(e.u) || h.IsColorVertex(e.v) ||
        !h.IsColorVertex(e.c)) {
      out.push_back(label + " must hold two graph vertices and one color vertex");
    }
    std::array<int, 3> key = e.members();
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) out.push_back(label + " is a duplicate");
  }
  return out;
}

Hypergraph3 ToHypergraph(const ColoredInstance& inst) {
  const std::vector<Violation> violations = Validate(inst);
  if (!violations.empty()) {
    throw InvalidArgumentError("invalid instance: " + violations[0].element +
                               ": " + violations[0].message);
  }
  Hypergraph3 h;
  std::map<VertexId, int> graph_index;
  for (const VertexId& v : inst.vertices) {
    graph_index.emplace(v, static_cast<int>(h.vertex_ids.size()));
    h.vertex_ids.push_back(v);
  }
  h.num_graph_vertices = static_cast<int>(h.vertex_ids.size());

  // First color vertex and number of copies per color.
  std::map<ColorId, std::pair<int, int>> color_vertices;
  for (const auto& [color, w] : inst.bounds) {
    if (!w.is_integer()) {
      throw InvalidArgumentError("color '" + color + "' has fractional bound " +
                                 w.ToString() +
                                 "; the hypergraph cast needs integral bounds");
    }
    const int copies = static_cast<int>(w.ToInt64());
    color_vertices[color] = {h.num_vertices(), copies};
    if (copies == 1) {
      h.vertex_ids.push_back("color:" + color);
    } else {
      for (int k = 1; k <= copies; ++k) {
        h.vertex_ids.push_back("color:" + color + "#" + std::to_string(k));
      }
    }
  }

  for (int i = 0; i < inst.num_edges(); ++i) {
    const Edge& e = inst.edges[i];
    int a = graph_index.at(e.u);
    int b = graph_index.at(e.v);
    if (a > b) std::swap(a, b);
    const auto [first, copies] = color_vertices.at(e.color);
    for (int k = 0; k < copies; ++k) {
      h.hyperedges.push_back(
          Hyperedge{a, b, first + k, i, e.color, copies == 1 ? 0 : k + 1});
    }
  }
  return h;
}

bool IsBipartiteHypergraph(const Hypergraph3& h) {
  std::vector<std::vector<int>> adj(h.num_graph_vertices);
  for (const Hyperedge& e : h.hyperedges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return TwoColorable(h.num_graph_vertices, adj);
}

}  // namespace colorlab
