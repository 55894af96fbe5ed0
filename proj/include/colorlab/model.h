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

// Bounded color matching instances and their 3-uniform hypergraph cast.
//
// A ColoredInstance is a simple graph whose edge set is partitioned into
// color classes E_j, each with a rational bound w_j >= 1. A feasible solution
// is a matching with at most w_j edges of color j. For the cast, every color
// class becomes a "color vertex" and every edge {u,v} of color j the
// hyperedge {u, v, c_j}; matchings of the two objects correspond one to one.

#ifndef COLORLAB_MODEL_H_
#define COLORLAB_MODEL_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "colorlab/rational.h"

namespace colorlab {

using VertexId = std::string;
using ColorId = std::string;

struct Edge {
  VertexId u;
  VertexId v;
  ColorId color;
  Rational profit = 1;
};

struct Bipartition {
  std::set<VertexId> left;
  std::set<VertexId> right;
};

// Plain value type; use Validate() to check the invariants.
struct ColoredInstance {
  std::set<VertexId> vertices;
  std::vector<Edge> edges;
  std::map<ColorId, Rational> bounds;
  std::optional<Bipartition> bipartition;

  int num_edges() const { return static_cast<int>(edges.size()); }
  // Edge indices per color, in edge order.
  std::map<ColorId, std::vector<int>> ColorClasses() const;
  // Edge indices incident to each vertex, in edge order.
  std::map<VertexId, std::vector<int>> Incidence() const;
  bool AllBoundsOne() const;
  bool AllProfitsOne() const;
};

enum class ViolationKind {
  kSelfLoop,
  kMultiEdge,
  kUnknownVertex,
  kUnboundedColor,  // edge color missing from `bounds`
  kUnusedColor,     // bound without any edge
  kBoundBelowOne,
  kNonPositiveProfit,
  kBipartition,
};

struct Violation {
  ViolationKind kind;
  // The offending element: an edge index rendered as "edge 3 {a,b}", a color
  // id or a vertex id.
  std::string element;
  std::string message;
};

std::string ToString(ViolationKind kind);

// Empty iff every invariant of ColoredInstance holds.
std::vector<Violation> Validate(const ColoredInstance& inst);

// True iff the graph (ignoring colors) is 2-colorable.
bool IsBipartiteGraph(const ColoredInstance& inst);

// 3-uniform hypergraph over graph vertices plus color vertices. Vertices are
// numbered 0..num_vertices()-1; graph vertices come first, in lexicographic
// order of their ids, followed by the color vertices.
struct Hyperedge {
  int u = 0;  // graph vertex, u < v
  int v = 0;  // graph vertex
  int c = 0;  // color vertex
  int source_edge = 0;  // index into ColoredInstance::edges
  ColorId color;        // original color class
  int copy = 0;         // color copy for bounds w_j = k > 1

  std::array<int, 3> members() const { return {u, v, c}; }
  bool Contains(int x) const { return x == u || x == v || x == c; }
  bool Intersects(const Hyperedge& o) const {
    return Contains(o.u) || Contains(o.v) || Contains(o.c);
  }
};

struct Hypergraph3 {
  std::vector<std::string> vertex_ids;  // graph vertices then color vertices
  int num_graph_vertices = 0;
  std::vector<Hyperedge> hyperedges;

  int num_vertices() const { return static_cast<int>(vertex_ids.size()); }
  int num_edges() const { return static_cast<int>(hyperedges.size()); }
  bool IsColorVertex(int x) const { return x >= num_graph_vertices; }
  // Hyperedge indices incident to each vertex.
  std::vector<std::vector<int>> Incidence() const;
};

// Checks the Hypergraph3 invariants: two graph vertices and one color vertex
// per hyperedge, distinct hyperedges. Returns human-readable problems.
std::vector<std::string> ValidateHypergraph(const Hypergraph3& h);

// Requires Validate(inst) to be empty and every bound to be integral; throws
// InvalidArgumentError otherwise (fractional bounds > 1 have no expansion).
// A bound w_j = k yields k color vertices "color:<id>#1".."#k"; w_j = 1 yields
// the single vertex "color:<id>".
Hypergraph3 ToHypergraph(const ColoredInstance& inst);

// True iff the graph underlying `h` is 2-colorable.
bool IsBipartiteHypergraph(const Hypergraph3& h);

}  // namespace colorlab

#endif  // COLORLAB_MODEL_H_
