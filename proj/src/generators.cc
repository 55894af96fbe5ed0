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

#include "colorlab/generators.h"

#include "colorlab/errors.h"
#include "colorlab/instance_io.h"

namespace colorlab {
namespace {

std::string BitString(int x, int ell) {
  std::string s(ell, '0');
  for (int b = 0; b < ell; ++b) {
    if (x & (1 << b)) s[ell - 1 - b] = '1';
  }
  return s;
}

void AddEdge(ColoredInstance& inst, const VertexId& u, const VertexId& v,
             const ColorId& color) {
  inst.vertices.insert(u);
  inst.vertices.insert(v);
  inst.edges.push_back(Edge{u, v, color, Rational(1)});
  inst.bounds.emplace(color, Rational(1));
}

std::string Alpha(int copy, int corner) {
  return "a" + std::to_string(copy) + "_" + std::to_string(corner);
}

}  // namespace

Family ParseFamily(const std::string& name) {
  if (name == "hypercube") return Family::kHypercube;
  if (name == "c4chain") return Family::kC4Chain;
  if (name == "cyclic") return Family::kCyclicLatin;
  if (name == "exemplar") return Family::kExemplar;
  throw InvalidArgumentError("unknown family '" + name + "'");
}

std::string ToString(Family family) {
  switch (family) {
    case Family::kHypercube:
      return "hypercube";
    case Family::kC4Chain:
      return "c4chain";
    case Family::kCyclicLatin:
      return "cyclic";
    case Family::kExemplar:
      return "exemplar";
  }
  return "unknown";
}

Exemplar ParseExemplar(const std::string& name) {
  if (name == "left") return Exemplar::kLeft;
  if (name == "right") return Exemplar::kRight;
  throw InvalidArgumentError("unknown exemplar '" + name + "' (left|right)");
}

ColoredInstance GenHypercube(int ell, const Rational& eps) {
  if (ell < 2) {
    throw InvalidArgumentError("hypercube needs ell >= 2, got " +
                               std::to_string(ell));
  }
  if (ell > 20) throw BudgetError("hypercube ell=" + std::to_string(ell) + " too large");
  if (eps.sign() <= 0 || eps >= Rational(1, 2)) {
    throw InvalidArgumentError("hypercube needs 0 < eps < 1/2, got " +
                               eps.ToString());
  }
  const Rational w = Rational(2) * (Rational(1) - eps);
  ColoredInstance inst;
  const int n = 1 << ell;
  for (int x = 0; x < n; ++x) inst.vertices.insert(BitString(x, ell));
  for (int d = 0; d < ell; ++d) {
    const ColorId color = "d" + std::to_string(d);
    inst.bounds.emplace(color, w);
    for (int x = 0; x < n; ++x) {
      if (x & (1 << d)) continue;
      inst.edges.push_back(
          Edge{BitString(x, ell), BitString(x | (1 << d), ell), color, Rational(1)});
    }
  }
  Bipartition bp;
  for (int x = 0; x < n; ++x) {
    (__builtin_popcount(x) % 2 == 0 ? bp.left : bp.right).insert(BitString(x, ell));
  }
  inst.bipartition = std::move(bp);
  return inst;
}

ColoredInstance GenC4Chain(int k) {
  if (k < 2) {
    throw InvalidArgumentError("c4 chain needs k >= 2, got " + std::to_string(k));
  }
  ColoredInstance inst;
  for (int i = 1; i <= k; ++i) {
    const std::string r = "r" + std::to_string(i);
    const std::string b = "b" + std::to_string(i);
    AddEdge(inst, Alpha(i, 1), Alpha(i, 2), r);
    AddEdge(inst, Alpha(i, 3), Alpha(i, 4), r);
    AddEdge(inst, Alpha(i, 1), Alpha(i, 4), b);
    AddEdge(inst, Alpha(i, 2), Alpha(i, 3), b);
  }
  for (int i = 1; i <= k; ++i) {
    const int next = i == k ? 1 : i + 1;
    AddEdge(inst, Alpha(i, 2), Alpha(next, 1), "cw");
    AddEdge(inst, Alpha(i, 3), Alpha(next, 4), "cw");
  }
  // Corners 1 and 3 on one side, 2 and 4 on the other.
  Bipartition bp;
  for (int i = 1; i <= k; ++i) {
    bp.left.insert(Alpha(i, 1));
    bp.left.insert(Alpha(i, 3));
    bp.right.insert(Alpha(i, 2));
    bp.right.insert(Alpha(i, 4));
  }
  inst.bipartition = std::move(bp);
  return inst;
}

ColoredInstance GenCyclicLatin(int ell) {
  if (ell < 1) {
    throw InvalidArgumentError("cyclic family needs ell >= 1, got " +
                               std::to_string(ell));
  }
  const int k = 2 * ell;
  ColoredInstance inst;
  Bipartition bp;
  for (int j = 0; j < k; ++j) {
    for (int d = 0; d < k; ++d) {
      AddEdge(inst, "v" + std::to_string(j), "u" + std::to_string((j + d) % k),
              "c" + std::to_string(d));
    }
    bp.left.insert("v" + std::to_string(j));
    bp.right.insert("u" + std::to_string(j));
  }
  inst.bipartition = std::move(bp);
  return inst;
}

ColoredInstance GenExemplar(Exemplar which) {
  ColoredInstance inst;
  if (which == Exemplar::kLeft) {
    AddEdge(inst, "v1", "v2", "blue");
    AddEdge(inst, "v3", "v4", "blue");
    AddEdge(inst, "v2", "v3", "red");
    inst.bipartition = Bipartition{{"v1", "v3"}, {"v2", "v4"}};
  } else {
    AddEdge(inst, "u1", "u2", "green");
    AddEdge(inst, "u3", "u4", "green");
    AddEdge(inst, "u1", "u3", "blue");
    AddEdge(inst, "u2", "u3", "red");
  }
  return inst;
}

ColoredInstance GenBichromaticC4(const Rational& bound) {
  ColoredInstance inst;
  AddEdge(inst, "a", "b", "x");
  AddEdge(inst, "b", "c", "y");
  AddEdge(inst, "c", "d", "x");
  AddEdge(inst, "d", "a", "y");
  inst.bounds["x"] = bound;
  inst.bounds["y"] = bound;
  inst.bipartition = Bipartition{{"a", "c"}, {"b", "d"}};
  return inst;
}

ColoredInstance Generate(const FamilyParams& params) {
  switch (params.family) {
    case Family::kHypercube:
      return GenHypercube(params.param, params.eps);
    case Family::kC4Chain:
      return GenC4Chain(params.param);
    case Family::kCyclicLatin:
      return GenCyclicLatin(params.param);
    case Family::kExemplar:
      return GenExemplar(params.which);
  }
  throw InvalidArgumentError("unknown family");
}

std::optional<std::pair<int, Rational>> RecognizeHypercube(
    const ColoredInstance& inst) {
  const int ell = static_cast<int>(inst.bounds.size());
  if (ell < 2 || ell > 20 || inst.bounds.empty()) return std::nullopt;
  const Rational w = inst.bounds.begin()->second;
  const Rational eps = Rational(1) - w / Rational(2);
  if (eps.sign() <= 0 || eps >= Rational(1, 2)) return std::nullopt;
  const ColoredInstance expected = GenHypercube(ell, eps);
  if (InstanceToJson(expected) != InstanceToJson(inst)) {
    // Same graph without the optional bipartition still counts.
    ColoredInstance stripped = expected;
    stripped.bipartition.reset();
    if (InstanceToJson(stripped) != InstanceToJson(inst)) return std::nullopt;
  }
  return std::make_pair(ell, eps);
}

}  // namespace colorlab
