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

#include "colorlab/oracle.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "colorlab/errors.h"
#include "colorlab/instance_io.h"
#include "colorlab/relaxations.h"
#include "colorlab/simplex.h"

namespace colorlab {
namespace {

// Per-edge vertex and color indices plus the integral color capacities.
struct Indexed {
  std::vector<std::array<int, 2>> ends;
  std::vector<int> color;
  std::vector<int> capacity;
  int num_vertices = 0;
};

Indexed IndexInstance(const ColoredInstance& inst) {
  Indexed ix;
  std::map<VertexId, int> vid;
  for (const VertexId& v : inst.vertices) vid.emplace(v, static_cast<int>(vid.size()));
  std::map<ColorId, int> cid;
  for (const auto& [c, w] : inst.bounds) {
    cid.emplace(c, static_cast<int>(cid.size()));
    const Rational cap = w.Floor();
    ix.capacity.push_back(
        static_cast<int>(std::min<std::int64_t>(cap.ToInt64(), inst.num_edges())));
  }
  for (const Edge& e : inst.edges) {
    ix.ends.push_back({vid.at(e.u), vid.at(e.v)});
    ix.color.push_back(cid.at(e.color));
  }
  ix.num_vertices = static_cast<int>(vid.size());
  return ix;
}

void RequireMatchingInput(const ColoredInstance& inst) {
  if (const auto problems = Validate(inst); !problems.empty()) {
    throw InvalidArgumentError("invalid instance: " + problems.front().message);
  }
  if (!inst.AllProfitsOne()) {
    throw InvalidArgumentError("colorful matching oracle needs unit profits");
  }
}

}  // namespace

ColorfulMatching MaxColorfulMatching(const ColoredInstance& inst,
                                     const MatchingLimits& limits) {
  RequireMatchingInput(inst);
  if (inst.num_edges() > limits.max_edges) {
    throw BudgetError("colorful matching search limited to " +
                      std::to_string(limits.max_edges) + " edges, got " +
                      std::to_string(inst.num_edges()));
  }
  const Indexed ix = IndexInstance(inst);
  const int m = inst.num_edges();
  std::vector<char> used(ix.num_vertices, 0);
  std::vector<int> slack = ix.capacity;
  std::vector<int> chosen;
  ColorfulMatching best = GreedyColorfulMatching(inst);
  std::int64_t nodes = 0;

  std::vector<int> live_by_color(slack.size());
  std::vector<char> vertex_seen(ix.num_vertices);
  auto usable = [&](int e) {
    return !used[ix.ends[e][0]] && !used[ix.ends[e][1]] && slack[ix.color[e]] > 0;
  };
  // Upper bound on the edges that edges i.. can still add.
  auto bound = [&](int i) {
    std::fill(live_by_color.begin(), live_by_color.end(), 0);
    std::fill(vertex_seen.begin(), vertex_seen.end(), 0);
    int live = 0, free_vertices = 0;
    for (int e = i; e < m; ++e) {
      if (!usable(e)) continue;
      ++live;
      ++live_by_color[ix.color[e]];
      for (int x : ix.ends[e]) {
        if (!vertex_seen[x]) {
          vertex_seen[x] = 1;
          ++free_vertices;
        }
      }
    }
    int by_color = 0;
    for (size_t c = 0; c < slack.size(); ++c) by_color += std::min(slack[c], live_by_color[c]);
    return std::min({live, free_vertices / 2, by_color});
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (++nodes > limits.max_nodes) {
      throw BudgetError("colorful matching search exceeded " +
                        std::to_string(limits.max_nodes) + " nodes");
    }
    while (i < m && !usable(i)) ++i;
    const int size = static_cast<int>(chosen.size());
    if (i == m) {
      if (size > best.size) best = ColorfulMatching{size, chosen};
      return;
    }
    if (size + bound(i) <= best.size) return;
    used[ix.ends[i][0]] = used[ix.ends[i][1]] = 1;
    --slack[ix.color[i]];
    chosen.push_back(i);
    self(self, i + 1);
    chosen.pop_back();
    ++slack[ix.color[i]];
    used[ix.ends[i][0]] = used[ix.ends[i][1]] = 0;
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

ColorfulMatching GreedyColorfulMatching(const ColoredInstance& inst) {
  RequireMatchingInput(inst);
  const Indexed ix = IndexInstance(inst);
  std::vector<char> used(ix.num_vertices, 0);
  std::vector<int> slack = ix.capacity;
  ColorfulMatching out;
  for (int e = 0; e < inst.num_edges(); ++e) {
    if (used[ix.ends[e][0]] || used[ix.ends[e][1]] || slack[ix.color[e]] == 0) continue;
    used[ix.ends[e][0]] = used[ix.ends[e][1]] = 1;
    --slack[ix.color[e]];
    out.edges.push_back(e);
  }
  out.size = static_cast<int>(out.edges.size());
  return out;
}

bool IsColorfulMatching(const ColoredInstance& inst, const std::vector<int>& edges) {
  std::set<VertexId> seen;
  std::map<ColorId, int> count;
  for (int e : edges) {
    if (e < 0 || e >= inst.num_edges()) return false;
    const Edge& edge = inst.edges[e];
    if (!seen.insert(edge.u).second || !seen.insert(edge.v).second) return false;
    ++count[edge.color];
  }
  for (const auto& [c, n] : count) {
    const auto it = inst.bounds.find(c);
    if (it == inst.bounds.end() || Rational(n) > it->second) return false;
  }
  return true;
}

std::vector<std::string> ValidateLatinSquare(const LatinSquare& table) {
  std::vector<std::string> out;
  const int k = static_cast<int>(table.size());
  if (k == 0) out.push_back("empty table");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(table[i].size()) != k) {
      out.push_back("row " + std::to_string(i) + " has " +
                    std::to_string(table[i].size()) + " cells, expected " +
                    std::to_string(k));
      return out;
    }
  }
  auto check = [&](const std::string& line, auto&& at) {
    std::vector<char> seen(k, 0);
    for (int j = 0; j < k; ++j) {
      const int s = at(j);
      if (s < 0 || s >= k) {
        out.push_back(line + " holds symbol " + std::to_string(s) + " outside 0.." +
                      std::to_string(k - 1));
      } else if (seen[s]++) {
        out.push_back(line + " repeats symbol " + std::to_string(s));
      }
    }
  };
  for (int i = 0; i < k; ++i) {
    check("row " + std::to_string(i), [&](int j) { return table[i][j]; });
    check("column " + std::to_string(i), [&](int j) { return table[j][i]; });
  }
  return out;
}

LatinSquare CyclicLatinSquare(int k) {
  if (k < 1) throw InvalidArgumentError("cyclic Latin square needs order >= 1");
  LatinSquare t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) t[i][j] = ((j - i) % k + k) % k;
  }
  return t;
}

std::optional<std::vector<Cell>> LatinTransversal(const LatinSquare& table) {
  if (const auto problems = ValidateLatinSquare(table); !problems.empty()) {
    throw InvalidArgumentError("not a Latin square: " + problems.front());
  }
  const int k = static_cast<int>(table.size());
  std::vector<char> col_used(k, 0), sym_used(k, 0);
  std::vector<Cell> cells;
  auto rec = [&](auto&& self, int row) -> bool {
    if (row == k) return true;
    for (int j = 0; j < k; ++j) {
      const int s = table[row][j];
      if (col_used[j] || sym_used[s]) continue;
      col_used[j] = sym_used[s] = 1;
      cells.emplace_back(row, j);
      if (self(self, row + 1)) return true;
      cells.pop_back();
      col_used[j] = sym_used[s] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return cells;
}

std::vector<RyserEdge> RyserMatching(int k) {
  if (k < 1 || k % 2 == 0) {
    throw InvalidArgumentError("Ryser matching needs odd k >= 1, got " + std::to_string(k));
  }
  std::vector<RyserEdge> out;
  for (int j = 0; j < k; ++j) out.push_back(RyserEdge{j, (2 * j) % k, j});
  return out;
}

GapReport MakeGapReport(const ColoredInstance& inst, const std::vector<int>& sa_levels,
                        const GapOptions& options) {
  RequireMatchingInput(inst);
  GapReport report;
  report.fingerprint = Fingerprint(inst);
  const RationalLP lp = BuildMc(inst);
  const BasicSolution sol = Solve(lp, options.sa.solve);
  if (sol.status != SolveStatus::kOptimal) {
    throw DiagnosticError("relaxation is " + ToString(sol.status));
  }
  report.lp_value = sol.objective_value;
  const ColorfulMatching m = MaxColorfulMatching(inst, options.matching);
  report.ilp_value = Rational(m.size);
  report.witness = m.edges;
  report.gap = report.ilp_value.is_zero() ? Rational(1) : report.lp_value / report.ilp_value;
  for (int level : sa_levels) {
    const SaOptimum opt = OptimizeLift(lp, level, lp.objective, options.sa);
    if (opt.status != SolveStatus::kOptimal) {
      throw DiagnosticError("level " + std::to_string(level) + " lift is " +
                            ToString(opt.status));
    }
    report.sa_values.emplace_back(level, opt.value);
  }
  return report;
}

ColoredInstance RandomRainbowInstance(std::uint64_t seed,
                                      const RandomInstanceParams& params) {
  if (params.max_vertices < 2 || params.max_edges < 1 || params.max_colors < 1) {
    throw InvalidArgumentError("random instance needs >= 2 vertices, >= 1 edge, >= 1 color");
  }
  // Plain modular reduction of the raw engine output is reproducible across
  // standard libraries, unlike the distribution classes.
  std::mt19937_64 rng(seed);
  auto draw = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  const int n = 2 + draw(params.max_vertices - 1);
  const int max_pairs = n * (n - 1) / 2;
  const int m = 1 + draw(std::min(params.max_edges, max_pairs));
  const int colors = 1 + draw(params.max_colors);
  std::set<std::pair<int, int>> pairs;
  while (static_cast<int>(pairs.size()) < m) {
    int a = draw(n), b = draw(n);
    if (a == b) continue;
    pairs.emplace(std::min(a, b), std::max(a, b));
  }
  ColoredInstance inst;
  for (const auto& [a, b] : pairs) {
    Edge e{"v" + std::to_string(a), "v" + std::to_string(b),
           "c" + std::to_string(draw(colors))};
    inst.vertices.insert(e.u);
    inst.vertices.insert(e.v);
    inst.bounds[e.color] = Rational(1);
    inst.edges.push_back(std::move(e));
  }
  return inst;
}

}  // namespace colorlab
