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


// Brute-force ground truth: exact maximum colorful matchings, Latin-square
// transversals, the Ryser-style matching of odd cyclic squares, and
// integrality-gap reports.

#ifndef COLORLAB_ORACLE_H_
#define COLORLAB_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlab/model.h"
#include "colorlab/rational.h"
#include "colorlab/sherali_adams.h"

namespace colorlab {

struct MatchingLimits {
  int max_edges = 26;
  std::int64_t max_nodes = 200'000'000;
};

struct ColorfulMatching {
  int size = 0;
  std::vector<int> edges;  // indices into inst.edges, ascending
};

// Exact maximum-cardinality matching using at most floor(w_j) edges of color
// j. Depth-first search over the edges in order, pruned by the number of
// still usable edges, by the free vertices and by the per-color slack.
// Requires unit profits; throws BudgetError beyond the limits.
ColorfulMatching MaxColorfulMatching(const ColoredInstance& inst,
                                     const MatchingLimits& limits = {});

// Scans the edges in order and keeps each one that remains feasible.
ColorfulMatching GreedyColorfulMatching(const ColoredInstance& inst);

// True iff `edges` is a matching within every color bound.
bool IsColorfulMatching(const ColoredInstance& inst, const std::vector<int>& edges);

using LatinSquare = std::vector<std::vector<int>>;  // symbols 0..k-1

// Problems that keep `table` from being a Latin square; empty iff valid.
std::vector<std::string> ValidateLatinSquare(const LatinSquare& table);

// The Cayley table of Z_k in the form A[i][j] = (j - i) mod k, which is the
// color table of GenCyclicLatin: edge (v_i, u_j) has color c_{A[i][j]}.
LatinSquare CyclicLatinSquare(int k);

using Cell = std::pair<int, int>;  // (row, column)

// Exact search for k cells covering every row, column and symbol once. The
// result lists one cell per row in row order. Throws InvalidArgumentError
// when `table` is not a Latin square.
std::optional<std::vector<Cell>> LatinTransversal(const LatinSquare& table);

struct RyserEdge {
  int v = 0;      // left vertex v_j
  int u = 0;      // right vertex u_{2j mod k}
  int color = 0;  // c_j
};

// The perfect colorful matching v_j -- u_{2j mod k} of the cyclic K_{k,k}.
// Requires odd k >= 1 (for even k the map j -> 2j mod k is not injective).
std::vector<RyserEdge> RyserMatching(int k);

struct GapReport {
  std::string fingerprint;
  Rational lp_value;
  Rational ilp_value;
  Rational gap;  // lp / ilp
  std::vector<int> witness;
  std::vector<std::pair<int, Rational>> sa_values;  // (level, lifted optimum)
};

struct GapOptions {
  MatchingLimits matching;
  SaOptions sa;
};

// Exact LP optimum of BuildMc, exact ILP by MaxColorfulMatching, their ratio
// and the lifted optimum of the edge sum for each requested level.
GapReport MakeGapReport(const ColoredInstance& inst, const std::vector<int>& sa_levels,
                        const GapOptions& options = {});

struct RandomInstanceParams {
  int max_vertices = 8;
  int max_edges = 10;
  int max_colors = 4;
};

// A random simple graph with unit profits and all bounds 1, deterministic in
// `seed`. It has 1..max_edges edges and no isolated vertex.
ColoredInstance RandomRainbowInstance(std::uint64_t seed,
                                      const RandomInstanceParams& params = {});

}  // namespace colorlab

#endif  // COLORLAB_ORACLE_H_
