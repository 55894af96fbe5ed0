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

// Alternating bi-chromatic 4-cycles: enumeration, the LP strengthened by one
// cut per cycle, and the check that two Sherali-Adams rounds imply the cut.

#ifndef COLORLAB_BICHROMATIC_H_
#define COLORLAB_BICHROMATIC_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "colorlab/lp.h"
#include "colorlab/model.h"
#include "colorlab/rational.h"
#include "colorlab/sherali_adams.h"

namespace colorlab {

// Vertices a, b, c, d in cyclic order with a the least vertex id and b < d.
// edges[i] joins vertices[i] and vertices[(i + 1) % 4]; edges 0 and 2 have
// color_x, edges 1 and 3 have color_y.
struct BiChromaticCycle {
  std::array<VertexId, 4> vertices;
  std::array<int, 4> edges;
  ColorId color_x;
  ColorId color_y;

  std::string Name() const;  // "a-b-c-d"
};

// Every alternating two-colored 4-cycle exactly once, sorted by vertices.
std::vector<BiChromaticCycle> EnumerateBc(const ColoredInstance& inst);

// BuildMc(inst) plus "bc:<name>" rows sum_{e in cycle} x_e <= 1.
RationalLP EnhancedLp(const ColoredInstance& inst);

struct ForcingRow {
  std::array<int, 2> pair;   // edge indices whose product is forced to 0
  std::string row;           // lifted row doing the forcing, empty if none
};

struct Sa2Report {
  Rational max_value;          // max sum of the cycle's singletons at level 2
  bool unit_bound_cycle = false; // both cycle colors have bound 1
  std::optional<bool> implied; // max_value <= 1; only set in scope
  // One entry per edge pair of the cycle: same-colored pairs first, then
  // adjacent pairs.
  std::vector<ForcingRow> forcing;
  bool algebra_confirmed = false;  // every pair has a forcing row
  std::int64_t lifted_variables = 0;
  std::int64_t lifted_rows = 0;
};

// Maximizes the cycle's edge sum over the level-2 lift of BuildMc(inst) and
// looks for lifted rows with G = {e}, D = {} whose coefficients are all
// nonpositive with zero constant; such a row forces every product it touches
// to 0 because the lift implies y >= 0.
Sa2Report Sa2ImpliesBc(const ColoredInstance& inst, const BiChromaticCycle& bc,
                       const SaOptions& options = {});

}  // namespace colorlab

#endif  // COLORLAB_BICHROMATIC_H_
