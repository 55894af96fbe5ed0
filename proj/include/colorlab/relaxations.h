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

// LP relaxations of bounded color matching.
//
// Naming is stable and used by other modules: edge variables are "x<i>" for
// edge index i, vertex rows "deg:<vertex>", color rows "color:<color>",
// hypergraph vertex rows "vtx:<id>", cover rows "cover:<i>", dual variables
// "y:<id>" and Chvatal cuts "cg:<row>" / "cg:sum".

#ifndef COLORLAB_RELAXATIONS_H_
#define COLORLAB_RELAXATIONS_H_

#include <vector>

#include "colorlab/lp.h"
#include "colorlab/model.h"

namespace colorlab {

// max sum p_e x_e subject to degree rows <= 1, color rows <= w_j and
// 0 <= x_e <= 1. Throws InvalidArgumentError on an invalid instance.
RationalLP BuildMc(const ColoredInstance& inst);

// Hypergraph matching LP: max sum x_e, one row <= 1 per vertex, x_e >= 0.
RationalLP BuildHm(const Hypergraph3& h);

// Fractional vertex cover: min sum y_v, one row >= 1 per hyperedge, y >= 0.
RationalLP BuildDual(const Hypergraph3& h);

// Indices of the "color:*" rows of an LP built by BuildMc.
std::vector<int> ColorRows(const RationalLP& lp);

struct ChvatalOptions {
  bool per_row = true;    // u = indicator vector of each selected row
  bool aggregate = true;  // u = all-ones over the selected rows
};

// Appends rank-one Chvatal-Gomory cuts floor(u^T A) x <= floor(u^T b). Rows
// are read in <= form (>= rows negated, equalities as <=). Valid because all
// variables are nonnegative. An empty selection returns `lp` unchanged.
RationalLP ChvatalRoundOnes(const RationalLP& lp, const std::vector<int>& rows,
                            const ChvatalOptions& options = {});

}  // namespace colorlab

#endif  // COLORLAB_RELAXATIONS_H_
