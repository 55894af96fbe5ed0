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

// Deterministic constructors for the integrality-gap instance families.

#ifndef COLORLAB_GENERATORS_H_
#define COLORLAB_GENERATORS_H_

#include <optional>
#include <string>

#include "colorlab/model.h"
#include "colorlab/rational.h"

namespace colorlab {

enum class Family { kHypercube, kC4Chain, kCyclicLatin, kExemplar };
enum class Exemplar { kLeft, kRight };

struct FamilyParams {
  Family family = Family::kHypercube;
  // ell for kHypercube and kCyclicLatin, k for kC4Chain; unused for exemplars.
  int param = 2;
  Rational eps = Rational(1, 100);
  Exemplar which = Exemplar::kLeft;
};

// Parses "hypercube", "c4chain", "cyclic", "exemplar".
Family ParseFamily(const std::string& name);
std::string ToString(Family family);
Exemplar ParseExemplar(const std::string& name);

// The ell-dimensional hypercube. Vertex ids are ell-bit strings (most
// significant bit first); the edge between x and x ^ (1 << d) gets color
// "d<d>", so each color class is a perfect matching of 2^(ell-1) edges. Every
// bound is 2(1 - eps). Requires ell >= 2 and 0 < eps < 1/2.
ColoredInstance GenHypercube(int ell, const Rational& eps);

// k alternating 4-cycles a<i>_1..a<i>_4 (colors r<i> on {1,2},{3,4} and b<i>
// on {1,4},{2,3}) joined cyclically by edges {a<i>_2, a<i+1>_1} and
// {a<i>_3, a<i+1>_4} of the shared color "cw". All bounds 1. Requires k >= 2.
ColoredInstance GenC4Chain(int k);

// K_{k,k} with k = 2 ell, left side v0..v<k-1>, right side u0..u<k-1>; edge
// (v_j, u_{(j+d) mod k}) has color c<d>. All bounds 1. Requires ell >= 1.
ColoredInstance GenCyclicLatin(int ell);

// Two four-vertex graphs of matching number one. kLeft is the path
// v1-v2-v3-v4 with blue {v1,v2},{v3,v4} and red {v2,v3}; kRight has green
// {u1,u2},{u3,u4}, blue {u1,u3} and red {u2,u3}.
ColoredInstance GenExemplar(Exemplar which);

// A single alternating 4-cycle a-b-c-d with colors "x" on {a,b},{c,d} and
// "y" on {b,c},{d,a}, both bounded by `bound` (1 gives the rainbow C4).
ColoredInstance GenBichromaticC4(const Rational& bound = Rational(1));

ColoredInstance Generate(const FamilyParams& params);

// If `inst` equals GenHypercube(ell, eps) for some ell >= 2 and eps, returns
// (ell, eps).
std::optional<std::pair<int, Rational>> RecognizeHypercube(
    const ColoredInstance& inst);

}  // namespace colorlab

#endif  // COLORLAB_GENERATORS_H_
