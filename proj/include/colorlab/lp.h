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

#ifndef COLORLAB_LP_H_
#define COLORLAB_LP_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlab/rational.h"

namespace colorlab {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMaximize, kMinimize };

std::string ToString(Relation rel);

// Sparse linear form: (variable index, coefficient) pairs.
using LinearTerms = std::vector<std::pair<int, Rational>>;

struct LpRow {
  std::string name;
  LinearTerms terms;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Every variable has lower bound 0; the upper bound is either a rational or
// absent (+infinity).
struct LpVariable {
  std::string name;
  std::optional<Rational> upper;
};

struct RationalLP {
  std::vector<LpVariable> variables;
  std::vector<LpRow> rows;
  LinearTerms objective;
  Sense sense = Sense::kMaximize;

  int num_variables() const { return static_cast<int>(variables.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int AddVariable(std::string name, std::optional<Rational> upper);
  int AddRow(std::string name, LinearTerms terms, Relation rel, Rational rhs);
};

// Problems with the LP itself: out-of-range variable references, negative
// upper bounds. Empty when well formed.
std::vector<std::string> ValidateLp(const RationalLP& lp);

// Sums duplicate indices and drops zero coefficients; result sorted by index.
LinearTerms Normalize(LinearTerms terms);
Rational Evaluate(const LinearTerms& terms, const std::vector<Rational>& x);

// Plain-text exact export, one item per line:
//   maximize: 1/1 x0 + 1/1 x1
//   row deg:a: 1/1 x0 + 1/1 x3 <= 1/1
//   bound x0: 0/1 <= x0 <= 1/1
std::string ExportLpText(const RationalLP& lp);

}  // namespace colorlab

#endif  // COLORLAB_LP_H_
