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


// The reproduction suite: eight numbered criteria, each recomputed from
// scratch with its own time limit. Shared by the acceptance test binary and
// `colorlab run --reproduce-paper`.

#ifndef COLORLAB_ACCEPTANCE_H_
#define COLORLAB_ACCEPTANCE_H_

#include <ostream>
#include <string>
#include <vector>

#include "colorlab/instance_io.h"

namespace colorlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  // Measured values first, then one "; "-separated entry per failed check.
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

inline constexpr int kNumCriteria = 8;

// Runs criterion `id` in 1..kNumCriteria. Errors thrown while computing are
// caught and reported as a failed criterion.
CriterionResult RunCriterion(int id);

// Runs the given criteria (all when empty), writing each line to `progress`
// as soon as it is known.
std::vector<CriterionResult> RunAcceptance(const std::vector<int>& ids = {},
                                           std::ostream* progress = nullptr);

// "PASS 5 exemplar optima: left 3/2, right 5/3 [0.0 s of 1 s]".
std::string FormatCriterion(const CriterionResult& result);

Json AcceptanceToJson(const std::vector<CriterionResult>& results);

}  // namespace colorlab

#endif  // COLORLAB_ACCEPTANCE_H_
