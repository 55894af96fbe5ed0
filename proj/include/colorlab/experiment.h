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


// Batch experiments described by a JSON configuration:
//
//   {"instances": [{"name": "q3", "family": "hypercube", "param": 3,
//                   "eps": "1/100"},
//                  {"name": "mine", "file": "inst.json"}],
//    "operations": ["lp", "gap", "cert", "bichrom", "sa"],
//    "sa_levels": [1, 2],
//    "eps_sweep": ["1/10", "1/100"],
//    "output_dir": "out",
//    "csv": "out/gap.csv",
//    "budgets": {"max_lift_variables": 200000, "threads": 4}}
//
// Each instance runs the listed operations in order on a worker pool. One
// JSON file per instance lands in <output_dir>/items/, and a summary with the
// failure list in <output_dir>/summary.json.

#ifndef COLORLAB_EXPERIMENT_H_
#define COLORLAB_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colorlab/generators.h"
#include "colorlab/instance_io.h"
#include "colorlab/rational.h"

namespace colorlab {

struct Budgets {
  std::int64_t max_lift_variables = 200'000;
  std::int64_t max_dictionary_entries = 60'000'000;
  int max_matching_edges = 26;
  int threads = 1;
};

// Defaults, with max_lift_variables taken from COLORLAB_BUDGET when that
// variable holds a positive integer.
Budgets DefaultBudgets();

struct InstanceSource {
  std::string name;
  std::string file;                   // non-empty for file sources
  std::optional<FamilyParams> family;  // set for generated sources
};

struct ExperimentConfig {
  std::vector<InstanceSource> instances;
  std::vector<std::string> operations;
  std::vector<int> sa_levels;
  // Every hypercube source is run once per listed eps instead of its own.
  std::vector<Rational> eps_sweep;
  std::string output_dir;
  std::string csv_path;  // empty: no CSV
  Budgets budgets;
};

inline const std::vector<std::string>& KnownOperations() {
  static const std::vector<std::string> ops = {"lp", "gap", "cert", "bichrom", "sa"};
  return ops;
}

// Relative file and output paths are resolved against `base_dir`. Throws
// InvalidArgumentError for malformed content, unknown operations,
// non-positive budgets and instance files that do not exist.
ExperimentConfig ParseExperimentConfig(const Json& j, const std::string& base_dir,
                                       const Budgets& defaults = DefaultBudgets());
ExperimentConfig ReadExperimentConfig(const std::string& path);

struct ItemResult {
  std::string name;
  Json report;
  std::vector<std::string> failures;  // failed checks
  std::vector<std::string> errors;    // budget, IO and input errors
};

struct ExperimentResult {
  std::vector<ItemResult> items;  // in configuration order
  // 0 when everything passed, 1 when a check failed, 2 on any error.
  int exit_code = 0;
  Json summary;
};

// Runs every item and writes the artifacts. Artifact contents depend only
// on the configuration and the inputs.
ExperimentResult RunExperiment(const ExperimentConfig& config);

// Runs one item without writing anything.
ItemResult RunItem(const std::string& name, const ColoredInstance& inst,
                   const ExperimentConfig& config);

}  // namespace colorlab

#endif  // COLORLAB_EXPERIMENT_H_
