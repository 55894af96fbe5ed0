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

// JSON instance format:
//
//   {"vertices": ["a", "b"],
//    "edges": [{"u": "a", "v": "b", "color": "c0", "profit": "1/1"}],
//    "bounds": {"c0": "2/1"},
//    "bipartition": [["a"], ["b"]]}
//
// "profit" and "bipartition" are optional. Rationals are always "num/den"
// strings, never JSON numbers.

#ifndef COLORLAB_INSTANCE_IO_H_
#define COLORLAB_INSTANCE_IO_H_

#include <string>

#include "json.hpp"
#include "colorlab/model.h"
#include "colorlab/rational.h"

namespace colorlab {

using Json = nlohmann::ordered_json;

Json RationalToJson(const Rational& r);
// Accepts only strings; throws InvalidArgumentError otherwise.
Rational RationalFromJson(const Json& j);

Json InstanceToJson(const ColoredInstance& inst);
ColoredInstance InstanceFromJson(const Json& j);

// Throws InvalidArgumentError on malformed content and Error on IO failures.
ColoredInstance ReadInstanceFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

// Stable 64-bit FNV-1a hash of the canonical JSON, as 16 hex digits.
std::string Fingerprint(const ColoredInstance& inst);

}  // namespace colorlab

#endif  // COLORLAB_INSTANCE_IO_H_
