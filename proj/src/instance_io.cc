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

#include "colorlab/instance_io.h"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "colorlab/errors.h"

namespace colorlab {

Json RationalToJson(const Rational& r) { return r.ToString(); }

Rational RationalFromJson(const Json& j) {
  if (!j.is_string()) {
    throw InvalidArgumentError("rational must be a \"p/q\" string, got " +
                               j.dump());
  }
  return Rational::Parse(j.get<std::string>());
}

Json InstanceToJson(const ColoredInstance& inst) {
  Json j;
  j["vertices"] = Json::array();
  for (const VertexId& v : inst.vertices) j["vertices"].push_back(v);
  j["edges"] = Json::array();
  for (const Edge& e : inst.edges) {
    j["edges"].push_back({{"u", e.u},
                          {"v", e.v},
                          {"color", e.color},
                          {"profit", RationalToJson(e.profit)}});
  }
  j["bounds"] = Json::object();
  for (const auto& [color, w] : inst.bounds) j["bounds"][color] = RationalToJson(w);
  if (inst.bipartition) {
    Json left = Json::array();
    Json right = Json::array();
    for (const VertexId& v : inst.bipartition->left) left.push_back(v);
    for (const VertexId& v : inst.bipartition->right) right.push_back(v);
    j["bipartition"] = Json::array({left, right});
  }
  return j;
}

ColoredInstance InstanceFromJson(const Json& j) {
  try {
    ColoredInstance inst;
    for (const Json& v : j.at("vertices")) inst.vertices.insert(v.get<std::string>());
    for (const Json& e : j.at("edges")) {
      Edge edge{e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                e.at("color").get<std::string>(), Rational(1)};
      if (e.contains("profit")) edge.profit = RationalFromJson(e.at("profit"));
      inst.edges.push_back(std::move(edge));
    }
    for (const auto& [color, w] : j.at("bounds").items()) {
      inst.bounds.emplace(color, RationalFromJson(w));
    }
    if (j.contains("bipartition") && !j.at("bipartition").is_null()) {
      const Json& bp = j.at("bipartition");
      if (!bp.is_array() || bp.size() != 2) {
        throw InvalidArgumentError("bipartition must be a pair of vertex lists");
      }
      Bipartition b;
      for (const Json& v : bp[0]) b.left.insert(v.get<std::string>());
      for (const Json& v : bp[1]) b.right.insert(v.get<std::string>());
      inst.bipartition = std::move(b);
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("malformed instance JSON: ") + e.what());
  }
}

ColoredInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError("'" + path + "' is not valid JSON: " + e.what());
  }
  return InstanceFromJson(j);
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string Fingerprint(const ColoredInstance& inst) {
  const std::string text = InstanceToJson(inst).dump();
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace colorlab
