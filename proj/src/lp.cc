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

#include "colorlab/lp.h"

#include <algorithm>
#include <sstream>

namespace colorlab {
namespace {

void WriteTerms(std::ostringstream& out, const RationalLP& lp,
                const LinearTerms& terms) {
  if (terms.empty()) {
    out << "0/1";
    return;
  }
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out << " + ";
    out << terms[i].second.ToString() << " " << lp.variables[terms[i].first].name;
  }
}

}  // namespace

std::string ToString(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kEqual:
      return "=";
  }
  return "?";
}

int RationalLP::AddVariable(std::string name, std::optional<Rational> upper) {
  variables.push_back(LpVariable{std::move(name), std::move(upper)});
  return num_variables() - 1;
}

int RationalLP::AddRow(std::string name, LinearTerms terms, Relation rel,
                       Rational rhs) {
  rows.push_back(LpRow{std::move(name), std::move(terms), rel, std::move(rhs)});
  return num_rows() - 1;
}

std::vector<std::string> ValidateLp(const RationalLP& lp) {
  std::vector<std::string> out;
  const int n = lp.num_variables();
  auto check_terms = [&](const LinearTerms& terms, const std::string& where) {
    for (const auto& [j, c] : terms) {
      if (j < 0 || j >= n) {
        out.push_back(where + " references undeclared variable " + std::to_string(j));
      }
    }
  };
  for (const LpRow& row : lp.rows) check_terms(row.terms, "row " + row.name);
  check_terms(lp.objective, "objective");
  for (const LpVariable& v : lp.variables) {
    if (v.upper && v.upper->sign() < 0) {
      out.push_back("variable " + v.name + " has negative upper bound");
    }
  }
  return out;
}

LinearTerms Normalize(LinearTerms terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LinearTerms out;
  for (auto& [j, c] : terms) {
    if (!out.empty() && out.back().first == j) {
      out.back().second += c;
    } else {
      out.emplace_back(j, std::move(c));
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

Rational Evaluate(const LinearTerms& terms, const std::vector<Rational>& x) {
  Rational sum;
  for (const auto& [j, c] : terms) sum.AddMul(c, x[j]);
  return sum;
}

std::string ExportLpText(const RationalLP& lp) {
  std::ostringstream out;
  out << (lp.sense == Sense::kMaximize ? "maximize: " : "minimize: ");
  WriteTerms(out, lp, lp.objective);
  out << "\n";
  for (const LpRow& row : lp.rows) {
    out << "row " << row.name << ": ";
    WriteTerms(out, lp, row.terms);
    out << " " << ToString(row.relation) << " " << row.rhs.ToString() << "\n";
  }
  for (const LpVariable& v : lp.variables) {
    out << "bound " << v.name << ": 0/1 <= " << v.name << " <= "
        << (v.upper ? v.upper->ToString() : std::string("inf")) << "\n";
  }
  return out.str();
}

}  // namespace colorlab
