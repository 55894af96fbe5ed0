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


// JSON renderings of the library's results, shared by the command-line tool
// and the experiment runner. Rationals are "p/q" strings and every object
// has a fixed key order, so equal results serialize to equal bytes.

#ifndef COLORLAB_REPORT_JSON_H_
#define COLORLAB_REPORT_JSON_H_

#include <string>

#include "colorlab/bichromatic.h"
#include "colorlab/dual_certificate.h"
#include "colorlab/instance_io.h"
#include "colorlab/lp.h"
#include "colorlab/oracle.h"
#include "colorlab/sherali_adams.h"
#include "colorlab/simplex.h"

namespace colorlab {

// "row:<name>", "lower:<var>" or "upper:<var>".
std::string ConstraintId(const RationalLP& lp, const TightConstraint& c);

// {status, objective_value, values, basis, pivots}.
Json SolutionToJson(const RationalLP& lp, const BasicSolution& sol);

// {feasible, constraints_checked, witness?}.
Json VerdictToJson(const SaVerdict& verdict);

// {value, mu, q, bound, bipartite, ..., checks, trace}.
Json CertificateToJson(const Hypergraph3& h, const DualCertificate& cert,
                       const CertificateReport& report);

Json GapReportToJson(const GapReport& report);

Json CycleToJson(const ColoredInstance& inst, const BiChromaticCycle& bc);

Json Sa2ReportToJson(const ColoredInstance& inst, const Sa2Report& report);

}  // namespace colorlab

#endif  // COLORLAB_REPORT_JSON_H_
