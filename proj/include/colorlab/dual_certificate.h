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

// Fractional vertex covers of 3-uniform hypergraphs built by recursion on
// the support of a basic optimal matching, together with the exact matching
// number (mu) and packing number of alternating-cycle copies (q) they are
// measured against.
//
// The certificate is assembled in three layers:
//   1. every hyperedge with x_e = 1 puts weight 1 on its lowest vertex and is
//      removed together with everything meeting it;
//   2. the recursion runs on the support {e : 0 < x_e < 1};
//   3. hyperedges still uncovered (those with x_e = 0 can be) receive an
//      exact minimum residual cover.
// Layers 1 and 2 bound the LP optimum: x restricted to its support is still
// optimal there, so LP(H) <= peeled + support_value. If layer 3 pushes the
// total above the (mu, q) bound, the weights are replaced by an exact optimal
// cover of H, whose value equals LP(H) and is then at most the recursion value.
// Each recursion step records its case, the bound it was held to and what
// was verified, so a failed bound points at the step that broke it.

#ifndef COLORLAB_DUAL_CERTIFICATE_H_
#define COLORLAB_DUAL_CERTIFICATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colorlab/model.h"
#include "colorlab/rational.h"
#include "colorlab/simplex.h"

namespace colorlab {

using EdgeSet = std::vector<int>;  // sorted hyperedge indices

struct OracleLimits {
  int max_edges = 200;               // refuse larger hypergraphs outright
  std::int64_t max_nodes = 50'000'000;  // search nodes per call
};

// Exact maximum matching among the hyperedges in `edges` (all when omitted).
int MuOracle(const Hypergraph3& h, const OracleLimits& limits = {});
int MuOracle(const Hypergraph3& h, const EdgeSet& edges, const OracleLimits& limits = {});

// True iff the hyperedges form a copy of the alternating 4-cycle hypergraph:
// four distinct graph pairs on four graph vertices, each of degree 2, and two
// color vertices each carrying two hyperedges disjoint on graph vertices.
bool IsBc(const Hypergraph3& h, const EdgeSet& edges);

// All 4-edge subsets of `edges` satisfying IsBc, each as a sorted EdgeSet.
std::vector<EdgeSet> FindBcCopies(const Hypergraph3& h, const EdgeSet& edges);

// Maximum number of copies that are pairwise disjoint on all hypergraph
// vertices, graph and color alike.
int QOracle(const Hypergraph3& h, const EdgeSet& edges, const OracleLimits& limits = {});
int QOracle(const Hypergraph3& h, const OracleLimits& limits = {});
int QOracle(const ColoredInstance& inst, const OracleLimits& limits = {});

struct LowDegree {
  int vertex = -1;
  std::vector<int> edges;  // one or two hyperedge indices
};

// A vertex of degree 1 or 2 among `edges`. Degree-2 vertices are preferred;
// ties go to the lowest vertex index. Throws DiagnosticError when every
// vertex has degree 0 or at least 3, which a basic solution rules out.
LowDegree LowDegreeVertex(const Hypergraph3& h, const EdgeSet& edges);

Rational GeneralBound(int mu, int q);    // 5 mu / 3 + q / 3
Rational BipartiteBound(int mu, int q);  // 3 mu / 2 + q / 2

struct CertificateStep {
  EdgeSet edges;
  std::string kind;  // base-bc, base-lp, degree1, case2, case1a, case1b
  int vertex = -1;
  std::vector<int> incident;  // e1 (and e2)
  int mu = 0;
  int q = 0;
  Rational value;
  Rational bound;
  bool covered = false;
  bool within_bound = false;
  // Base case with q = 0: the exact dual is at most 5/3 (3/2 bipartite).
  std::optional<bool> base_bound_ok;
  // x restricted to each H(e_i) is a vertex of its restricted LP.
  std::vector<bool> restriction_basic;
  // Case 1.b: both H(e_i) pack at most q - 1 copies.
  std::optional<bool> q_drop_ok;
};

struct DualCertificate {
  std::vector<Rational> weights;  // per hypergraph vertex
  Rational value;
  Rational support_value;     // contribution of layer 2 alone
  Rational completion_value;  // contribution of layer 3
  Rational recursion_value;   // peeled + support_value
  // "recursion" (layers 1-2 already cover H), "residual" (layer 3 added) or
  // "exact-dual" (replaced by an optimal cover of H).
  std::string cover_source;
  int peeled = 0;             // hyperedges with x_e = 1
  int mu = 0;                 // of the whole hypergraph
  int q = 0;
  int support_mu = 0;
  int support_q = 0;
  bool bipartite = false;
  std::vector<CertificateStep> trace;
};

struct CertificateOptions {
  bool bipartite = false;
  OracleLimits limits;
};

// `sol` must be an optimal solution of BuildHm(h); it is re-verified as a
// vertex first (InvalidArgumentError otherwise).
DualCertificate BuildCertificate(const Hypergraph3& h, const BasicSolution& sol,
                                 const CertificateOptions& options = {});

struct CertificateCheck {
  std::string name;  // coverage, nonnegativity, weak-duality, bound
  bool passed = false;
  std::string witness;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  bool ok() const;
};

// Coverage of every hyperedge of h, nonnegativity, value >= lp_opt and
// value <= bound(cert.mu, cert.q) for the flavor in cert.bipartite.
CertificateReport VerifyCertificate(const Hypergraph3& h, const DualCertificate& cert,
                                    const Rational& lp_opt);

}  // namespace colorlab

#endif  // COLORLAB_DUAL_CERTIFICATE_H_
