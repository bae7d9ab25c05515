// Copyright 2026 The ecss Authors
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

#ifndef ECSS_PIPELINE_H_
#define ECSS_PIPELINE_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecss/graph.h"
#include "ecss/matching.h"
#include "ecss/rational.h"

namespace ecss {

// (13/10 + t/30 - b/20) * size. Requires 0 <= b, t <= 1.
Rational BoundValue(int size, const Rational& b, const Rational& t);

struct PipelineReport {
  int cover_size = 0;
  int canonical_size = 0;
  Rational bridge_fraction;
  Rational triangle_fraction;
  Rational bound;
  int solution_size = 0;
  // The cover came from solver runs that proved optimality.
  bool optimal = false;
  std::optional<int> opt;
  std::optional<Rational> ratio;

  int lower_bound = 0;
  Rational epsilon;
  bool size_ok = false;
  bool canonicalized = false;
  // Why canonicalization was skipped, if it was.
  std::string note;

  // Records a known optimum and the resulting ratio |S| / OPT.
  void SetOpt(int value);

  // "key: value" lines.
  std::string ToText() const;
  // One-line JSON object.
  std::string ToRecord() const;
};

// Adds edges of G to the cover until it is a 2-edge-connected spanning
// subgraph. Throws Error{kInfeasible} if G is not 2-edge-connected. With
// `require_semi_canonical`, also throws Error{kPreconditionViolated} when the
// cover is not semi-canonical.
EdgeSet Glue(const Graph& graph, const EdgeSet& cover,
             bool require_semi_canonical = false);

// Minimum triangle-free cover, semi-canonicalization (when G passes the
// decidable structure checks) and gluing.
std::pair<EdgeSet, PipelineReport> Solve(const Graph& graph,
                                         const Rational& epsilon,
                                         const SolverBudget& budget = {});

struct VerifyResult {
  enum class Witness {
    kNone,
    kForeignEdge,
    kIsolatedVertex,
    kDisconnected,
    kBridge,
  };
  bool valid = true;
  Witness witness = Witness::kNone;
  std::pair<Vertex, Vertex> edge{-1, -1};  // kForeignEdge, kBridge
  Vertex vertex = -1;                      // kIsolatedVertex, kDisconnected
  std::string message;
};

VerifyResult VerifySolution(const Graph& graph, const EdgeSet& solution);
VerifyResult VerifySolution(
    const Graph& graph, const std::vector<std::pair<Vertex, Vertex>>& edges);

struct LowerBoundResult {
  int value = 0;
  bool certified = false;
};

// Size of a minimum triangle-free 2-edge-cover, a lower bound on every
// 2-edge-connected spanning subgraph when the solver proved optimality.
LowerBoundResult LowerBound(const Graph& graph,
                            const SolverBudget& budget = {});

// Message naming a bridge or an unreachable vertex, empty when G is
// 2-edge-connected.
std::string TwoEdgeConnectivityFailure(const Graph& graph);

}  // namespace ecss

#endif  // ECSS_PIPELINE_H_
