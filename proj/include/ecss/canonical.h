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

#ifndef ECSS_CANONICAL_H_
#define ECSS_CANONICAL_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecss/cover.h"
#include "ecss/decomposition.h"
#include "ecss/graph.h"

namespace ecss {

// An exchange (H \ out) ∪ in with |out| == |in|.
struct Swap {
  std::vector<EdgeId> out;
  std::vector<EdgeId> in;
};

struct Violation {
  int condition = 0;  // 1..4
  std::string description;
  // Offending component or block (conditions 1 and 2).
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  // Improving exchange (conditions 3 and 4).
  std::optional<Swap> swap;
};

struct ViolationReport {
  std::vector<Violation> violations;
  // False when H has triangle components and the graph exceeds the
  // configured size cap, so the condition-(3) search was skipped.
  bool swap_search_complete = true;

  bool semi_canonical() const {
    return violations.empty() && swap_search_complete;
  }
};

struct CheckOptions {
  int max_edges_for_swap_search = 200;
  // Restrict exchange candidates to non-cover edges touching a component
  // that loses an edge. Unpruned search enumerates all non-cover edges.
  bool pruned = true;
};

// Condition (3): an exchange of at most three edges, removing at least one
// edge of a triangle 2EC component, that leaves a 2-edge-cover with fewer
// connected components.
std::optional<Swap> FindTriangleSwap(const Graph& graph, const EdgeSet& cover,
                                     bool pruned);
// Condition (4): a two-edge exchange inside two 4-cycle 2EC components whose
// added edges both join those components.
std::optional<Swap> FindFourCycleMerge(const Graph& graph,
                                       const EdgeSet& cover, bool pruned);

// Reports every violated condition with a witness. Throws
// Error{kPreconditionViolated} when `cover` is not a 2-edge-cover.
ViolationReport CheckSemiCanonical(const Graph& graph, const EdgeSet& cover,
                                   const CheckOptions& options = {});

// Two triangles {leaves[0], leaves[1], center} and
// {leaves[2], leaves[3], center}.
struct BowtieLabels {
  Vertex center;
  std::array<Vertex, 4> leaves;
};
struct K23Labels {
  std::array<Vertex, 2> hubs;
  std::array<Vertex, 3> spokes;
};

// `piece` is a 2EC component of some edge set of `graph`.
std::optional<BowtieLabels> RecognizeBowtie(const Graph& graph,
                                            const Piece& piece);
std::optional<K23Labels> RecognizeK23(const Graph& graph, const Piece& piece);

enum class RewriteOp {
  kRemoveRedundant,   // a
  kMergeFourCycles,   // b
  kBowtie,            // c1
  kK23,               // c2
  kLeafBlockSwap,     // d1
  kLeafBlockTwoSwap,  // d2
  kInnerTriangle,     // e
};

std::string_view OpTag(RewriteOp op);

// (|H'|, number of connected components, number of bridges), compared
// lexicographically.
struct Potential {
  int size = 0;
  int components = 0;
  int bridges = 0;

  friend auto operator<=>(const Potential&, const Potential&) = default;
};

Potential PotentialOf(const EdgeSet& set);

struct RewriteStep {
  RewriteOp op;
  std::vector<EdgeId> removed;
  std::vector<EdgeId> added;
  Potential before;
  Potential after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;

  // One line per step:
  //   op=<tag> removed=[u-v,...] added=[...] potential=(s,c,b)->(s',c',b')
  std::string ToText(const Graph& graph) const;
};

struct CanonicalizeOptions {
  // Refuse graphs that fail the decidable structured-graph checks.
  bool check_structure = true;
};

// Rewrites a triangle-free 2-edge-cover into a semi-canonical one of no
// larger size by applying operations (a) through (e) in priority order,
// lowest-index witness first. Every intermediate set is re-checked to be a
// triangle-free 2-edge-cover with a strictly smaller potential.
//
// Throws Error{kStructureViolation} when a case can only arise in a graph
// that is not structured (the message names the witness), and
// Error{kPreconditionViolated} for bad input.
std::pair<Cover, RewriteTrace> SemiCanonicalize(
    const Graph& graph, const Cover& cover,
    const CanonicalizeOptions& options = {});

}  // namespace ecss

#endif  // ECSS_CANONICAL_H_
