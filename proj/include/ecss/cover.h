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

#ifndef ECSS_COVER_H_
#define ECSS_COVER_H_

#include <string_view>
#include <utility>
#include <vector>

#include "ecss/graph.h"
#include "ecss/matching.h"

namespace ecss {

// An edge set with d_C(v) >= 2 for every vertex.
class Cover {
 public:
  // Throws Error{kPreconditionViolated} if some vertex has degree < 2.
  explicit Cover(EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }
  int size() const { return edges_.size(); }
  int degree(Vertex v) const { return degrees_[v]; }

 private:
  EdgeSet edges_;
  std::vector<int> degrees_;
};

bool IsTwoEdgeCover(const EdgeSet& set);

// sum_v max(2 - d_F(v), 0)
int Deficiency(const EdgeSet& set);
// sum_v max(d_F(v) - 2, 0)
int Excess(const EdgeSet& set);

enum class ConversionRule {
  // Growing a 2-matching into a cover.
  kAddEdge,          // (i)  add vw
  kAddEdgeAndExit,   // (ii) add vw plus an edge leaving the new triangle
  // Shrinking a cover into a 2-matching.
  kRemoveEdge,       // (i)   remove vw
  kRemoveAtVertex,   // (ii)  remove v v1 from the triangle through v
  kRemoveAtNeighbor, // (iii) remove w w1 from the triangle through w
};

// "i", "ii" or "iii".
std::string_view RuleTag(ConversionRule rule);

struct ConversionStep {
  ConversionRule rule;
  Vertex vertex;  // the deficient (or overfull) vertex v
  std::vector<EdgeId> added;
  std::vector<EdgeId> removed;
  int potential_before;
  int potential_after;
  // d_F(w) before the update; only set for kRemoveAtNeighbor.
  int neighbor_degree_before = -1;
};

struct ConversionTrace {
  std::vector<ConversionStep> steps;
};

// Grows a triangle-free 2-matching into a triangle-free 2-edge-cover with
// |C| <= 2|V| - |M|. Deficient vertices are handled lowest index first, each
// with its lowest-index incident non-member edge; the exit edge in case (ii)
// is the lowest-index edge leaving the triangle.
//
// Requires a connected graph with minimum degree >= 2 and |V| >= 4, and a
// triangle-free M (Error{kPreconditionViolated} otherwise).
std::pair<Cover, ConversionTrace> MatchingToCover(const Graph& graph,
                                                  const TwoMatching& matching);

// Shrinks a triangle-free 2-edge-cover into a triangle-free 2-matching with
// |M| >= 2|V| - |C|, overfull vertices lowest index first, each with its
// lowest-index incident member edge.
std::pair<TwoMatching, ConversionTrace> CoverToMatching(const Graph& graph,
                                                        const Cover& cover);

struct CoverResult {
  Cover cover;
  // True when every underlying solver call proved optimality.
  bool optimal;
};

// Minimum-cardinality triangle-free 2-edge-cover: per connected component,
// a maximum triangle-free 2-matching grown by MatchingToCover. Throws
// Error{kNoCoverExists} naming a vertex of degree <= 1 or a component with
// fewer than four vertices (necessarily a K3).
CoverResult MinTriangleFreeCover(const Graph& graph,
                                 const SolverBudget& budget = {});
CoverResult MinTriangleFreeCover(const Graph& graph, const SolverBudget& budget,
                                 const TwoMatchingSolver& solver);

// Minimum-cardinality 2-edge-cover with triangles allowed.
CoverResult MinCover(const Graph& graph, const SolverBudget& budget = {});

}  // namespace ecss

#endif  // ECSS_COVER_H_
