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

#ifndef ECSS_MATCHING_H_
#define ECSS_MATCHING_H_

#include <chrono>
#include <cstdint>
#include <vector>

#include "ecss/graph.h"

namespace ecss {

// Limits for the exponential solvers. When a limit is hit the solver returns
// its best incumbent with optimal() == false instead of failing.
struct SolverBudget {
  std::int64_t node_limit = 10'000'000;
  std::chrono::milliseconds time_limit = std::chrono::seconds(60);

  // Throws Error{kPreconditionViolated} unless both limits are positive.
  void Validate() const;
};

// An edge set with d_M(v) <= 2 for every vertex.
class TwoMatching {
 public:
  // Throws Error{kPreconditionViolated} if some vertex has degree > 2.
  explicit TwoMatching(EdgeSet edges, bool optimal = true);

  const EdgeSet& edges() const { return edges_; }
  int size() const { return edges_.size(); }
  int degree(Vertex v) const { return degrees_[v]; }
  // False when the producing solver ran out of budget.
  bool optimal() const { return optimal_; }

 private:
  EdgeSet edges_;
  std::vector<int> degrees_;
  bool optimal_;
};

bool IsTwoMatching(const EdgeSet& set);

struct SolveStats {
  std::int64_t nodes = 0;
  bool budget_exhausted = false;
};

// Maximum-cardinality (triangle-free) 2-matching solver. Implementations must
// return a maximum solution whenever optimal() is reported true.
class TwoMatchingSolver {
 public:
  virtual ~TwoMatchingSolver() = default;
  virtual TwoMatching Solve(const Graph& graph, const SolverBudget& budget,
                            SolveStats* stats = nullptr) const = 0;
};

// Include/exclude branch-and-bound over edges in ascending index order.
// Pruning: degree feasibility; the bound size + min(undecided edges,
// sum_v min(2 - d(v), undecided edges at v) / 2); and, in triangle-free mode,
// rejecting any edge that closes a 3-cycle (in a 2-matching a 3-cycle is
// always a whole component). Among optima the first one found is returned.
class BranchAndBoundSolver : public TwoMatchingSolver {
 public:
  explicit BranchAndBoundSolver(bool triangle_free)
      : triangle_free_(triangle_free) {}

  TwoMatching Solve(const Graph& graph, const SolverBudget& budget,
                    SolveStats* stats = nullptr) const override;

 private:
  bool triangle_free_;
};

TwoMatching MaxTwoMatching(const Graph& graph, const SolverBudget& budget = {});

TwoMatching MaxTriangleFreeTwoMatching(const Graph& graph,
                                       const SolverBudget& budget = {});
TwoMatching MaxTriangleFreeTwoMatching(const Graph& graph,
                                       const SolverBudget& budget,
                                       const TwoMatchingSolver& solver);

}  // namespace ecss

#endif  // ECSS_MATCHING_H_
