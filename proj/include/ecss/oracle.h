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

#ifndef ECSS_ORACLE_H_
#define ECSS_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>

#include "ecss/graph.h"

// Exhaustive solvers over edge subsets. They share no code with the
// algorithmic modules beyond the Graph type, so they can serve as ground
// truth for them.

namespace ecss {

struct OracleResult {
  int value = 0;
  EdgeSet witness;
  std::int64_t nodes = 0;  // subsets examined
  bool exact = true;
};

inline constexpr int kDefaultOracleLimit = 20;

// All oracles throw Error{kTooLarge} when m > limit (or limit > 30).

// Minimum 2-edge-connected spanning subgraph; Error{kInfeasible} if none.
OracleResult ExactMin2Ecss(const Graph& graph,
                           int limit = kDefaultOracleLimit);
// Maximum triangle-free 2-matching.
OracleResult ExactMaxTf2Matching(const Graph& graph,
                                 int limit = kDefaultOracleLimit);
// Minimum triangle-free 2-edge-cover; Error{kInfeasible} if none.
OracleResult ExactMinTfCover(const Graph& graph,
                             int limit = kDefaultOracleLimit);
// Same without the triangle restriction.
OracleResult ExactMaxTwoMatching(const Graph& graph,
                                 int limit = kDefaultOracleLimit);
OracleResult ExactMinCover(const Graph& graph,
                           int limit = kDefaultOracleLimit);

using GraphFilter = std::function<bool(const Graph&)>;

bool IsConnectedGraph(const Graph& graph);
GraphFilter MinDegreeAtLeast(int k);
GraphFilter AllOf(GraphFilter a, GraphFilter b);

// Streams every labeled simple graph on n <= 7 vertices accepted by the
// filter, in increasing order of the edge mask over the pairs (0,1), (0,2),
// ..., (n-2,n-1). Throws Error{kTooLarge} for n > 7.
class SmallGraphEnumerator {
 public:
  explicit SmallGraphEnumerator(int n, GraphFilter filter = {});

  std::optional<Graph> Next();
  // Candidates examined so far, before filtering.
  std::int64_t examined() const { return next_mask_; }

 private:
  int n_;
  GraphFilter filter_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::int64_t next_mask_ = 0;
  std::int64_t end_mask_;
};

}  // namespace ecss

#endif  // ECSS_ORACLE_H_
