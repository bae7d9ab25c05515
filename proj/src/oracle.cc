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

#include "ecss/oracle.h"

#include <bit>
#include <string>
#include <vector>

#include "ecss/error.h"

namespace ecss {
namespace {

using Mask = std::uint32_t;

// Edge-subset predicates evaluated directly from the definitions.
class MaskGraph {
 public:
  MaskGraph(const Graph& graph, int limit) : graph_(graph) {
    if (limit > 30 || graph.num_edges() > limit) {
      throw Error(ErrorCode::kTooLarge,
                  "oracle limited to " + std::to_string(std::min(limit, 30)) +
                      " edges, graph has " +
                      std::to_string(graph.num_edges()));
    }
    if (graph.num_vertices() > 64) {
      throw Error(ErrorCode::kTooLarge, "oracle limited to 64 vertices");
    }
  }

  int n() const { return graph_.num_vertices(); }
  int m() const { return graph_.num_edges(); }

  std::vector<int> Degrees(Mask mask) const {
    std::vector<int> deg(n(), 0);
    for (int e = 0; e < m(); ++e) {
      if (mask >> e & 1) {
        ++deg[graph_.edge(e).u];
        ++deg[graph_.edge(e).v];
      }
    }
    return deg;
  }

  // Component label per vertex (isolated vertices are their own component).
  std::vector<int> Labels(Mask mask) const {
    std::vector<int> label(n());
    for (int v = 0; v < n(); ++v) label[v] = v;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int e = 0; e < m(); ++e) {
        if (!(mask >> e & 1)) continue;
        int& a = label[graph_.edge(e).u];
        int& b = label[graph_.edge(e).v];
        if (a != b) {
          a = b = std::min(a, b);
          changed = true;
        }
      }
    }
    return label;
  }

  bool Connected(Mask mask) const {
    for (int l : Labels(mask)) {
      if (l != 0) return false;
    }
    return true;
  }

  bool SpanningTwoEdgeConnected(Mask mask) const {
    if (!Connected(mask)) return false;
    for (int e = 0; e < m(); ++e) {
      if ((mask >> e & 1) && !Connected(mask & ~(Mask{1} << e))) return false;
    }
    return true;
  }

  bool HasTriangleComponent(Mask mask) const {
    const std::vector<int> label = Labels(mask);
    std::vector<int> vertices(n(), 0);
    std::vector<int> edges(n(), 0);
    for (int v = 0; v < n(); ++v) ++vertices[label[v]];
    for (int e = 0; e < m(); ++e) {
      if (mask >> e & 1) ++edges[label[graph_.edge(e).u]];
    }
    for (int c = 0; c < n(); ++c) {
      if (vertices[c] == 3 && edges[c] == 3) return true;
    }
    return false;
  }

  EdgeSet ToSet(Mask mask) const {
    EdgeSet set(graph_);
    for (int e = 0; e < m(); ++e) {
      if (mask >> e & 1) set.insert(e);
    }
    return set;
  }

 private:
  const Graph& graph_;
};

// Visits masks of popcount k over m bits in increasing order until fn
// returns true.
template <typename Fn>
bool ForEachMaskOfSize(int m, int k, Fn fn) {
  if (k > m || k < 0) return false;
  if (k == 0) return fn(Mask{0});
  const Mask limit = m == 32 ? 0 : Mask{1} << m;
  Mask mask = (Mask{1} << k) - 1;
  while (mask < limit) {
    if (fn(mask)) return true;
    const Mask low = mask & -mask;
    const Mask ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
    if (ripple == 0) break;
  }
  return false;
}

// Smallest (ascending) or largest (descending) size with a feasible subset.
template <typename Pred>
std::optional<OracleResult> Search(const MaskGraph& g, int from, int to,
                                   Pred pred) {
  std::int64_t nodes = 0;
  const int step = from <= to ? 1 : -1;
  for (int k = from; k != to + step; k += step) {
    std::optional<Mask> hit;
    ForEachMaskOfSize(g.m(), k, [&](Mask mask) {
      ++nodes;
      if (!pred(mask)) return false;
      hit = mask;
      return true;
    });
    if (hit) return OracleResult{k, g.ToSet(*hit), nodes, true};
  }
  return std::nullopt;
}

bool AllAtMost(const std::vector<int>& deg, int bound) {
  for (int d : deg) {
    if (d > bound) return false;
  }
  return true;
}

bool AllAtLeast(const std::vector<int>& deg, int bound) {
  for (int d : deg) {
    if (d < bound) return false;
  }
  return true;
}

OracleResult Require(std::optional<OracleResult> result, const char* what) {
  if (!result) throw Error(ErrorCode::kInfeasible, std::string("no ") + what);
  return std::move(*result);
}

}  // namespace

OracleResult ExactMin2Ecss(const Graph& graph, int limit) {
  const MaskGraph g(graph, limit);
  if (g.n() == 1) return OracleResult{0, EdgeSet(graph), 1, true};
  return Require(Search(g, g.n(), g.m(),
                        [&](Mask mask) {
                          return AllAtLeast(g.Degrees(mask), 2) &&
                                 g.SpanningTwoEdgeConnected(mask);
                        }),
                 "2-edge-connected spanning subgraph");
}

OracleResult ExactMaxTf2Matching(const Graph& graph, int limit) {
  const MaskGraph g(graph, limit);
  return *Search(g, std::min(g.n(), g.m()), 0, [&](Mask mask) {
    return AllAtMost(g.Degrees(mask), 2) && !g.HasTriangleComponent(mask);
  });
}

OracleResult ExactMinTfCover(const Graph& graph, int limit) {
  const MaskGraph g(graph, limit);
  return Require(Search(g, g.n(), g.m(),
                        [&](Mask mask) {
                          return AllAtLeast(g.Degrees(mask), 2) &&
                                 !g.HasTriangleComponent(mask);
                        }),
                 "triangle-free 2-edge-cover");
}

OracleResult ExactMaxTwoMatching(const Graph& graph, int limit) {
  const MaskGraph g(graph, limit);
  return *Search(g, std::min(g.n(), g.m()), 0, [&](Mask mask) {
    return AllAtMost(g.Degrees(mask), 2);
  });
}

OracleResult ExactMinCover(const Graph& graph, int limit) {
  const MaskGraph g(graph, limit);
  return Require(Search(g, g.n(), g.m(),
                        [&](Mask mask) {
                          return AllAtLeast(g.Degrees(mask), 2);
                        }),
                 "2-edge-cover");
}

bool IsConnectedGraph(const Graph& graph) {
  std::vector<bool> seen(graph.num_vertices(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : graph.neighbors(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++count;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return count == graph.num_vertices();
}

GraphFilter MinDegreeAtLeast(int k) {
  return [k](const Graph& graph) {
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
      if (graph.degree(v) < k) return false;
    }
    return true;
  };
}

GraphFilter AllOf(GraphFilter a, GraphFilter b) {
  return [a = std::move(a), b = std::move(b)](const Graph& graph) {
    return a(graph) && b(graph);
  };
}

SmallGraphEnumerator::SmallGraphEnumerator(int n, GraphFilter filter)
    : n_(n), filter_(std::move(filter)) {
  if (n > 7) {
    throw Error(ErrorCode::kTooLarge,
                "enumeration limited to 7 vertices, got " + std::to_string(n));
  }
  if (n < 1) {
    throw Error(ErrorCode::kPreconditionViolated, "need at least one vertex");
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  }
  end_mask_ = std::int64_t{1} << pairs_.size();
}

std::optional<Graph> SmallGraphEnumerator::Next() {
  while (next_mask_ < end_mask_) {
    const std::int64_t mask = next_mask_++;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs_[i]);
    }
    Graph graph = Graph::Build(n_, edges);
    if (!filter_ || filter_(graph)) return graph;
  }
  return std::nullopt;
}

}  // namespace ecss
