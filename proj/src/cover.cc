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

#include "ecss/cover.h"

#include <algorithm>
#include <optional>
#include <string>

#include "ecss/decomposition.h"
#include "ecss/error.h"

namespace ecss {

Cover::Cover(EdgeSet edges)
    : edges_(std::move(edges)), degrees_(Degrees(edges_)) {
  for (Vertex v = 0; v < static_cast<Vertex>(degrees_.size()); ++v) {
    if (degrees_[v] < 2) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "not a 2-edge-cover: vertex " + std::to_string(v) +
                      " has degree " + std::to_string(degrees_[v]));
    }
  }
}

bool IsTwoEdgeCover(const EdgeSet& set) {
  const std::vector<int> deg = Degrees(set);
  return std::ranges::all_of(deg, [](int d) { return d >= 2; });
}

int Deficiency(const EdgeSet& set) {
  int total = 0;
  for (int d : Degrees(set)) total += std::max(2 - d, 0);
  return total;
}

int Excess(const EdgeSet& set) {
  int total = 0;
  for (int d : Degrees(set)) total += std::max(d - 2, 0);
  return total;
}

std::string_view RuleTag(ConversionRule rule) {
  switch (rule) {
    case ConversionRule::kAddEdge:
    case ConversionRule::kRemoveEdge:
      return "i";
    case ConversionRule::kAddEdgeAndExit:
    case ConversionRule::kRemoveAtVertex:
      return "ii";
    case ConversionRule::kRemoveAtNeighbor:
      return "iii";
  }
  return "?";
}

namespace {

void RequireSameGraph(const Graph& graph, const EdgeSet& set) {
  if (!graph.SameAs(set.graph())) {
    throw Error(ErrorCode::kGraphMismatch, "edge set of a different graph");
  }
}

std::optional<Vertex> LowestVertex(const std::vector<int>& deg, bool below) {
  for (Vertex v = 0; v < static_cast<Vertex>(deg.size()); ++v) {
    if (below ? deg[v] < 2 : deg[v] > 2) return v;
  }
  return std::nullopt;
}

// Shared growth loop. With `triangle_free` false, case (ii) never triggers.
std::pair<EdgeSet, ConversionTrace> Grow(const Graph& graph, EdgeSet set,
                                         bool triangle_free) {
  ConversionTrace trace;
  std::vector<int> deg = Degrees(set);
  auto add = [&](EdgeId e) {
    set.insert(e);
    ++deg[graph.edge(e).u];
    ++deg[graph.edge(e).v];
  };
  while (const auto v = LowestVertex(deg, /*below=*/true)) {
    std::optional<Incidence> pick;
    for (const Incidence& inc : graph.neighbors(*v)) {
      if (!set.contains(inc.edge) && (!pick || inc.edge < pick->edge)) {
        pick = inc;
      }
    }
    if (!pick) {
      throw Error(ErrorCode::kInternalInvariant,
                  "deficient vertex " + std::to_string(*v) +
                      " has no incident non-member edge");
    }
    ConversionStep step{ConversionRule::kAddEdge, *v, {pick->edge}, {},
                        Deficiency(set), 0};
    add(pick->edge);
    std::array<Vertex, 3> tri{};
    if (triangle_free && InTriangleComponent(set, *v, &tri)) {
      step.rule = ConversionRule::kAddEdgeAndExit;
      std::optional<EdgeId> exit;
      for (Vertex x : tri) {
        for (const Incidence& inc : graph.neighbors(x)) {
          if (std::ranges::find(tri, inc.neighbor) != tri.end()) continue;
          if (!exit || inc.edge < *exit) exit = inc.edge;
        }
      }
      if (!exit) {
        throw Error(ErrorCode::kInternalInvariant,
                    "triangle {" + std::to_string(tri[0]) + "," +
                        std::to_string(tri[1]) + "," + std::to_string(tri[2]) +
                        "} has no outgoing edge");
      }
      add(*exit);
      step.added.push_back(*exit);
    }
    step.potential_after = Deficiency(set);
    const int drop = step.potential_before - step.potential_after;
    if (drop < static_cast<int>(step.added.size())) {
      throw Error(ErrorCode::kInternalInvariant,
                  "deficiency dropped by " + std::to_string(drop) +
                      " after adding " + std::to_string(step.added.size()) +
                      " edges");
    }
    trace.steps.push_back(std::move(step));
  }
  return {std::move(set), std::move(trace)};
}

void RequireCoverGraph(const Graph& graph) {
  if (graph.num_vertices() < 4) {
    throw Error(ErrorCode::kPreconditionViolated,
                "graph has fewer than 4 vertices");
  }
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (graph.degree(v) < 2) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(graph.degree(v)));
    }
  }
  if (CountComponents(EdgeSet::All(graph)) != 1) {
    throw Error(ErrorCode::kPreconditionViolated, "graph is disconnected");
  }
}

void RequireCoverableDegrees(const Graph& graph) {
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (graph.degree(v) < 2) {
      throw Error(ErrorCode::kNoCoverExists,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(graph.degree(v)));
    }
  }
}

}  // namespace

std::pair<Cover, ConversionTrace> MatchingToCover(const Graph& graph,
                                                  const TwoMatching& matching) {
  RequireSameGraph(graph, matching.edges());
  RequireCoverGraph(graph);
  if (!IsTriangleFree(matching.edges())) {
    throw Error(ErrorCode::kPreconditionViolated,
                "2-matching has a triangle component");
  }
  auto [set, trace] = Grow(graph, matching.edges(), /*triangle_free=*/true);
  if (!IsTriangleFree(set)) {
    throw Error(ErrorCode::kInternalInvariant,
                "grown cover has a triangle component");
  }
  return {Cover(std::move(set)), std::move(trace)};
}

std::pair<TwoMatching, ConversionTrace> CoverToMatching(const Graph& graph,
                                                        const Cover& cover) {
  RequireSameGraph(graph, cover.edges());
  if (!IsTriangleFree(cover.edges())) {
    throw Error(ErrorCode::kPreconditionViolated,
                "cover has a triangle component");
  }
  EdgeSet set = cover.edges();
  std::vector<int> deg = Degrees(set);
  ConversionTrace trace;
  auto remove = [&](EdgeId e) {
    set.erase(e);
    --deg[graph.edge(e).u];
    --deg[graph.edge(e).v];
  };
  // Lowest-index member edge joining x to a vertex of `tri` other than x.
  auto triangle_edge = [&](Vertex x, const std::array<Vertex, 3>& tri) {
    EdgeId best = -1;
    for (const Incidence& inc : graph.neighbors(x)) {
      if (set.contains(inc.edge) &&
          std::ranges::find(tri, inc.neighbor) != tri.end() &&
          (best < 0 || inc.edge < best)) {
        best = inc.edge;
      }
    }
    return best;
  };

  while (const auto v = LowestVertex(deg, /*below=*/false)) {
    EdgeId vw = -1;
    for (const Incidence& inc : graph.neighbors(*v)) {
      if (set.contains(inc.edge) && (vw < 0 || inc.edge < vw)) vw = inc.edge;
    }
    const Vertex w = graph.edge(vw).Other(*v);
    ConversionStep step{ConversionRule::kRemoveEdge, *v, {}, {},
                        Excess(set), 0};
    set.erase(vw);
    std::array<Vertex, 3> tri{};
    EdgeId target = vw;
    if (InTriangleComponent(set, *v, &tri)) {
      step.rule = ConversionRule::kRemoveAtVertex;
      set.insert(vw);
      target = triangle_edge(*v, tri);
    } else if (InTriangleComponent(set, w, &tri)) {
      step.rule = ConversionRule::kRemoveAtNeighbor;
      set.insert(vw);
      step.neighbor_degree_before = deg[w];
      if (deg[w] != 3) {
        throw Error(ErrorCode::kInternalInvariant,
                    "case (iii) with d_F(" + std::to_string(w) +
                        ") = " + std::to_string(deg[w]));
      }
      target = triangle_edge(w, tri);
    } else {
      set.insert(vw);
    }
    remove(target);
    step.removed.push_back(target);
    step.potential_after = Excess(set);
    if (step.potential_after > step.potential_before - 1 ||
        !IsTriangleFree(set)) {
      throw Error(ErrorCode::kInternalInvariant,
                  "removal step broke the excess accounting or created a "
                  "triangle component");
    }
    trace.steps.push_back(std::move(step));
  }
  return {TwoMatching(std::move(set)), std::move(trace)};
}

CoverResult MinTriangleFreeCover(const Graph& graph,
                                 const SolverBudget& budget,
                                 const TwoMatchingSolver& solver) {
  RequireCoverableDegrees(graph);
  const Components comps = ConnectedComponents(EdgeSet::All(graph));
  EdgeSet result(graph);
  bool optimal = true;
  for (const auto& part : comps.parts) {
    if (part.size() < 4) {
      std::string names;
      for (Vertex v : part) names += (names.empty() ? "" : ",") + std::to_string(v);
      throw Error(ErrorCode::kNoCoverExists,
                  "component {" + names + "} is a triangle");
    }
    const InducedSubgraph sub = Induce(graph, part);
    const TwoMatching matching =
        MaxTriangleFreeTwoMatching(sub.graph, budget, solver);
    optimal = optimal && matching.optimal();
    const auto [cover, trace] = MatchingToCover(sub.graph, matching);
    cover.edges().ForEach([&](EdgeId e) { result.insert(sub.edge_map[e]); });
  }
  return CoverResult{Cover(std::move(result)), optimal};
}

CoverResult MinTriangleFreeCover(const Graph& graph,
                                 const SolverBudget& budget) {
  return MinTriangleFreeCover(graph, budget,
                              BranchAndBoundSolver(/*triangle_free=*/true));
}

CoverResult MinCover(const Graph& graph, const SolverBudget& budget) {
  RequireCoverableDegrees(graph);
  const TwoMatching matching = MaxTwoMatching(graph, budget);
  auto [set, trace] = Grow(graph, matching.edges(), /*triangle_free=*/false);
  return CoverResult{Cover(std::move(set)), matching.optimal()};
}

}  // namespace ecss
