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

#include "ecss/structured.h"

#include <algorithm>
#include <map>
#include <set>

#include "ecss/decomposition.h"
#include "ecss/error.h"

namespace ecss {
namespace {

// Component sizes of G minus the vertices flagged in `removed`.
std::vector<int> ComponentSizesWithout(const Graph& graph,
                                       const std::vector<bool>& removed) {
  const int n = graph.num_vertices();
  std::vector<bool> seen(removed);
  std::vector<int> sizes;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    stack.assign(1, s);
    int size = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (const Incidence& inc : graph.neighbors(v)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

std::vector<int> SizesWithoutPair(const Graph& graph, Vertex u, Vertex v) {
  std::vector<bool> removed(graph.num_vertices(), false);
  removed[u] = removed[v] = true;
  return ComponentSizesWithout(graph, removed);
}

bool Adjacent(const Graph& graph, Vertex a, Vertex b) {
  return graph.HasEdge(a, b);
}

bool NeighborsWithin(const Graph& graph, Vertex x,
                     const std::vector<Vertex>& cycle) {
  return std::ranges::all_of(graph.neighbors(x), [&](const Incidence& inc) {
    return std::ranges::find(cycle, inc.neighbor) != cycle.end();
  });
}

}  // namespace

std::vector<EdgeId> FindIrrelevantEdges(const Graph& graph) {
  std::vector<EdgeId> out;
  if (graph.num_vertices() < 3) return out;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    if (SizesWithoutPair(graph, edge.u, edge.v).size() > 1) out.push_back(e);
  }
  return out;
}

std::vector<TwoCut> FindNonIsolatingTwoCuts(const Graph& graph) {
  std::vector<TwoCut> out;
  const int n = graph.num_vertices();
  if (n < 4) return out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      std::vector<int> sizes = SizesWithoutPair(graph, u, v);
      const bool listed =
          sizes.size() >= 3 ||
          (sizes.size() == 2 && sizes[0] >= 2 && sizes[1] >= 2);
      if (listed) out.push_back({u, v, std::move(sizes)});
    }
  }
  return out;
}

bool CheckSize(const Graph& graph, const Rational& epsilon) {
  if (epsilon <= 0) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "epsilon must be positive, got " + ToString(epsilon));
  }
  return Rational(graph.num_vertices()) * epsilon >= 2;
}

std::vector<DegreeTwoK23> FindDegreeTwoK23s(const Graph& graph) {
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> by_hubs;
  for (Vertex w = 0; w < graph.num_vertices(); ++w) {
    if (graph.degree(w) != 2) continue;
    Vertex a = graph.neighbors(w)[0].neighbor;
    Vertex b = graph.neighbors(w)[1].neighbor;
    if (a > b) std::swap(a, b);
    by_hubs[{a, b}].push_back(w);
  }
  std::vector<DegreeTwoK23> out;
  for (const auto& [hubs, spokes] : by_hubs) {
    if (spokes.size() >= 3) {
      out.push_back({{hubs.first, hubs.second},
                     {spokes[0], spokes[1], spokes[2]}});
    }
  }
  return out;
}

std::vector<ForcedShortCycle> FindForcedShortCycles(const Graph& graph) {
  std::set<std::vector<Vertex>> seen;
  std::vector<ForcedShortCycle> out;
  auto consider = [&](std::vector<Vertex> cycle) {
    const Vertex a = cycle[1];
    const Vertex b = cycle.back();
    if (!NeighborsWithin(graph, a, cycle) || !NeighborsWithin(graph, b, cycle)) {
      return;
    }
    std::vector<Vertex> key = cycle;
    std::sort(key.begin(), key.end());
    key.push_back(std::min(a, b));
    key.push_back(std::max(a, b));
    if (seen.insert(key).second) out.push_back({std::move(cycle)});
  };
  for (Vertex v1 = 0; v1 < graph.num_vertices(); ++v1) {
    const auto adj = graph.neighbors(v1);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (std::size_t j = i + 1; j < adj.size(); ++j) {
        const Vertex a = adj[i].neighbor;
        const Vertex b = adj[j].neighbor;
        if (Adjacent(graph, a, b) || graph.degree(a) > 4 ||
            graph.degree(b) > 4) {
          continue;
        }
        for (const Incidence& ax : graph.neighbors(a)) {
          const Vertex x = ax.neighbor;
          if (x == v1 || x == b) continue;
          if (Adjacent(graph, x, b)) consider({v1, a, x, b});
          for (const Incidence& xy : graph.neighbors(x)) {
            const Vertex y = xy.neighbor;
            if (y == v1 || y == a || y == b) continue;
            if (Adjacent(graph, y, b)) consider({v1, a, x, y, b});
          }
        }
      }
    }
  }
  return out;
}

StructureReport BuildStructureReport(const Graph& graph,
                                     const Rational& epsilon) {
  StructureReport report;
  report.epsilon = epsilon;
  report.size_ok = CheckSize(graph, epsilon);
  report.two_vertex_connected = IsTwoVertexConnected(graph);
  report.irrelevant_edges = FindIrrelevantEdges(graph);
  report.non_isolating_cuts = FindNonIsolatingTwoCuts(graph);
  report.contractibility =
      "not checked (general 5/4-contractible subgraph detection is not "
      "implemented); special shapes listed separately";
  report.degree_two_k23s = FindDegreeTwoK23s(graph);
  report.forced_short_cycles = FindForcedShortCycles(graph);
  return report;
}

std::string StructureReport::ToText(const Graph& graph) const {
  auto join = [](const auto& items, auto fmt) {
    std::string s;
    for (const auto& item : items) {
      if (!s.empty()) s += " ";
      s += fmt(item);
    }
    return s;
  };
  auto vertices = [](const auto& vs) {
    std::string s;
    for (Vertex v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
    return "{" + s + "}";
  };
  std::string out;
  out += "vertices: " + std::to_string(graph.num_vertices()) + "\n";
  out += "edges: " + std::to_string(graph.num_edges()) + "\n";
  out += "epsilon: " + ToString(epsilon) + "\n";
  out += std::string("two_vertex_connected: ") +
         (two_vertex_connected ? "true" : "false") + "\n";
  out += std::string("size_ok: ") + (size_ok ? "true" : "false") + "\n";
  out += "irrelevant_edges: " + join(irrelevant_edges, [&](EdgeId e) {
           return std::to_string(graph.edge(e).u) + "-" +
                  std::to_string(graph.edge(e).v);
         }) + "\n";
  out += "non_isolating_cuts: " + join(non_isolating_cuts, [&](const TwoCut& c) {
           std::string sizes;
           for (int s : c.component_sizes) {
             sizes += (sizes.empty() ? "" : "+") + std::to_string(s);
           }
           return "{" + std::to_string(c.u) + "," + std::to_string(c.v) +
                  "}:" + sizes;
         }) + "\n";
  out += "contractibility: " + contractibility + "\n";
  out += "degree_two_k23: " + join(degree_two_k23s, [&](const DegreeTwoK23& k) {
           return vertices(k.hubs) + "x" + vertices(k.spokes);
         }) + "\n";
  out += "forced_short_cycles: " +
         join(forced_short_cycles,
              [&](const ForcedShortCycle& c) { return vertices(c.cycle); }) +
         "\n";
  out += std::string("decidable_checks: ") +
         (PassesDecidableChecks() ? "pass" : "fail") + "\n";
  return out;
}

std::string FirstStructureFailure(const Graph& graph) {
  if (!IsTwoVertexConnected(graph)) return "graph is not 2-vertex-connected";
  if (const auto irrelevant = FindIrrelevantEdges(graph); !irrelevant.empty()) {
    const Edge& e = graph.edge(irrelevant.front());
    return "irrelevant edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  if (const auto cuts = FindNonIsolatingTwoCuts(graph); !cuts.empty()) {
    return "non-isolating 2-vertex-cut {" + std::to_string(cuts.front().u) +
           "," + std::to_string(cuts.front().v) + "}";
  }
  return "";
}

}  // namespace ecss
