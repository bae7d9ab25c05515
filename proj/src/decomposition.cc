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

#include "ecss/decomposition.h"

#include <algorithm>
#include <utility>

namespace ecss {
namespace {

struct LowLink {
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<EdgeId> parent_edge;
  std::vector<EdgeId> bridges;
  std::vector<bool> cut_vertex;
};

// Iterative DFS over the edges accepted by `active`, recording discovery
// times, low-links, bridges and articulation points.
template <typename Active>
LowLink RunLowLink(const Graph& graph, Active&& active) {
  const int n = graph.num_vertices();
  LowLink ll;
  ll.disc.assign(n, -1);
  ll.low.assign(n, 0);
  ll.parent_edge.assign(n, -1);
  ll.cut_vertex.assign(n, false);
  int timer = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (ll.disc[root] != -1) continue;
    int root_children = 0;
    ll.disc[root] = ll.low[root] = timer++;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto adj = graph.neighbors(v);
      if (next < adj.size()) {
        const Incidence inc = adj[next++];
        if (!active(inc.edge) || inc.edge == ll.parent_edge[v]) continue;
        const Vertex w = inc.neighbor;
        if (ll.disc[w] == -1) {
          ll.parent_edge[w] = inc.edge;
          ll.disc[w] = ll.low[w] = timer++;
          if (v == root) ++root_children;
          stack.emplace_back(w, 0);
        } else {
          ll.low[v] = std::min(ll.low[v], ll.disc[w]);
        }
        continue;
      }
      const Vertex w = v;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex p = stack.back().first;
      ll.low[p] = std::min(ll.low[p], ll.low[w]);
      if (ll.low[w] > ll.disc[p]) ll.bridges.push_back(ll.parent_edge[w]);
      if (p != root && ll.low[w] >= ll.disc[p]) ll.cut_vertex[p] = true;
    }
    if (root_children > 1) ll.cut_vertex[root] = true;
  }
  std::sort(ll.bridges.begin(), ll.bridges.end());
  return ll;
}

// Labels connected components of the edges accepted by `active`. Labels are
// assigned in order of minimum vertex.
template <typename Active>
std::vector<int> LabelComponents(const Graph& graph, Active&& active,
                                 int* count) {
  const int n = graph.num_vertices();
  std::vector<int> label(n, -1);
  std::vector<Vertex> queue;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex v = queue.back();
      queue.pop_back();
      for (const Incidence& inc : graph.neighbors(v)) {
        if (label[inc.neighbor] == -1 && active(inc.edge)) {
          label[inc.neighbor] = next;
          queue.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  *count = next;
  return label;
}

std::vector<std::vector<Vertex>> GroupByLabel(const std::vector<int>& label,
                                              int count) {
  std::vector<std::vector<Vertex>> groups(count);
  for (Vertex v = 0; v < static_cast<Vertex>(label.size()); ++v) {
    groups[label[v]].push_back(v);
  }
  return groups;
}

}  // namespace

Components ConnectedComponents(const EdgeSet& set) {
  int count = 0;
  Components out;
  out.component_of = LabelComponents(
      set.graph(), [&](EdgeId e) { return set.contains(e); }, &count);
  out.parts = GroupByLabel(out.component_of, count);
  return out;
}

int CountComponents(const EdgeSet& set) {
  int count = 0;
  LabelComponents(set.graph(), [&](EdgeId e) { return set.contains(e); },
                  &count);
  return count;
}

std::vector<EdgeId> FindBridges(const EdgeSet& set) {
  return RunLowLink(set.graph(), [&](EdgeId e) { return set.contains(e); })
      .bridges;
}

bool IsTwoEdgeConnected(const EdgeSet& set) {
  return CountComponents(set) == 1 && FindBridges(set).empty();
}

bool IsTwoEdgeConnected(const Graph& graph) {
  return IsTwoEdgeConnected(EdgeSet::All(graph));
}

std::vector<Vertex> FindCutVertices(const Graph& graph) {
  const LowLink ll = RunLowLink(graph, [](EdgeId) { return true; });
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (ll.cut_vertex[v]) out.push_back(v);
  }
  return out;
}

bool IsTwoVertexConnected(const Graph& graph) {
  if (graph.num_vertices() < 3) return false;
  if (CountComponents(EdgeSet::All(graph)) != 1) return false;
  return FindCutVertices(graph).empty();
}

Decomposition Decompose(const EdgeSet& set) {
  const Graph& graph = set.graph();
  Decomposition d;
  d.components = ConnectedComponents(set);
  d.bridges = FindBridges(set);

  std::vector<bool> is_bridge(graph.num_edges(), false);
  for (EdgeId e : d.bridges) is_bridge[e] = true;
  d.class_of = LabelComponents(
      graph, [&](EdgeId e) { return set.contains(e) && !is_bridge[e]; },
      &d.num_classes);

  std::vector<Piece> classes(d.num_classes);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    classes[d.class_of[v]].vertices.push_back(v);
  }
  std::vector<int> bridges_at(d.num_classes, 0);
  std::vector<bool> component_has_bridge(d.components.count(), false);
  set.ForEach([&](EdgeId e) {
    const Edge& edge = graph.edge(e);
    if (is_bridge[e]) {
      ++bridges_at[d.class_of[edge.u]];
      ++bridges_at[d.class_of[edge.v]];
      component_has_bridge[d.components.component_of[edge.u]] = true;
    } else {
      classes[d.class_of[edge.u]].edges.push_back(e);
    }
  });

  for (int c = 0; c < d.num_classes; ++c) {
    Piece& piece = classes[c];
    if (piece.vertices.size() < 2) continue;
    const int comp = d.components.component_of[piece.vertices.front()];
    if (!component_has_bridge[comp]) {
      TwoEcComponent tc;
      tc.vertices = std::move(piece.vertices);
      tc.edges = std::move(piece.edges);
      if (tc.edges.size() == tc.vertices.size()) {
        tc.cycle_length = static_cast<int>(tc.vertices.size());
      }
      d.twoec_components.push_back(std::move(tc));
    } else if (piece.vertices.size() >= 3) {
      Block block;
      block.vertices = std::move(piece.vertices);
      block.edges = std::move(piece.edges);
      block.incident_bridges = bridges_at[c];
      d.blocks.push_back(std::move(block));
    }
  }
  return d;
}

std::vector<std::vector<Vertex>> TriangleComponents(const EdgeSet& set) {
  const Components comps = ConnectedComponents(set);
  std::vector<int> edge_count(comps.count(), 0);
  set.ForEach([&](EdgeId e) {
    ++edge_count[comps.component_of[set.graph().edge(e).u]];
  });
  std::vector<std::vector<Vertex>> out;
  for (int c = 0; c < comps.count(); ++c) {
    if (comps.parts[c].size() == 3 && edge_count[c] == 3) {
      out.push_back(comps.parts[c]);
    }
  }
  return out;
}

bool InTriangleComponent(const EdgeSet& set, Vertex v,
                         std::array<Vertex, 3>* triangle) {
  std::array<Vertex, 4> seen{v, -1, -1, -1};
  int count = 1;
  int edges = 0;
  for (int head = 0; head < count; ++head) {
    for (const Incidence& inc : set.graph().neighbors(seen[head])) {
      if (!set.contains(inc.edge)) continue;
      ++edges;
      if (std::find(seen.begin(), seen.begin() + count, inc.neighbor) ==
          seen.begin() + count) {
        if (count == 3) return false;
        seen[count++] = inc.neighbor;
      }
    }
  }
  // Each edge was seen from both endpoints.
  if (count != 3 || edges != 6) return false;
  if (triangle != nullptr) *triangle = {seen[0], seen[1], seen[2]};
  return true;
}

bool IsTriangleFree(const EdgeSet& set) {
  return TriangleComponents(set).empty();
}

}  // namespace ecss
