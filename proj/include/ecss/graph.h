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

#ifndef ECSS_GRAPH_H_
#define ECSS_GRAPH_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ecss {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex Other(Vertex x) const { return x == u ? v : u; }
  bool Touches(Vertex x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Immutable simple undirected graph. Vertices are 0..n-1 and edges are
// indexed in construction order. Copies share the underlying storage, and
// two Graph values are the "same graph" iff they share it.
class Graph {
 public:
  // Throws Error{kSelfLoop, kParallelEdge, kVertexOutOfRange}; the message
  // names the offending pair.
  static Graph Build(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

  int num_vertices() const { return data_->n; }
  int num_edges() const { return static_cast<int>(data_->edges.size()); }
  const Edge& edge(EdgeId e) const { return data_->edges[e]; }
  std::span<const Edge> edges() const { return data_->edges; }
  std::span<const Incidence> neighbors(Vertex v) const {
    return data_->adjacency[v];
  }
  int degree(Vertex v) const {
    return static_cast<int>(data_->adjacency[v].size());
  }
  std::optional<EdgeId> FindEdge(Vertex u, Vertex v) const;
  bool HasEdge(Vertex u, Vertex v) const { return FindEdge(u, v).has_value(); }

  bool SameAs(const Graph& other) const { return data_ == other.data_; }

  // Structural equality: same n and same edge list in the same order.
  friend bool operator==(const Graph& a, const Graph& b);

  std::vector<std::pair<Vertex, Vertex>> EdgePairs() const;

 private:
  struct Data {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Incidence>> adjacency;
  };
  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

inline Graph BuildGraph(int n,
                        std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Graph::Build(n, pairs);
}
inline Graph BuildGraph(int n,
                        std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return Graph::Build(n, std::span(pairs.begin(), pairs.size()));
}

// A subset of the edges of one graph. Combining EdgeSets of different graphs
// throws Error{kGraphMismatch}.
class EdgeSet {
 public:
  explicit EdgeSet(const Graph& graph)
      : graph_(graph), member_(graph.num_edges(), false) {}

  static EdgeSet All(const Graph& graph);
  static EdgeSet Of(const Graph& graph, std::span<const EdgeId> ids);
  static EdgeSet Of(const Graph& graph, std::initializer_list<EdgeId> ids) {
    return Of(graph, std::span(ids.begin(), ids.size()));
  }

  const Graph& graph() const { return graph_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(EdgeId e) const { return member_[e]; }

  void insert(EdgeId e);
  void erase(EdgeId e);

  // Member edge indices in ascending order.
  std::vector<EdgeId> ids() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (EdgeId e = 0; e < static_cast<EdgeId>(member_.size()); ++e) {
      if (member_[e]) fn(e);
    }
  }

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator-=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  friend bool operator==(const EdgeSet& a, const EdgeSet& b);

  bool IsSubsetOf(const EdgeSet& other) const;

 private:
  void CheckSameGraph(const EdgeSet& other) const;
  void CheckIndex(EdgeId e) const;

  Graph graph_;
  std::vector<bool> member_;
  int size_ = 0;
};

// d_F(v): number of F-edges incident to v.
int DegreeIn(const EdgeSet& set, Vertex v);
std::vector<int> Degrees(const EdgeSet& set);

// Subgraph of `graph` induced by `vertices` (relabelled 0..k-1 in the given
// order). `edge_map[i]` is the parent-graph index of local edge i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
};
InducedSubgraph Induce(const Graph& graph, std::span<const Vertex> vertices);

}  // namespace ecss

#endif  // ECSS_GRAPH_H_
