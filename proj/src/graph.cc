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

#include "ecss/graph.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ecss/error.h"

namespace ecss {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kParallelEdge: return "ParallelEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kGraphMismatch: return "GraphMismatch";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInternalInvariant: return "InternalInvariant";
    case ErrorCode::kNoCoverExists: return "NoCoverExists";
    case ErrorCode::kStructureViolation: return "StructureViolation";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string PairString(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::Build(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n < 1) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex count must be at least 1, got " + std::to_string(n));
  }
  auto data = std::make_shared<Data>();
  data->n = n;
  data->adjacency.resize(n);
  data->edges.reserve(pairs.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(pairs.size() * 2);
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  PairString(u, v) + " with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::kSelfLoop, PairString(u, v));
    const auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                     static_cast<std::uint32_t>(std::max(u, v));
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kParallelEdge, PairString(u, v));
    }
    const EdgeId id = static_cast<EdgeId>(data->edges.size());
    data->edges.push_back({u, v});
    data->adjacency[u].push_back({v, id});
    data->adjacency[v].push_back({u, id});
  }
  return Graph(std::move(data));
}

std::optional<EdgeId> Graph::FindEdge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    return std::nullopt;
  }
  if (degree(u) > degree(v)) std::swap(u, v);
  for (const Incidence& inc : neighbors(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  return a.num_vertices() == b.num_vertices() &&
         std::ranges::equal(a.edges(), b.edges());
}

std::vector<std::pair<Vertex, Vertex>> Graph::EdgePairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges());
  for (const Edge& e : edges()) out.emplace_back(e.u, e.v);
  return out;
}

EdgeSet EdgeSet::All(const Graph& graph) {
  EdgeSet set(graph);
  set.member_.assign(graph.num_edges(), true);
  set.size_ = graph.num_edges();
  return set;
}

EdgeSet EdgeSet::Of(const Graph& graph, std::span<const EdgeId> ids) {
  EdgeSet set(graph);
  for (EdgeId e : ids) set.insert(e);
  return set;
}

void EdgeSet::CheckIndex(EdgeId e) const {
  if (e < 0 || e >= static_cast<EdgeId>(member_.size())) {
    throw Error(ErrorCode::kPreconditionViolated,
                "edge index " + std::to_string(e) + " out of range");
  }
}

void EdgeSet::insert(EdgeId e) {
  CheckIndex(e);
  if (!member_[e]) {
    member_[e] = true;
    ++size_;
  }
}

void EdgeSet::erase(EdgeId e) {
  CheckIndex(e);
  if (member_[e]) {
    member_[e] = false;
    --size_;
  }
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(size_);
  ForEach([&](EdgeId e) { out.push_back(e); });
  return out;
}

void EdgeSet::CheckSameGraph(const EdgeSet& other) const {
  if (!graph_.SameAs(other.graph_)) {
    throw Error(ErrorCode::kGraphMismatch,
                "edge sets belong to different graphs");
  }
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  CheckSameGraph(other);
  other.ForEach([&](EdgeId e) { insert(e); });
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
  CheckSameGraph(other);
  other.ForEach([&](EdgeId e) { erase(e); });
  return *this;
}

bool operator==(const EdgeSet& a, const EdgeSet& b) {
  a.CheckSameGraph(b);
  return a.member_ == b.member_;
}

bool EdgeSet::IsSubsetOf(const EdgeSet& other) const {
  CheckSameGraph(other);
  for (std::size_t e = 0; e < member_.size(); ++e) {
    if (member_[e] && !other.member_[e]) return false;
  }
  return true;
}

int DegreeIn(const EdgeSet& set, Vertex v) {
  int d = 0;
  for (const Incidence& inc : set.graph().neighbors(v)) {
    if (set.contains(inc.edge)) ++d;
  }
  return d;
}

std::vector<int> Degrees(const EdgeSet& set) {
  std::vector<int> deg(set.graph().num_vertices(), 0);
  set.ForEach([&](EdgeId e) {
    ++deg[set.graph().edge(e).u];
    ++deg[set.graph().edge(e).v];
  });
  return deg;
}

InducedSubgraph Induce(const Graph& graph, std::span<const Vertex> vertices) {
  std::vector<int> local(graph.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<EdgeId> edge_map;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    if (local[edge.u] >= 0 && local[edge.v] >= 0) {
      pairs.emplace_back(local[edge.u], local[edge.v]);
      edge_map.push_back(e);
    }
  }
  return InducedSubgraph{
      Graph::Build(static_cast<int>(vertices.size()), pairs),
      std::vector<Vertex>(vertices.begin(), vertices.end()),
      std::move(edge_map)};
}

}  // namespace ecss
