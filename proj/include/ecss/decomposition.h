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

#ifndef ECSS_DECOMPOSITION_H_
#define ECSS_DECOMPOSITION_H_

#include <array>
#include <vector>

#include "ecss/graph.h"

namespace ecss {

// Partition of the vertex set into connected components of (V, F). Isolated
// vertices are singleton components. Components are sorted by their minimum
// vertex, and each component's vertex list is ascending.
struct Components {
  std::vector<std::vector<Vertex>> parts;
  std::vector<int> component_of;  // vertex -> index into parts

  int count() const { return static_cast<int>(parts.size()); }
};

Components ConnectedComponents(const EdgeSet& set);
int CountComponents(const EdgeSet& set);

// Bridges of (V, F), ascending by edge index. Iterative low-link traversal.
std::vector<EdgeId> FindBridges(const EdgeSet& set);

// True iff (V, F) is connected and bridgeless over the whole vertex set.
bool IsTwoEdgeConnected(const EdgeSet& set);
bool IsTwoEdgeConnected(const Graph& graph);

// True iff |V| >= 3, the graph is connected, and it has no cut vertex.
bool IsTwoVertexConnected(const Graph& graph);
std::vector<Vertex> FindCutVertices(const Graph& graph);

struct Piece {
  std::vector<Vertex> vertices;  // ascending
  std::vector<EdgeId> edges;     // ascending
};

struct Block : Piece {
  int incident_bridges = 0;
  bool leaf() const { return incident_bridges == 1; }
};

struct TwoEcComponent : Piece {
  // Length i when the component is an i-cycle, 0 otherwise.
  int cycle_length = 0;
  bool is_cycle() const { return cycle_length > 0; }
  bool is_triangle() const { return cycle_length == 3; }
};

// Structural decomposition of an edge set.
//
// Every edge of F lies in exactly one of: `bridges`, some block, some 2EC
// component. Components with a single vertex and no edges are not listed in
// `twoec_components`. Blocks and 2EC components are sorted by minimum vertex.
struct Decomposition {
  Components components;
  std::vector<EdgeId> bridges;
  std::vector<Block> blocks;
  std::vector<TwoEcComponent> twoec_components;
  // For each vertex, the index of its 2-edge-connected class: the connected
  // components of F minus its bridges, in the same ordering rule.
  std::vector<int> class_of;
  int num_classes = 0;
};

Decomposition Decompose(const EdgeSet& set);

// True iff F has no triangle 2EC component. A triangle inside a larger
// component is allowed.
bool IsTriangleFree(const EdgeSet& set);

// Vertex sets of triangle 2EC components, sorted by minimum vertex.
std::vector<std::vector<Vertex>> TriangleComponents(const EdgeSet& set);

// Whether the component of (V, F) containing v is a triangle. Only explores
// up to four vertices. On success `triangle` receives its vertices with v
// first.
bool InTriangleComponent(const EdgeSet& set, Vertex v,
                         std::array<Vertex, 3>* triangle = nullptr);

}  // namespace ecss

#endif  // ECSS_DECOMPOSITION_H_
