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

#ifndef ECSS_STRUCTURED_H_
#define ECSS_STRUCTURED_H_

#include <array>
#include <string>
#include <vector>

#include "ecss/graph.h"
#include "ecss/rational.h"

namespace ecss {

// Edges uv such that G - {u, v} is disconnected. Empty when n < 3.
std::vector<EdgeId> FindIrrelevantEdges(const Graph& graph);

struct TwoCut {
  Vertex u;
  Vertex v;
  std::vector<int> component_sizes;  // sizes of the parts of G - {u, v}
};

// Pairs {u, v} (u < v, any adjacency) whose removal leaves at least three
// components, or exactly two components of at least two vertices each.
// Empty when n < 4.
std::vector<TwoCut> FindNonIsolatingTwoCuts(const Graph& graph);

// n >= 2 / epsilon, in exact arithmetic. Throws Error{kEpsilonOutOfRange}
// when epsilon <= 0.
bool CheckSize(const Graph& graph, const Rational& epsilon);

// A K2,3 whose three spokes have degree exactly 2 in G: every 2-edge-
// connected spanning subgraph must keep all six edges.
struct DegreeTwoK23 {
  std::array<Vertex, 2> hubs;
  std::array<Vertex, 3> spokes;
};

// A cycle v1..vl (l in {4, 5}) of G where v2 and vl have all their
// neighbours on the cycle and v2 vl is not an edge: every 2-edge-connected
// spanning subgraph keeps the four cycle edges at v2 and vl.
struct ForcedShortCycle {
  std::vector<Vertex> cycle;  // v1, v2, ..., vl
};

std::vector<DegreeTwoK23> FindDegreeTwoK23s(const Graph& graph);
std::vector<ForcedShortCycle> FindForcedShortCycles(const Graph& graph);

// Decidable part of the structured-graph definition. General contractible
// subgraph detection is not attempted; the report says so and lists only the
// two special shapes above.
struct StructureReport {
  Rational epsilon;
  bool two_vertex_connected = false;
  bool size_ok = false;
  std::vector<EdgeId> irrelevant_edges;
  std::vector<TwoCut> non_isolating_cuts;
  std::string contractibility;
  std::vector<DegreeTwoK23> degree_two_k23s;
  std::vector<ForcedShortCycle> forced_short_cycles;

  // 2-vertex-connected with no irrelevant edge and no non-isolating 2-cut.
  // Necessary, not sufficient, for being structured.
  bool PassesDecidableChecks() const {
    return two_vertex_connected && irrelevant_edges.empty() &&
           non_isolating_cuts.empty();
  }

  // "key: value" lines.
  std::string ToText(const Graph& graph) const;
};

StructureReport BuildStructureReport(const Graph& graph,
                                     const Rational& epsilon);

// The report's PassesDecidableChecks() without the size and contractibility
// parts. Returns a description of the first failure, or empty on success.
std::string FirstStructureFailure(const Graph& graph);

}  // namespace ecss

#endif  // ECSS_STRUCTURED_H_
