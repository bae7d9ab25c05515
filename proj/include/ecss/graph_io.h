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

#ifndef ECSS_GRAPH_IO_H_
#define ECSS_GRAPH_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecss/graph.h"

namespace ecss {

// Text graph format:
//
//   n m
//   u v      (m lines, 0-based, whitespace separated)
//
// Lines whose first non-blank character is '#' and blank lines are ignored.
// FormatGraph emits no comments, so ParseGraph(FormatGraph(g)) == g with the
// same edge order. Malformed input throws Error{kParseError} with the line
// number; invalid graphs throw the Graph::Build errors.
Graph ParseGraph(std::string_view text);
std::string FormatGraph(const Graph& graph);

// Edge list format for covers and candidate solutions: one "u v" per line.
std::vector<std::pair<Vertex, Vertex>> ParseEdgeList(std::string_view text);
std::string FormatEdgeList(const EdgeSet& set);

// Maps vertex pairs to edges of `graph`. The first pair that is not an edge
// of the graph is reported through `foreign` (when non-null) and the result
// is empty; otherwise the matching EdgeSet is returned.
std::optional<EdgeSet> ToEdgeSet(
    const Graph& graph, const std::vector<std::pair<Vertex, Vertex>>& pairs,
    std::pair<Vertex, Vertex>* foreign = nullptr);

std::string ReadFile(const std::string& path);

}  // namespace ecss

#endif  // ECSS_GRAPH_IO_H_
