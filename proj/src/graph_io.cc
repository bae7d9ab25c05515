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

#include "ecss/graph_io.h"

#include <fstream>
#include <sstream>

#include "ecss/error.h"

namespace ecss {
namespace {

struct Line {
  int number;
  std::vector<long long> values;
};

// Splits into non-comment, non-blank lines of integers.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    const std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream in(raw);
    Line line{number, {}};
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || used == 0) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(number) + ": not an integer '" +
                        token + "'");
      }
      line.values.push_back(value);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

void ExpectWidth(const Line& line, std::size_t width, const char* what) {
  if (line.values.size() != width) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line.number) + ": expected " + what);
  }
}

}  // namespace

Graph ParseGraph(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "missing header");
  ExpectWidth(lines[0], 2, "header \"n m\"");
  const long long n = lines[0].values[0];
  const long long m = lines[0].values[1];
  if (n < 1 || m < 0 || n > (1 << 30)) {
    throw Error(ErrorCode::kParseError, "line " +
                                            std::to_string(lines[0].number) +
                                            ": invalid header");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw Error(ErrorCode::kParseError,
                "header declares " + std::to_string(m) + " edges but " +
                    std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    ExpectWidth(lines[i], 2, "edge \"u v\"");
    const long long u = lines[i].values[0];
    const long long v = lines[i].values[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "line " + std::to_string(lines[i].number) + ": (" +
                      std::to_string(u) + "," + std::to_string(v) + ")");
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::Build(static_cast<int>(n), pairs);
}

std::string FormatGraph(const Graph& graph) {
  std::string out = std::to_string(graph.num_vertices()) + " " +
                    std::to_string(graph.num_edges()) + "\n";
  for (const Edge& e : graph.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> ParseEdgeList(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Line& line : Tokenize(text)) {
    ExpectWidth(line, 2, "edge \"u v\"");
    pairs.emplace_back(static_cast<Vertex>(line.values[0]),
                       static_cast<Vertex>(line.values[1]));
  }
  return pairs;
}

std::string FormatEdgeList(const EdgeSet& set) {
  std::string out;
  set.ForEach([&](EdgeId e) {
    const Edge& edge = set.graph().edge(e);
    out += std::to_string(edge.u) + " " + std::to_string(edge.v) + "\n";
  });
  return out;
}

std::optional<EdgeSet> ToEdgeSet(
    const Graph& graph, const std::vector<std::pair<Vertex, Vertex>>& pairs,
    std::pair<Vertex, Vertex>* foreign) {
  EdgeSet set(graph);
  for (const auto& [u, v] : pairs) {
    const auto e = graph.FindEdge(u, v);
    if (!e || u == v) {
      if (foreign != nullptr) *foreign = {u, v};
      return std::nullopt;
    }
    set.insert(*e);
  }
  return set;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ecss
