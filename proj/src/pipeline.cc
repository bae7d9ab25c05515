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

#include "ecss/pipeline.h"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "ecss/canonical.h"
#include "ecss/cover.h"
#include "ecss/decomposition.h"
#include "ecss/error.h"
#include "ecss/structured.h"
#include "json.hpp"

namespace ecss {
namespace {

std::string PairName(std::pair<Vertex, Vertex> p) {
  return std::to_string(p.first) + "-" + std::to_string(p.second);
}

std::pair<Vertex, Vertex> Ends(const Graph& graph, EdgeId e) {
  return {graph.edge(e).u, graph.edge(e).v};
}

std::pair<int, int> Score(const EdgeSet& set) {
  return {CountComponents(set), static_cast<int>(FindBridges(set).size())};
}

// Joins the smallest component to another one, by two edges when possible.
std::vector<EdgeId> MergeStep(const Graph& graph, const EdgeSet& s,
                              const Components& comps) {
  int smallest = 0;
  for (int c = 1; c < comps.count(); ++c) {
    if (comps.parts[c].size() < comps.parts[smallest].size()) smallest = c;
  }
  std::map<int, std::vector<EdgeId>> cross;
  for (Vertex v : comps.parts[smallest]) {
    for (const Incidence& inc : graph.neighbors(v)) {
      const int other = comps.component_of[inc.neighbor];
      if (other != smallest) cross[other].push_back(inc.edge);
    }
  }
  std::vector<EdgeId> best;
  std::pair<int, int> best_score;
  for (auto& [other, edges] : cross) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        EdgeSet trial = s;
        trial.insert(edges[i]);
        trial.insert(edges[j]);
        const auto score = Score(trial);
        if (best.empty() || score < best_score) {
          best = {edges[i], edges[j]};
          best_score = score;
        }
      }
    }
  }
  if (!best.empty()) return best;
  EdgeId single = -1;
  for (const auto& [other, edges] : cross) {
    if (single < 0 || edges.front() < single) single = edges.front();
  }
  if (single < 0) {
    throw Error(ErrorCode::kInfeasible, "graph is disconnected");
  }
  return {single};
}

// The non-member edge inside a component whose addition leaves the fewest
// bridges.
EdgeId BridgeStep(const Graph& graph, EdgeSet& s, int bridges) {
  EdgeId best = -1;
  int best_bridges = bridges;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    if (s.contains(e)) continue;
    s.insert(e);
    const int left = static_cast<int>(FindBridges(s).size());
    s.erase(e);
    if (left < best_bridges) {
      best = e;
      best_bridges = left;
    }
  }
  if (best < 0) {
    throw Error(ErrorCode::kInfeasible,
                "no edge of the graph covers bridge " +
                    PairName(Ends(graph, FindBridges(s).front())));
  }
  return best;
}

}  // namespace

Rational BoundValue(int size, const Rational& b, const Rational& t) {
  if (b < 0 || b > 1 || t < 0 || t > 1) {
    throw Error(ErrorCode::kPreconditionViolated,
                "fractions must lie in [0, 1]: b=" + ToString(b) +
                    " t=" + ToString(t));
  }
  return (Rational(13, 10) + t / 30 - b / 20) * size;
}

void PipelineReport::SetOpt(int value) {
  opt = value;
  ratio = Rational(solution_size, value);
}

std::string PipelineReport::ToText() const {
  std::string out;
  auto line = [&out](const std::string& key, const std::string& value) {
    out += key + ": " + value + "\n";
  };
  line("cover_size", std::to_string(cover_size));
  line("canonical_size", std::to_string(canonical_size));
  line("bridge_fraction", ToString(bridge_fraction));
  line("triangle_fraction", ToString(triangle_fraction));
  line("bound", ToString(bound));
  line("solution_size", std::to_string(solution_size));
  line("optimal", optimal ? "true" : "false");
  line("opt", opt ? std::to_string(*opt) : "unknown");
  line("ratio", ratio ? ToString(*ratio) : "unknown");
  line("lower_bound", std::to_string(lower_bound));
  line("epsilon", ToString(epsilon));
  line("size_ok", size_ok ? "true" : "false");
  line("canonicalized", canonicalized ? "true" : "false");
  if (!note.empty()) line("note", note);
  return out;
}

std::string PipelineReport::ToRecord() const {
  nlohmann::ordered_json j;
  j["cover_size"] = cover_size;
  j["canonical_size"] = canonical_size;
  j["bridge_fraction"] = ToString(bridge_fraction);
  j["triangle_fraction"] = ToString(triangle_fraction);
  j["bound"] = ToString(bound);
  j["solution_size"] = solution_size;
  j["optimal"] = optimal;
  j["opt"] = opt ? nlohmann::ordered_json(*opt) : nlohmann::ordered_json();
  j["ratio"] =
      ratio ? nlohmann::ordered_json(ToString(*ratio)) : nlohmann::ordered_json();
  return j.dump();
}

std::string TwoEdgeConnectivityFailure(const Graph& graph) {
  const Components comps = ConnectedComponents(EdgeSet::All(graph));
  if (comps.count() > 1) {
    return "graph is disconnected: vertex " +
           std::to_string(comps.parts[1].front()) +
           " is not reachable from vertex 0";
  }
  const auto bridges = FindBridges(EdgeSet::All(graph));
  if (!bridges.empty()) {
    return "graph has bridge " + PairName(Ends(graph, bridges.front()));
  }
  return "";
}

EdgeSet Glue(const Graph& graph, const EdgeSet& cover,
             bool require_semi_canonical) {
  if (!graph.SameAs(cover.graph())) {
    throw Error(ErrorCode::kGraphMismatch, "cover of a different graph");
  }
  if (const std::string failure = TwoEdgeConnectivityFailure(graph);
      !failure.empty()) {
    throw Error(ErrorCode::kInfeasible, failure);
  }
  if (require_semi_canonical) {
    const ViolationReport violations = CheckSemiCanonical(graph, cover);
    if (!violations.semi_canonical()) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "cover is not semi-canonical");
    }
  }
  EdgeSet s = cover;
  std::vector<EdgeId> added;
  while (true) {
    const Components comps = ConnectedComponents(s);
    const int bridges = static_cast<int>(FindBridges(s).size());
    if (comps.count() == 1 && bridges == 0) break;
    std::vector<EdgeId> step = comps.count() > 1
                                   ? MergeStep(graph, s, comps)
                                   : std::vector<EdgeId>{BridgeStep(graph, s, bridges)};
    for (EdgeId e : step) {
      s.insert(e);
      added.push_back(e);
    }
  }
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    s.erase(*it);
    if (!IsTwoEdgeConnected(s)) s.insert(*it);
  }
  return s;
}

std::pair<EdgeSet, PipelineReport> Solve(const Graph& graph,
                                         const Rational& epsilon,
                                         const SolverBudget& budget) {
  PipelineReport report;
  report.epsilon = epsilon;
  report.size_ok = CheckSize(graph, epsilon);
  if (const std::string failure = TwoEdgeConnectivityFailure(graph);
      !failure.empty()) {
    throw Error(ErrorCode::kInfeasible, failure);
  }
  const CoverResult h = MinTriangleFreeCover(graph, budget);
  report.cover_size = h.cover.size();
  report.lower_bound = h.cover.size();
  report.optimal = h.optimal;

  EdgeSet canonical = h.cover.edges();
  if (std::string failure = FirstStructureFailure(graph); failure.empty()) {
    auto [result, trace] =
        SemiCanonicalize(graph, h.cover, {.check_structure = false});
    canonical = result.edges();
    report.canonicalized = true;
  } else {
    report.note = "canonicalization skipped: " + failure;
  }
  report.canonical_size = canonical.size();
  const int size = canonical.size();
  report.bridge_fraction =
      Rational(static_cast<int>(FindBridges(canonical).size()), size);
  report.triangle_fraction =
      Rational(3 * static_cast<int>(TriangleComponents(canonical).size()), size);
  if (report.triangle_fraction != Rational(0)) {
    throw Error(ErrorCode::kInternalInvariant,
                "triangle component in the canonical cover");
  }
  report.bound =
      BoundValue(size, report.bridge_fraction, report.triangle_fraction);

  EdgeSet s = Glue(graph, canonical);
  if (const VerifyResult v = VerifySolution(graph, s); !v.valid) {
    throw Error(ErrorCode::kInternalInvariant, "glue output: " + v.message);
  }
  report.solution_size = s.size();
  return {std::move(s), std::move(report)};
}

VerifyResult VerifySolution(const Graph& graph, const EdgeSet& solution) {
  if (!graph.SameAs(solution.graph())) {
    throw Error(ErrorCode::kGraphMismatch, "solution of a different graph");
  }
  VerifyResult result;
  const std::vector<int> deg = Degrees(solution);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (deg[v] == 0 && graph.num_vertices() > 1) {
      result.valid = false;
      result.witness = VerifyResult::Witness::kIsolatedVertex;
      result.vertex = v;
      result.message = "vertex " + std::to_string(v) + " is not covered";
      return result;
    }
  }
  const Components comps = ConnectedComponents(solution);
  if (comps.count() > 1) {
    result.valid = false;
    result.witness = VerifyResult::Witness::kDisconnected;
    result.vertex = comps.parts[1].front();
    result.message = "vertex " + std::to_string(result.vertex) +
                     " is not connected to vertex 0";
    return result;
  }
  const auto bridges = FindBridges(solution);
  if (!bridges.empty()) {
    result.valid = false;
    result.witness = VerifyResult::Witness::kBridge;
    result.edge = Ends(graph, bridges.front());
    result.message = "edge " + PairName(result.edge) + " is a bridge";
  }
  return result;
}

VerifyResult VerifySolution(
    const Graph& graph, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  EdgeSet set(graph);
  for (const auto& [u, v] : edges) {
    const auto e = (u >= 0 && v >= 0 && u < graph.num_vertices() &&
                    v < graph.num_vertices())
                       ? graph.FindEdge(u, v)
                       : std::nullopt;
    if (!e) {
      VerifyResult result;
      result.valid = false;
      result.witness = VerifyResult::Witness::kForeignEdge;
      result.edge = {u, v};
      result.message = "edge " + PairName({u, v}) + " is not in the graph";
      return result;
    }
    set.insert(*e);
  }
  return VerifySolution(graph, set);
}

LowerBoundResult LowerBound(const Graph& graph, const SolverBudget& budget) {
  if (graph.num_vertices() < 4) {
    throw Error(ErrorCode::kPreconditionViolated,
                "lower bound needs at least 4 vertices");
  }
  const CoverResult h = MinTriangleFreeCover(graph, budget);
  return {h.cover.size(), h.optimal};
}

}  // namespace ecss
