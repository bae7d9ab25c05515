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

#include "ecss/canonical.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "ecss/error.h"
#include "ecss/structured.h"

namespace ecss {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) {
      parent_[a] = b;
      --count_;
    }
  }
  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

std::string EdgeName(const Graph& graph, EdgeId e) {
  return std::to_string(graph.edge(e).u) + "-" + std::to_string(graph.edge(e).v);
}

std::string VertexList(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "{" + s + "}";
}

bool Contains(const std::vector<Vertex>& vs, Vertex v) {
  return std::ranges::find(vs, v) != vs.end();
}

// Shared state for exchange searches over one cover.
struct ExchangeContext {
  ExchangeContext(const Graph& g, const EdgeSet& c)
      : graph(g),
        cover(c),
        members(c.ids()),
        degree(Degrees(c)),
        components(ConnectedComponents(c)) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!c.contains(e)) others.push_back(e);
    }
  }

  // (H \ out) ∪ in is a 2-edge-cover with fewer components than H.
  bool Improves(const std::vector<EdgeId>& out,
                const std::vector<EdgeId>& in) const {
    std::vector<int> deg = degree;
    for (EdgeId e : out) {
      --deg[graph.edge(e).u];
      --deg[graph.edge(e).v];
    }
    for (EdgeId e : in) {
      ++deg[graph.edge(e).u];
      ++deg[graph.edge(e).v];
    }
    if (std::ranges::any_of(deg, [](int d) { return d < 2; })) return false;
    UnionFind uf(graph.num_vertices());
    for (EdgeId e : members) {
      if (std::ranges::find(out, e) == out.end()) {
        uf.Union(graph.edge(e).u, graph.edge(e).v);
      }
    }
    for (EdgeId e : in) uf.Union(graph.edge(e).u, graph.edge(e).v);
    return uf.count() < components.count();
  }

  const Graph& graph;
  const EdgeSet& cover;
  std::vector<EdgeId> members;
  std::vector<EdgeId> others;
  std::vector<int> degree;
  Components components;
};

// Calls fn on every k-subset of `items` (ascending positions) until it
// returns true.
bool ForEachSubset(const std::vector<EdgeId>& items, int k,
                   const std::function<bool(const std::vector<EdgeId>&)>& fn) {
  std::vector<EdgeId> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == k) return fn(chosen);
    const std::size_t remaining = k - chosen.size();
    for (std::size_t i = start; i + remaining <= items.size(); ++i) {
      chosen.push_back(items[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::optional<Swap> FindTriangleSwap(const Graph& graph, const EdgeSet& cover,
                                     bool pruned) {
  const auto triangles = TriangleComponents(cover);
  if (triangles.empty()) return std::nullopt;
  ExchangeContext ctx(graph, cover);
  std::vector<bool> triangle_edge(graph.num_edges(), false);
  for (EdgeId e : ctx.members) {
    const Vertex u = graph.edge(e).u;
    for (const auto& tri : triangles) {
      if (Contains(tri, u)) triangle_edge[e] = true;
    }
  }

  std::optional<Swap> found;
  for (int k = 1; k <= 3 && !found; ++k) {
    ForEachSubset(ctx.members, k, [&](const std::vector<EdgeId>& out) {
      if (std::ranges::none_of(out, [&](EdgeId e) { return triangle_edge[e]; })) {
        return false;
      }
      std::vector<int> deg = ctx.degree;
      std::vector<bool> touched(ctx.components.count(), false);
      for (EdgeId e : out) {
        --deg[graph.edge(e).u];
        --deg[graph.edge(e).v];
        touched[ctx.components.component_of[graph.edge(e).u]] = true;
      }
      int deficit = 0;
      for (int d : deg) deficit += std::max(0, 2 - d);
      if (deficit > 2 * k) return false;

      std::vector<EdgeId> candidates;
      for (EdgeId f : ctx.others) {
        const Edge& edge = graph.edge(f);
        if (!pruned || touched[ctx.components.component_of[edge.u]] ||
            touched[ctx.components.component_of[edge.v]]) {
          candidates.push_back(f);
        }
      }
      // Choose k added edges, tracking the remaining deficit.
      std::vector<EdgeId> in;
      std::function<bool(std::size_t, int)> rec = [&](std::size_t start,
                                                      int left) -> bool {
        const int remaining = k - static_cast<int>(in.size());
        if (remaining == 0) {
          if (left == 0 && ctx.Improves(out, in)) {
            found = Swap{out, in};
            return true;
          }
          return false;
        }
        if (left > 2 * remaining) return false;
        for (std::size_t i = start; i + remaining <= candidates.size(); ++i) {
          const Edge& edge = graph.edge(candidates[i]);
          int gain = 0;
          if (deg[edge.u]++ < 2) ++gain;
          if (deg[edge.v]++ < 2) ++gain;
          in.push_back(candidates[i]);
          const bool done = rec(i + 1, left - gain);
          in.pop_back();
          --deg[edge.u];
          --deg[edge.v];
          if (done) return true;
        }
        return false;
      };
      return rec(0, deficit);
    });
  }
  return found;
}

std::optional<Swap> FindFourCycleMerge(const Graph& graph,
                                       const EdgeSet& cover, bool pruned) {
  const Decomposition d = Decompose(cover);
  std::vector<const TwoEcComponent*> fours;
  std::vector<int> four_of(graph.num_vertices(), -1);
  for (const TwoEcComponent& c : d.twoec_components) {
    if (c.cycle_length != 4) continue;
    for (Vertex v : c.vertices) four_of[v] = static_cast<int>(fours.size());
    fours.push_back(&c);
  }
  if (fours.size() < 2) return std::nullopt;
  ExchangeContext ctx(graph, cover);

  if (pruned) {
    for (std::size_t i = 0; i < fours.size(); ++i) {
      for (std::size_t j = i + 1; j < fours.size(); ++j) {
        std::vector<EdgeId> cross;
        for (Vertex v : fours[i]->vertices) {
          for (const Incidence& inc : graph.neighbors(v)) {
            if (four_of[inc.neighbor] == static_cast<int>(j)) {
              cross.push_back(inc.edge);
            }
          }
        }
        std::sort(cross.begin(), cross.end());
        std::vector<EdgeId> inner = fours[i]->edges;
        inner.insert(inner.end(), fours[j]->edges.begin(),
                     fours[j]->edges.end());
        std::sort(inner.begin(), inner.end());
        std::optional<Swap> found;
        ForEachSubset(cross, 2, [&](const std::vector<EdgeId>& in) {
          return ForEachSubset(inner, 2, [&](const std::vector<EdgeId>& out) {
            if (!ctx.Improves(out, in)) return false;
            found = Swap{out, in};
            return true;
          });
        });
        if (found) return found;
      }
    }
    return std::nullopt;
  }

  // Definitional search over all two-edge exchanges.
  std::optional<Swap> found;
  ForEachSubset(ctx.members, 2, [&](const std::vector<EdgeId>& out) {
    return ForEachSubset(ctx.others, 2, [&](const std::vector<EdgeId>& in) {
      const Edge& f1 = graph.edge(in[0]);
      const Edge& f2 = graph.edge(in[1]);
      const int a = four_of[f1.u];
      const int b = four_of[f1.v];
      if (a < 0 || b < 0 || a == b) return false;
      const int c = four_of[f2.u];
      const int e = four_of[f2.v];
      if (!((c == a && e == b) || (c == b && e == a))) return false;
      for (EdgeId r : out) {
        const int side = four_of[graph.edge(r).u];
        if (side != a && side != b) return false;
      }
      if (!ctx.Improves(out, in)) return false;
      found = Swap{out, in};
      return true;
    });
  });
  return found;
}

ViolationReport CheckSemiCanonical(const Graph& graph, const EdgeSet& cover,
                                   const CheckOptions& options) {
  if (!graph.SameAs(cover.graph())) {
    throw Error(ErrorCode::kGraphMismatch, "cover of a different graph");
  }
  if (!IsTwoEdgeCover(cover)) {
    throw Error(ErrorCode::kPreconditionViolated, "not a 2-edge-cover");
  }
  ViolationReport report;
  const Decomposition d = Decompose(cover);
  for (const TwoEcComponent& c : d.twoec_components) {
    if (!c.is_cycle() && c.edges.size() < 7) {
      report.violations.push_back(
          {1,
           "2EC component " + VertexList(c.vertices) + " is not a cycle and has " +
               std::to_string(c.edges.size()) + " edges",
           c.vertices, c.edges, std::nullopt});
    }
  }
  for (const Block& b : d.blocks) {
    const std::size_t minimum = b.leaf() ? 6 : 4;
    if (b.edges.size() < minimum) {
      report.violations.push_back(
          {2,
           std::string(b.leaf() ? "leaf" : "inner") + " block " +
               VertexList(b.vertices) + " has " +
               std::to_string(b.edges.size()) + " edges",
           b.vertices, b.edges, std::nullopt});
    }
  }
  const bool has_triangles = !TriangleComponents(cover).empty();
  if (has_triangles &&
      graph.num_edges() > options.max_edges_for_swap_search) {
    report.swap_search_complete = false;
  } else if (auto swap = FindTriangleSwap(graph, cover, options.pruned)) {
    report.violations.push_back(
        {3, "exchange through a triangle component reduces components", {},
         {}, std::move(swap)});
  }
  if (auto swap = FindFourCycleMerge(graph, cover, options.pruned)) {
    report.violations.push_back(
        {4, "two 4-cycle components can be merged into an 8-cycle", {}, {},
         std::move(swap)});
  }
  return report;
}

std::optional<BowtieLabels> RecognizeBowtie(const Graph& graph,
                                            const Piece& piece) {
  if (piece.vertices.size() != 5 || piece.edges.size() != 6) {
    return std::nullopt;
  }
  auto local_degree = [&](Vertex v) {
    return std::ranges::count_if(piece.edges, [&](EdgeId e) {
      return graph.edge(e).Touches(v);
    });
  };
  std::optional<Vertex> center;
  for (Vertex v : piece.vertices) {
    const auto d = local_degree(v);
    if (d == 4) {
      if (center) return std::nullopt;
      center = v;
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (!center) return std::nullopt;
  BowtieLabels labels{*center, {}};
  int next = 0;
  for (EdgeId e : piece.edges) {
    const Edge& edge = graph.edge(e);
    if (edge.Touches(*center)) continue;
    // The two leaf edges must be disjoint and cover all four leaves.
    if (next == 4) return std::nullopt;
    labels.leaves[next++] = std::min(edge.u, edge.v);
    labels.leaves[next++] = std::max(edge.u, edge.v);
  }
  if (next != 4) return std::nullopt;
  std::array<Vertex, 4> sorted = labels.leaves;
  std::ranges::sort(sorted);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return std::nullopt;
  }
  return labels;
}

std::optional<K23Labels> RecognizeK23(const Graph& graph, const Piece& piece) {
  if (piece.vertices.size() != 5 || piece.edges.size() != 6) {
    return std::nullopt;
  }
  K23Labels labels{};
  int hubs = 0;
  int spokes = 0;
  for (Vertex v : piece.vertices) {
    const auto d = std::ranges::count_if(
        piece.edges, [&](EdgeId e) { return graph.edge(e).Touches(v); });
    if (d == 3 && hubs < 2) {
      labels.hubs[hubs++] = v;
    } else if (d == 2 && spokes < 3) {
      labels.spokes[spokes++] = v;
    } else {
      return std::nullopt;
    }
  }
  if (hubs != 2 || spokes != 3) return std::nullopt;
  for (EdgeId e : piece.edges) {
    const Edge& edge = graph.edge(e);
    const bool hub_u = edge.u == labels.hubs[0] || edge.u == labels.hubs[1];
    const bool hub_v = edge.v == labels.hubs[0] || edge.v == labels.hubs[1];
    if (hub_u == hub_v) return std::nullopt;  // hub-hub or spoke-spoke
  }
  return labels;
}

std::string_view OpTag(RewriteOp op) {
  switch (op) {
    case RewriteOp::kRemoveRedundant: return "a";
    case RewriteOp::kMergeFourCycles: return "b";
    case RewriteOp::kBowtie: return "c1";
    case RewriteOp::kK23: return "c2";
    case RewriteOp::kLeafBlockSwap: return "d1";
    case RewriteOp::kLeafBlockTwoSwap: return "d2";
    case RewriteOp::kInnerTriangle: return "e";
  }
  return "?";
}

Potential PotentialOf(const EdgeSet& set) {
  return Potential{set.size(), CountComponents(set),
                   static_cast<int>(FindBridges(set).size())};
}

std::string RewriteTrace::ToText(const Graph& graph) const {
  auto edges = [&](const std::vector<EdgeId>& ids) {
    std::string s;
    for (EdgeId e : ids) s += (s.empty() ? "" : ",") + EdgeName(graph, e);
    return "[" + s + "]";
  };
  auto triple = [](const Potential& p) {
    return "(" + std::to_string(p.size) + "," + std::to_string(p.components) +
           "," + std::to_string(p.bridges) + ")";
  };
  std::string out;
  for (const RewriteStep& step : steps) {
    out += "op=" + std::string(OpTag(step.op)) + " removed=" +
           edges(step.removed) + " added=" + edges(step.added) +
           " potential=" + triple(step.before) + "->" + triple(step.after) +
           "\n";
  }
  return out;
}

namespace {

struct Change {
  RewriteOp op;
  std::vector<EdgeId> removed;
  std::vector<EdgeId> added;
};

class Rewriter {
 public:
  Rewriter(const Graph& graph, EdgeSet cover)
      : graph_(graph), cover_(std::move(cover)) {}

  RewriteTrace Run() {
    RewriteTrace trace;
    while (auto change = NextChange()) {
      RewriteStep step{change->op, change->removed, change->added,
                       PotentialOf(cover_), {}};
      for (EdgeId e : change->removed) cover_.erase(e);
      for (EdgeId e : change->added) cover_.insert(e);
      step.after = PotentialOf(cover_);
      if (!IsTwoEdgeCover(cover_) || !IsTriangleFree(cover_)) {
        throw Error(ErrorCode::kInternalInvariant,
                    "operation " + std::string(OpTag(change->op)) +
                        " left a set that is not a triangle-free "
                        "2-edge-cover");
      }
      if (!(step.after < step.before)) {
        throw Error(ErrorCode::kInternalInvariant,
                    "operation " + std::string(OpTag(change->op)) +
                        " did not decrease the potential");
      }
      trace.steps.push_back(std::move(step));
    }
    return trace;
  }

  EdgeSet& cover() { return cover_; }

 private:
  std::optional<Change> NextChange() {
    if (auto e = RedundantEdge()) {
      return Change{RewriteOp::kRemoveRedundant, {*e}, {}};
    }
    if (auto swap = FindFourCycleMerge(graph_, cover_, /*pruned=*/true)) {
      return Change{RewriteOp::kMergeFourCycles, swap->out, swap->in};
    }
    const Decomposition d = Decompose(cover_);
    for (const TwoEcComponent& c : d.twoec_components) {
      if (!c.is_cycle() && c.edges.size() < 7) return SmallComponent(c);
    }
    for (const Block& b : d.blocks) {
      if (b.leaf() && b.edges.size() <= 5) {
        return ShortCycleBlock(d, b, RewriteOp::kLeafBlockSwap);
      }
    }
    for (const Block& b : d.blocks) {
      if (!b.leaf() && b.edges.size() <= 3) {
        return ShortCycleBlock(d, b, RewriteOp::kInnerTriangle);
      }
    }
    return std::nullopt;
  }

  // (a): lowest-index edge whose removal keeps a triangle-free cover.
  std::optional<EdgeId> RedundantEdge() {
    const std::vector<int> deg = Degrees(cover_);
    for (EdgeId e : cover_.ids()) {
      const Edge& edge = graph_.edge(e);
      if (deg[edge.u] < 3 || deg[edge.v] < 3) continue;
      cover_.erase(e);
      const bool ok = !InTriangleComponent(cover_, edge.u) &&
                      !InTriangleComponent(cover_, edge.v);
      cover_.insert(e);
      if (ok) return e;
    }
    return std::nullopt;
  }

  EdgeId Member(Vertex a, Vertex b) const {
    const auto e = graph_.FindEdge(a, b);
    if (!e || !cover_.contains(*e)) {
      throw Error(ErrorCode::kInternalInvariant,
                  "expected cover edge " + std::to_string(a) + "-" +
                      std::to_string(b));
    }
    return *e;
  }

  // Lowest-index non-cover edge from one of `from` to a vertex outside
  // `inside`.
  std::optional<Incidence> EdgeLeaving(const std::vector<Vertex>& from,
                                       const std::vector<Vertex>& inside,
                                       Vertex* source) const {
    std::optional<Incidence> best;
    for (Vertex x : from) {
      for (const Incidence& inc : graph_.neighbors(x)) {
        if (cover_.contains(inc.edge) || Contains(inside, inc.neighbor)) {
          continue;
        }
        if (!best || inc.edge < best->edge) {
          best = inc;
          *source = x;
        }
      }
    }
    return best;
  }

  // (c): a non-cycle 2EC component with fewer than 7 edges.
  Change SmallComponent(const TwoEcComponent& c) {
    if (c.vertices.size() != 5 || c.edges.size() != 6) {
      throw Error(ErrorCode::kInternalInvariant,
                  "small non-cycle component " + VertexList(c.vertices) +
                      " is not 5 vertices / 6 edges");
    }
    if (auto bow = RecognizeBowtie(graph_, c)) return Bowtie(c, *bow);
    if (auto k23 = RecognizeK23(graph_, c)) return K23(c, *k23);
    throw Error(ErrorCode::kInternalInvariant,
                "component " + VertexList(c.vertices) +
                    " is neither a bowtie nor a K2,3");
  }

  Change Bowtie(const TwoEcComponent& c, const BowtieLabels& bow) {
    const Vertex u = bow.center;
    const auto& l = bow.leaves;
    std::optional<EdgeId> cross;
    Vertex va = -1;
    Vertex vb = -1;
    for (int i : {0, 1}) {
      for (int j : {2, 3}) {
        const auto e = graph_.FindEdge(l[i], l[j]);
        if (e && (!cross || *e < *cross)) {
          cross = e;
          va = l[i];
          vb = l[j];
        }
      }
    }
    if (cross) {
      // u - va' - va - vb - vb' - u
      return Change{RewriteOp::kBowtie, {Member(u, va), Member(u, vb)},
                    {*cross}};
    }
    Vertex w = -1;
    const auto out = EdgeLeaving({l[0], l[1], l[2], l[3]}, c.vertices, &w);
    if (!out) {
      throw Error(ErrorCode::kStructureViolation,
                  "bowtie " + VertexList(c.vertices) + " is separated by " +
                      std::to_string(u) + " (graph not 2-vertex-connected)");
    }
    return Change{RewriteOp::kBowtie, {Member(u, w)}, {out->edge}};
  }

  Change K23(const TwoEcComponent& c, const K23Labels& k) {
    const auto& w = k.spokes;
    if (std::ranges::all_of(w, [&](Vertex x) { return graph_.degree(x) == 2; })) {
      throw Error(ErrorCode::kStructureViolation,
                  "K2,3 " + VertexList(c.vertices) +
                      " has all spokes of degree 2 (5/4-contractible)");
    }
    std::optional<EdgeId> chord;
    int wi = -1;
    int wj = -1;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const auto e = graph_.FindEdge(w[i], w[j]);
        if (e && (!chord || *e < *chord)) {
          chord = e;
          wi = i;
          wj = j;
        }
      }
    }
    const Vertex v1 = k.hubs[0];
    const Vertex v2 = k.hubs[1];
    if (chord) {
      // v1 - wi - wj - v2 - wk - v1
      return Change{RewriteOp::kK23,
                    {Member(v2, w[wi]), Member(v1, w[wj])},
                    {*chord}};
    }
    Vertex spoke = -1;
    const auto out = EdgeLeaving({w[0], w[1], w[2]}, c.vertices, &spoke);
    if (!out) {
      throw Error(ErrorCode::kInternalInvariant,
                  "K2,3 " + VertexList(c.vertices) +
                      " has a spoke of degree > 2 but no outside neighbour");
    }
    return Change{RewriteOp::kK23, {Member(v1, spoke)}, {out->edge}};
  }

  // (d) for leaf blocks and (e) for inner triangle blocks.
  Change ShortCycleBlock(const Decomposition& d, const Block& b, RewriteOp op) {
    if (b.edges.size() != b.vertices.size()) {
      throw Error(ErrorCode::kInternalInvariant,
                  "short block " + VertexList(b.vertices) + " is not a cycle");
    }
    std::vector<Vertex> attach;
    for (EdgeId e : d.bridges) {
      for (Vertex x : {graph_.edge(e).u, graph_.edge(e).v}) {
        if (Contains(b.vertices, x) && !Contains(attach, x)) {
          attach.push_back(x);
        }
      }
    }
    if (attach.size() != 1) {
      throw Error(ErrorCode::kInternalInvariant,
                  "bridges at block " + VertexList(b.vertices) +
                      " do not share one vertex");
    }
    std::vector<Vertex> cycle = CycleOrder(b, attach[0]);
    const int len = static_cast<int>(cycle.size());

    // (d1)
    Vertex w = -1;
    if (const auto out = EdgeLeaving({cycle[1], cycle[len - 1]}, b.vertices, &w)) {
      return Change{op, {Member(cycle[0], w)}, {out->edge}};
    }
    // (d2)
    if (len == 3) {
      throw Error(ErrorCode::kStructureViolation,
                  "triangle block " + VertexList(b.vertices) +
                      " is attached only through " + std::to_string(cycle[0]) +
                      " (graph not 2-vertex-connected)");
    }
    if (!graph_.HasEdge(cycle[1], cycle[len - 1])) {
      throw Error(ErrorCode::kStructureViolation,
                  "block cycle " + VertexList(cycle) + " lacks chord " +
                      std::to_string(cycle[1]) + "-" +
                      std::to_string(cycle[len - 1]) + " (5/4-contractible)");
    }
    std::vector<Vertex> middle(cycle.begin() + 2, cycle.end() - 1);
    Vertex x = -1;
    const auto out = EdgeLeaving(middle, b.vertices, &x);
    if (!out) {
      throw Error(ErrorCode::kStructureViolation,
                  "block cycle " + VertexList(cycle) +
                      " is attached only through " + std::to_string(cycle[0]) +
                      " (graph not 2-vertex-connected)");
    }
    if (x != cycle[2]) {
      std::reverse(cycle.begin() + 1, cycle.end());
    }
    // Replace v1 vl and v2 v3 with v3 z and v2 vl.
    return Change{op == RewriteOp::kLeafBlockSwap ? RewriteOp::kLeafBlockTwoSwap
                                                  : op,
                  {Member(cycle[0], cycle[len - 1]), Member(cycle[1], cycle[2])},
                  {out->edge, *graph_.FindEdge(cycle[1], cycle[len - 1])}};
  }

  // Cycle vertices starting at `start`, leaving it by its lower-index block
  // edge.
  std::vector<Vertex> CycleOrder(const Block& b, Vertex start) const {
    std::vector<Vertex> order{start};
    Vertex prev = -1;
    Vertex cur = start;
    while (true) {
      EdgeId next = -1;
      for (EdgeId e : b.edges) {
        const Edge& edge = graph_.edge(e);
        if (edge.Touches(cur) && edge.Other(cur) != prev) {
          next = e;
          break;
        }
      }
      const Vertex to = graph_.edge(next).Other(cur);
      if (to == start) break;
      order.push_back(to);
      prev = cur;
      cur = to;
    }
    return order;
  }

  const Graph& graph_;
  EdgeSet cover_;
};

}  // namespace

std::pair<Cover, RewriteTrace> SemiCanonicalize(
    const Graph& graph, const Cover& cover,
    const CanonicalizeOptions& options) {
  if (!graph.SameAs(cover.edges().graph())) {
    throw Error(ErrorCode::kGraphMismatch, "cover of a different graph");
  }
  if (!IsTriangleFree(cover.edges())) {
    throw Error(ErrorCode::kPreconditionViolated,
                "cover has a triangle component");
  }
  if (options.check_structure) {
    if (const std::string failure = FirstStructureFailure(graph);
        !failure.empty()) {
      throw Error(ErrorCode::kPreconditionViolated, failure);
    }
  }
  Rewriter rewriter(graph, cover.edges());
  RewriteTrace trace = rewriter.Run();
  return {Cover(std::move(rewriter.cover())), std::move(trace)};
}

}  // namespace ecss
