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

#include "ecss/matching.h"

#include <algorithm>
#include <array>
#include <string>

#include "ecss/decomposition.h"
#include "ecss/error.h"

namespace ecss {

void SolverBudget::Validate() const {
  if (node_limit <= 0 || time_limit.count() <= 0) {
    throw Error(ErrorCode::kPreconditionViolated,
                "solver budget limits must be positive");
  }
}

TwoMatching::TwoMatching(EdgeSet edges, bool optimal)
    : edges_(std::move(edges)), degrees_(Degrees(edges_)), optimal_(optimal) {
  for (Vertex v = 0; v < static_cast<Vertex>(degrees_.size()); ++v) {
    if (degrees_[v] > 2) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "not a 2-matching: vertex " + std::to_string(v) +
                      " has degree " + std::to_string(degrees_[v]));
    }
  }
}

bool IsTwoMatching(const EdgeSet& set) {
  const std::vector<int> deg = Degrees(set);
  return std::ranges::all_of(deg, [](int d) { return d <= 2; });
}

namespace {

class Search {
 public:
  Search(const Graph& graph, bool triangle_free, const SolverBudget& budget)
      : graph_(graph),
        triangle_free_(triangle_free),
        budget_(budget),
        deadline_(std::chrono::steady_clock::now() + budget.time_limit),
        deg_(graph.num_vertices(), 0),
        avail_(graph.num_vertices(), 0),
        mate_(graph.num_vertices(), {-1, -1}),
        chosen_(graph.num_edges(), false) {
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
      avail_[v] = graph.degree(v);
      capacity_ += Contribution(v);
    }
  }

  void Run() {
    Greedy();
    Dfs(0);
  }

  EdgeSet Best() const {
    EdgeSet set(graph_);
    for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
      if (best_[e]) set.insert(e);
    }
    return set;
  }
  std::int64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  int Contribution(Vertex v) const { return std::min(2 - deg_[v], avail_[v]); }

  bool CanInclude(const Edge& edge) const {
    if (deg_[edge.u] >= 2 || deg_[edge.v] >= 2) return false;
    if (triangle_free_ && deg_[edge.u] == 1 && deg_[edge.v] == 1 &&
        mate_[edge.u][0] == mate_[edge.v][0]) {
      return false;
    }
    return true;
  }

  void Attach(Vertex v, Vertex w) { mate_[v][deg_[v]++] = w; }
  void Detach(Vertex v) { mate_[v][--deg_[v]] = -1; }

  void Greedy() {
    for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
      const Edge& edge = graph_.edge(e);
      if (!CanInclude(edge)) continue;
      Attach(edge.u, edge.v);
      Attach(edge.v, edge.u);
      chosen_[e] = true;
      ++size_;
    }
    best_ = chosen_;
    best_size_ = size_;
    for (EdgeId e = graph_.num_edges() - 1; e >= 0; --e) {
      if (!chosen_[e]) continue;
      Detach(graph_.edge(e).u);
      Detach(graph_.edge(e).v);
      chosen_[e] = false;
    }
    size_ = 0;
  }

  bool OutOfBudget() {
    if (exhausted_) return true;
    if (nodes_ >= budget_.node_limit) {
      exhausted_ = true;
    } else if ((nodes_ & 1023) == 0 &&
               std::chrono::steady_clock::now() > deadline_) {
      exhausted_ = true;
    }
    return exhausted_;
  }

  // Applies `fn` to the capacity bookkeeping of the endpoints of `edge`.
  template <typename Fn>
  void Update(const Edge& edge, Fn&& fn) {
    capacity_ -= Contribution(edge.u) + Contribution(edge.v);
    fn();
    capacity_ += Contribution(edge.u) + Contribution(edge.v);
  }

  void Dfs(EdgeId i) {
    if (OutOfBudget()) return;
    ++nodes_;
    if (size_ > best_size_) {
      best_size_ = size_;
      best_ = chosen_;
    }
    const int undecided = graph_.num_edges() - i;
    if (undecided == 0) return;
    if (size_ + std::min(undecided, capacity_ / 2) <= best_size_) return;

    const Edge& edge = graph_.edge(i);
    Update(edge, [&] {
      --avail_[edge.u];
      --avail_[edge.v];
    });
    if (CanInclude(edge)) {
      Update(edge, [&] {
        Attach(edge.u, edge.v);
        Attach(edge.v, edge.u);
      });
      chosen_[i] = true;
      ++size_;
      Dfs(i + 1);
      --size_;
      chosen_[i] = false;
      Update(edge, [&] {
        Detach(edge.v);
        Detach(edge.u);
      });
    }
    if (!exhausted_) Dfs(i + 1);
    Update(edge, [&] {
      ++avail_[edge.u];
      ++avail_[edge.v];
    });
  }

  const Graph& graph_;
  const bool triangle_free_;
  const SolverBudget budget_;
  const std::chrono::steady_clock::time_point deadline_;

  std::vector<int> deg_;
  std::vector<int> avail_;
  std::vector<std::array<Vertex, 2>> mate_;
  std::vector<bool> chosen_;
  std::vector<bool> best_;
  int capacity_ = 0;
  int size_ = 0;
  int best_size_ = 0;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

TwoMatching BranchAndBoundSolver::Solve(const Graph& graph,
                                        const SolverBudget& budget,
                                        SolveStats* stats) const {
  budget.Validate();
  Search search(graph, triangle_free_, budget);
  search.Run();
  if (stats != nullptr) {
    stats->nodes = search.nodes();
    stats->budget_exhausted = search.exhausted();
  }
  return TwoMatching(search.Best(), !search.exhausted());
}

TwoMatching MaxTwoMatching(const Graph& graph, const SolverBudget& budget) {
  return BranchAndBoundSolver(/*triangle_free=*/false).Solve(graph, budget);
}

TwoMatching MaxTriangleFreeTwoMatching(const Graph& graph,
                                       const SolverBudget& budget) {
  return BranchAndBoundSolver(/*triangle_free=*/true).Solve(graph, budget);
}

TwoMatching MaxTriangleFreeTwoMatching(const Graph& graph,
                                       const SolverBudget& budget,
                                       const TwoMatchingSolver& solver) {
  TwoMatching result = solver.Solve(graph, budget);
  if (!IsTriangleFree(result.edges())) {
    throw Error(ErrorCode::kInternalInvariant,
                "solver returned a 2-matching with a triangle component");
  }
  return result;
}

}  // namespace ecss
