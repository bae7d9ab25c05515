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

#include "ecss/generators.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ecss/decomposition.h"
#include "ecss/error.h"

namespace ecss {
namespace {

void CheckArgs(int n, const Rational& density) {
  if (n < 3) {
    throw Error(ErrorCode::kPreconditionViolated,
                "need n >= 3, got " + std::to_string(n));
  }
  if (density < 0 || density > 1) {
    throw Error(ErrorCode::kPreconditionViolated,
                "density must lie in [0, 1], got " + ToString(density));
  }
}

}  // namespace

bool Flip(std::mt19937_64& rng, const Rational& p) {
  // Draw in [0, denominator) without modulo bias.
  const std::uint64_t den = p.denominator();
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % den;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % den) < p.numerator();
}

Graph CycleGraph(int n) {
  CheckArgs(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::Build(n, edges);
}

Graph RandomTwoVertexConnected(int n, const Rational& density,
                               std::uint64_t seed, int max_tries) {
  CheckArgs(n, density);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (Flip(rng, density)) edges.emplace_back(u, v);
      }
    }
    Graph graph = Graph::Build(n, edges);
    if (IsTwoVertexConnected(graph)) return graph;
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no 2-vertex-connected sample after " +
                  std::to_string(max_tries) + " tries (n=" +
                  std::to_string(n) + ", density=" + ToString(density) + ")");
}

Graph HamPlusChords(int n, const Rational& density, std::uint64_t seed) {
  CheckArgs(n, density);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<std::vector<bool>> taken(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    const Vertex a = order[i];
    const Vertex b = order[(i + 1) % n];
    taken[a][b] = taken[b][a] = true;
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (taken[u][v] || Flip(rng, density)) edges.emplace_back(u, v);
    }
  }
  return Graph::Build(n, edges);
}

}  // namespace ecss
