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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ecss/cover.h"
#include "ecss/decomposition.h"
#include "ecss/error.h"
#include "ecss/generators.h"
#include "ecss/structured.h"
#include "test_graphs.h"

namespace ecss {
namespace {

using ::ecss::testing::Bowtie;
using ::ecss::testing::Complete;
using ::ecss::testing::Cycle;
using ::ecss::testing::EdgesOf;
using ::ecss::testing::K23;
using ::ecss::testing::Make;
using ::ecss::testing::Pairs;

constexpr CanonicalizeOptions kNoStructureCheck{.check_structure = false};

Piece WholeGraph(const Graph& g) {
  Piece piece;
  piece.vertices.resize(g.num_vertices());
  std::iota(piece.vertices.begin(), piece.vertices.end(), 0);
  piece.edges = EdgeSet::All(g).ids();
  return piece;
}

// Cover made of the first `k` edges of g.
EdgeSet Prefix(const Graph& g, int k) {
  EdgeSet set(g);
  for (EdgeId e = 0; e < k; ++e) set.insert(e);
  return set;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

void ExpectSound(const Graph& g, const Cover& before, const Cover& after,
                 const RewriteTrace& trace) {
  EXPECT_LE(after.size(), before.size());
  EXPECT_TRUE(IsTriangleFree(after.edges()));
  EXPECT_TRUE(CheckSemiCanonical(g, after.edges()).semi_canonical());
  for (const RewriteStep& step : trace.steps) EXPECT_LT(step.after, step.before);
}

TEST(CheckSemiCanonicalTest, SpanningOctagonIsClean) {
  const Graph g = Cycle(8);
  const ViolationReport r = CheckSemiCanonical(g, EdgeSet::All(g));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(r.semi_canonical());
}

TEST(CheckSemiCanonicalTest, MergeableSquares) {
  // Squares 0-1-2-3 and 4-5-6-7 with cross edges 04 and 15.
  const Graph g = Make(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                           {6, 7}, {4, 7}, {0, 4}, {1, 5}});
  const ViolationReport r = CheckSemiCanonical(g, Prefix(g, 8));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].condition, 4);
  ASSERT_TRUE(r.violations[0].swap.has_value());
  EXPECT_EQ(r.violations[0].swap->out, (std::vector<EdgeId>{0, 4}));
  EXPECT_EQ(r.violations[0].swap->in, (std::vector<EdgeId>{8, 9}));
  EXPECT_FALSE(r.semi_canonical());
}

TEST(CheckSemiCanonicalTest, IsolatedTriangleComponentIsAllowed) {
  // Triangle {0,1,2} and square {3,4,5,6} joined by the single edge 03.
  const Graph g = Make(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6},
                           {3, 6}, {0, 3}});
  EXPECT_TRUE(CheckSemiCanonical(g, Prefix(g, 7)).violations.empty());
}

TEST(CheckSemiCanonicalTest, TriangleSwapIsReported) {
  const Graph g = Make(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6},
                           {3, 6}, {0, 3}, {1, 4}});
  const EdgeSet h = Prefix(g, 7);
  const ViolationReport r = CheckSemiCanonical(g, h);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].condition, 3);
  const Swap& swap = *r.violations[0].swap;
  EXPECT_EQ(swap.out.size(), 2u);
  EdgeSet swapped = h;
  for (EdgeId e : swap.out) swapped.erase(e);
  for (EdgeId e : swap.in) swapped.insert(e);
  EXPECT_TRUE(IsTwoEdgeCover(swapped));
  EXPECT_LT(CountComponents(swapped), CountComponents(h));
  EXPECT_EQ(FindTriangleSwap(g, h, false).has_value(), true);
}

TEST(CheckSemiCanonicalTest, SmallBlocks) {
  // Triangle {0,1,2} between two squares: an inner block with 3 edges and
  // two leaf blocks with 4 edges.
  const Graph g = Make(11, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5},
                            {5, 6}, {3, 6}, {1, 7}, {7, 8}, {8, 9}, {9, 10},
                            {7, 10}});
  const ViolationReport r = CheckSemiCanonical(g, EdgeSet::All(g));
  ASSERT_EQ(r.violations.size(), 3u);
  for (const Violation& v : r.violations) EXPECT_EQ(v.condition, 2);
  EXPECT_EQ(r.violations[0].vertices, (std::vector<Vertex>{0, 1, 2}));
}

TEST(CheckSemiCanonicalTest, SmallNonCycleComponent) {
  const Graph g = Bowtie();
  const ViolationReport r = CheckSemiCanonical(g, EdgeSet::All(g));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].condition, 1);
}

TEST(CheckSemiCanonicalTest, SwapSearchCap) {
  const Graph g = Make(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6},
                           {3, 6}, {0, 3}});
  const ViolationReport r =
      CheckSemiCanonical(g, Prefix(g, 7), {.max_edges_for_swap_search = 5});
  EXPECT_TRUE(r.violations.empty());
  EXPECT_FALSE(r.swap_search_complete);
  EXPECT_FALSE(r.semi_canonical());
}

TEST(CheckSemiCanonicalTest, RequiresCover) {
  const Graph g = Cycle(5);
  EXPECT_THROW(CheckSemiCanonical(g, Prefix(g, 4)), Error);
}

TEST(RecognizeTest, Bowtie) {
  const auto bow = RecognizeBowtie(Bowtie(), WholeGraph(Bowtie()));
  ASSERT_TRUE(bow.has_value());
  EXPECT_EQ(bow->center, 0);
  EXPECT_EQ(bow->leaves, (std::array<Vertex, 4>{1, 2, 3, 4}));
  EXPECT_FALSE(RecognizeBowtie(K23(), WholeGraph(K23())).has_value());
  EXPECT_FALSE(RecognizeBowtie(Cycle(5), WholeGraph(Cycle(5))).has_value());
}

TEST(RecognizeTest, K23) {
  const auto k = RecognizeK23(K23(), WholeGraph(K23()));
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->hubs, (std::array<Vertex, 2>{0, 1}));
  EXPECT_EQ(k->spokes, (std::array<Vertex, 3>{2, 3, 4}));
  EXPECT_FALSE(RecognizeK23(Bowtie(), WholeGraph(Bowtie())).has_value());
  EXPECT_FALSE(RecognizeK23(Cycle(6), WholeGraph(Cycle(6))).has_value());
}

TEST(SemiCanonicalizeTest, AlreadyCanonical) {
  const Graph g = Complete(5);
  const Cover h(EdgesOf(g, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
  auto [result, trace] = SemiCanonicalize(g, h);
  EXPECT_EQ(result.edges(), h.edges());
  EXPECT_TRUE(trace.steps.empty());
}

TEST(SemiCanonicalizeTest, RedundantEdges) {
  const Graph g = Complete(4);
  const Cover h(EdgeSet::All(g));
  auto [result, trace] = SemiCanonicalize(g, h);
  EXPECT_EQ(result.size(), 4);
  EXPECT_EQ(trace.ToText(g),
            "op=a removed=[0-1] added=[] potential=(6,1,0)->(5,1,0)\n"
            "op=a removed=[2-3] added=[] potential=(5,1,0)->(4,1,0)\n");
  ExpectSound(g, h, result, trace);
}

TEST(SemiCanonicalizeTest, MergesSquaresOfTheCube) {
  // Faces 0-1-3-2 and 4-5-7-6 of the 3-cube.
  const Graph g = Make(8, {{0, 1}, {1, 3}, {2, 3}, {0, 2}, {4, 5}, {5, 7},
                           {6, 7}, {4, 6}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  ASSERT_EQ(FirstStructureFailure(g), "");
  const Cover h(Prefix(g, 8));
  auto [result, trace] = SemiCanonicalize(g, h);
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(Lines(trace.ToText(g))[0],
            "op=b removed=[0-1,4-5] added=[0-4,1-5] "
            "potential=(8,2,0)->(8,1,0)");
  ExpectSound(g, h, result, trace);
}

// Bowtie {0 | 1,2 | 3,4} and square 5-6-7-8 linked by 25 and 47.
Pairs BowtieAndSquare() {
  return {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {5, 6},
          {6, 7}, {7, 8}, {5, 8}, {2, 5}, {4, 7}};
}

TEST(SemiCanonicalizeTest, BowtieWithShortcutBecomesFiveCycle) {
  Pairs pairs = BowtieAndSquare();
  pairs.emplace_back(1, 3);
  const Graph g = Make(9, pairs);
  const Cover h(Prefix(g, 10));
  auto [result, trace] = SemiCanonicalize(g, h, kNoStructureCheck);
  EXPECT_EQ(trace.ToText(g),
            "op=c1 removed=[0-1,0-3] added=[1-3] "
            "potential=(10,2,0)->(9,2,0)\n");
  EXPECT_EQ(result.size(), h.size() - 1);
  ExpectSound(g, h, result, trace);
}

TEST(SemiCanonicalizeTest, BowtieWithoutShortcutSwapsOut) {
  const Graph g = Make(9, BowtieAndSquare());
  const Cover h(Prefix(g, 10));
  auto [result, trace] = SemiCanonicalize(g, h, kNoStructureCheck);
  EXPECT_EQ(trace.ToText(g),
            "op=c1 removed=[0-2] added=[2-5] potential=(10,2,0)->(10,1,3)\n"
            "op=d1 removed=[0-4] added=[4-7] potential=(10,1,3)->(10,1,0)\n");
  ExpectSound(g, h, result, trace);
}

// K2,3 with hubs 0, 1 and spokes 2, 3, 4, plus square 5-6-7-8.
Pairs K23AndSquare() {
  return {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
          {5, 6}, {6, 7}, {7, 8}, {5, 8}, {1, 7}};
}

TEST(SemiCanonicalizeTest, K23WithChordBecomesFiveCycle) {
  Pairs pairs = K23AndSquare();
  pairs.emplace_back(4, 5);
  pairs.emplace_back(2, 3);
  const Graph g = Make(9, pairs);
  const Cover h(Prefix(g, 10));
  auto [result, trace] = SemiCanonicalize(g, h, kNoStructureCheck);
  EXPECT_EQ(trace.ToText(g),
            "op=c2 removed=[1-2,0-3] added=[2-3] "
            "potential=(10,2,0)->(9,2,0)\n");
  ExpectSound(g, h, result, trace);
}

TEST(SemiCanonicalizeTest, K23SpokeSwapsOut) {
  Pairs pairs = K23AndSquare();
  pairs.emplace_back(4, 5);
  pairs.emplace_back(2, 6);
  const Graph g = Make(9, pairs);
  const Cover h(Prefix(g, 10));
  auto [result, trace] = SemiCanonicalize(g, h, kNoStructureCheck);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(Lines(trace.ToText(g))[0],
            "op=c2 removed=[0-4] added=[4-5] potential=(10,2,0)->(10,1,2)");
  ExpectSound(g, h, result, trace);
}

TEST(SemiCanonicalizeTest, K23WithDegreeTwoSpokesIsNotStructured) {
  Pairs pairs = K23AndSquare();
  pairs.emplace_back(0, 5);
  const Graph g = Make(9, pairs);
  try {
    SemiCanonicalize(g, Cover(Prefix(g, 10)), kNoStructureCheck);
    FAIL() << "expected StructureViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructureViolation);
  }
}

// Square 0-1-2-3 hanging from square 4-5-6-7 by the path 0-8-4.
Pairs HangingSquares() {
  return {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 8},
          {4, 8}, {4, 5}, {5, 6}, {6, 7}, {4, 7}};
}

TEST(SemiCanonicalizeTest, LeafBlockSingleSwap) {
  Pairs pairs = HangingSquares();
  pairs.emplace_back(1, 5);
  const Graph g = Make(9, pairs);
  const Cover h(Prefix(g, 10));
  auto [result, trace] = SemiCanonicalize(g, h, kNoStructureCheck);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(Lines(trace.ToText(g))[0],
            "op=d1 removed=[0-1] added=[1-5] potential=(10,1,2)->(10,1,0)");
  ExpectSound(g, h, result, trace);
}

TEST(SemiCanonicalizeTest, LeafBlockDoubleSwap) {
  Pairs pairs = HangingSquares();
  pairs.emplace_back(1, 3);
  pairs.emplace_back(2, 6);
  const Graph g = Make(9, pairs);
  const Cover h(Prefix(g, 10));
  auto [result, trace] = SemiCanonicalize(g, h, kNoStructureCheck);
  EXPECT_EQ(trace.ToText(g),
            "op=d2 removed=[0-3,1-2] added=[2-6,1-3] "
            "potential=(10,1,2)->(10,1,0)\n");
  ExpectSound(g, h, result, trace);
}

TEST(SemiCanonicalizeTest, LeafBlockWithoutChordIsNotStructured) {
  Pairs pairs = HangingSquares();
  pairs.emplace_back(2, 6);
  const Graph g = Make(9, pairs);
  try {
    SemiCanonicalize(g, Cover(Prefix(g, 10)), kNoStructureCheck);
    FAIL() << "expected StructureViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructureViolation);
  }
}

TEST(SemiCanonicalizeTest, InnerTriangleBlock) {
  // Triangle {0,1,2} with pendant paths 0-3 and 0-10 to hexagons 4..9 and
  // 11..16.
  const Graph g = Make(17, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5},
                            {5, 6}, {6, 7}, {7, 8}, {8, 9}, {4, 9}, {0, 10},
                            {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15},
                            {15, 16}, {11, 16}, {2, 5}});
  const Cover h(Prefix(g, 19));
  auto [result, trace] = SemiCanonicalize(g, h, kNoStructureCheck);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(Lines(trace.ToText(g))[0],
            "op=e removed=[0-2] added=[2-5] potential=(19,1,4)->(19,1,2)");
  ExpectSound(g, h, result, trace);
}

TEST(SemiCanonicalizeTest, Preconditions) {
  const Graph k6 = Complete(6);
  const Cover triangles(
      EdgesOf(k6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
  EXPECT_THROW(SemiCanonicalize(k6, triangles), Error);
  const Graph bowtie = Bowtie();
  try {
    SemiCanonicalize(bowtie, Cover(EdgeSet::All(bowtie)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
  const Graph k4 = Complete(4);
  try {
    SemiCanonicalize(k4, Cover(EdgeSet::All(Complete(4))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGraphMismatch);
  }
}

TEST(SemiCanonicalizeTest, RandomStructuredCovers) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const int n = 6 + static_cast<int>(rng() % 5);
    const Graph g = RandomTwoVertexConnected(n, Rational(2, 5), rng());
    if (!FirstStructureFailure(g).empty()) continue;
    EdgeSet h = MinTriangleFreeCover(g).cover.edges();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (rng() % 3 == 0) h.insert(e);
    }
    if (!IsTriangleFree(h)) continue;
    const Cover cover(h);
    try {
      auto [result, trace] = SemiCanonicalize(g, cover);
      ExpectSound(g, cover, result, trace);
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kStructureViolation) << e.what();
    }
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace ecss
