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

#include "ecss/cover.h"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <vector>

#include "ecss/decomposition.h"
#include "ecss/error.h"
#include "ecss/graph_io.h"
#include "ecss/oracle.h"
#include "test_graphs.h"

namespace ecss {
namespace {

using ::ecss::testing::Bowtie;
using ::ecss::testing::Complete;
using ::ecss::testing::Cycle;
using ::ecss::testing::Make;
using ::ecss::testing::Path;
using ::ecss::testing::RandomCoverable;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalInvariant;
}

TEST(CoverPredicatesTest, Examples) {
  EXPECT_TRUE(IsTwoEdgeCover(EdgeSet::All(Cycle(4))));
  EXPECT_FALSE(IsTwoEdgeCover(EdgeSet::All(Path(4))));
  EXPECT_TRUE(IsTwoEdgeCover(EdgeSet::All(Complete(3))));

  EXPECT_EQ(Deficiency(EdgeSet(Complete(5))), 10);
  const Graph k4 = Complete(4);
  EXPECT_EQ(Deficiency(EdgeSet::Of(k4, {0, 5})), 4);  // 01, 23
  EXPECT_EQ(Deficiency(EdgeSet::All(Cycle(4))), 0);

  EXPECT_EQ(Excess(EdgeSet::All(k4)), 4);
  EXPECT_EQ(Excess(EdgeSet::All(Cycle(4))), 0);
  EXPECT_EQ(Excess(EdgeSet::All(Make(4, {{0, 1}, {0, 2}, {0, 3}}))), 1);
}

TEST(MatchingToCoverTest, CycleIsAlreadyCovered) {
  const Graph c4 = Cycle(4);
  auto [cover, trace] = MatchingToCover(c4, TwoMatching(EdgeSet::All(c4)));
  EXPECT_EQ(cover.size(), 4);
  EXPECT_TRUE(trace.steps.empty());

  const Graph k4 = Complete(4);
  const EdgeSet square = EdgeSet::Of(k4, {0, 2, 3, 5});  // 01 03 12 23
  auto [k4_cover, k4_trace] = MatchingToCover(k4, TwoMatching(square));
  EXPECT_EQ(k4_cover.edges(), square);
  EXPECT_TRUE(k4_trace.steps.empty());
}

TEST(MatchingToCoverTest, BowtiePathTrace) {
  // M = path 2-1-0-3-4: edges 12 (2), 01 (0), 03 (3), 34 (5).
  const Graph g = Bowtie();
  const TwoMatching m(EdgeSet::Of(g, {0, 2, 3, 5}));
  auto [cover, trace] = MatchingToCover(g, m);
  EXPECT_EQ(cover.size(), 6);
  EXPECT_LE(cover.size(), 2 * 5 - m.size());
  EXPECT_TRUE(IsTriangleFree(cover.edges()));
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0].rule, ConversionRule::kAddEdge);
  EXPECT_EQ(trace.steps[0].vertex, 2);
  EXPECT_EQ(trace.steps[0].added, (std::vector<EdgeId>{1}));
  EXPECT_EQ(trace.steps[1].rule, ConversionRule::kAddEdge);
  EXPECT_EQ(trace.steps[1].vertex, 4);
  EXPECT_EQ(trace.steps[1].added, (std::vector<EdgeId>{4}));
  for (const auto& step : trace.steps) {
    EXPECT_LE(step.potential_after - step.potential_before, -1);
  }
}

TEST(MatchingToCoverTest, ClosingTriangleTakesExitEdge) {
  // Square 0-1-2-3 with chord 02 and pendant triangle-closing path. M is the
  // path 1-0-2 plus 3; adding 12 would close the triangle {0,1,2}.
  const Graph g = Make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {1, 4},
                           {0, 3}});
  const TwoMatching m(EdgeSet::Of(g, {0, 1, 4}));  // 01 02 34
  auto [cover, trace] = MatchingToCover(g, m);
  EXPECT_TRUE(IsTwoEdgeCover(cover.edges()));
  EXPECT_TRUE(IsTriangleFree(cover.edges()));
  EXPECT_LE(cover.size(), 2 * 5 - m.size());
  bool saw_exit = false;
  for (const auto& step : trace.steps) {
    if (step.rule == ConversionRule::kAddEdgeAndExit) {
      saw_exit = true;
      EXPECT_EQ(step.added.size(), 2u);
      EXPECT_LE(step.potential_after - step.potential_before, -2);
    }
  }
  EXPECT_TRUE(saw_exit);
}

TEST(MatchingToCoverTest, Preconditions) {
  EXPECT_EQ(CodeOf([] {
              const Graph k3 = Complete(3);
              MatchingToCover(k3, TwoMatching(EdgeSet(k3)));
            }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(CodeOf([] {
              const Graph p = Path(5);
              MatchingToCover(p, TwoMatching(EdgeSet(p)));
            }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(CodeOf([] {
              const Graph g = Make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
                                       {3, 5}, {0, 3}});
              MatchingToCover(g, TwoMatching(EdgeSet::Of(g, {0, 1, 2})));
            }),
            ErrorCode::kPreconditionViolated);
}

TEST(CoverToMatchingTest, CycleIsAlreadyAMatching) {
  const Graph c4 = Cycle(4);
  auto [m, trace] = CoverToMatching(c4, Cover(EdgeSet::All(c4)));
  EXPECT_EQ(m.size(), 4);
  EXPECT_TRUE(trace.steps.empty());
}

TEST(CoverToMatchingTest, BowtieTrace) {
  const Graph g = Bowtie();
  auto [m, trace] = CoverToMatching(g, Cover(EdgeSet::All(g)));
  EXPECT_EQ(m.edges(), EdgeSet::Of(g, {1, 2, 4, 5}));  // 02 12 04 34
  EXPECT_TRUE(IsTriangleFree(m.edges()));
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0].rule, ConversionRule::kRemoveEdge);
  EXPECT_EQ(trace.steps[0].removed, (std::vector<EdgeId>{0}));
  EXPECT_EQ(trace.steps[1].rule, ConversionRule::kRemoveAtVertex);
  EXPECT_EQ(trace.steps[1].removed, (std::vector<EdgeId>{3}));
}

TEST(CoverToMatchingTest, CompleteGraphTrace) {
  const Graph g = Complete(4);  // 01 02 03 12 13 23
  auto [m, trace] = CoverToMatching(g, Cover(EdgeSet::All(g)));
  EXPECT_EQ(m.edges(), EdgeSet::Of(g, {2, 3, 5}));  // 03 12 23
  EXPECT_GE(m.size(), 2 * 4 - 6);
  ASSERT_EQ(trace.steps.size(), 3u);
  EXPECT_EQ(trace.steps[2].rule, ConversionRule::kRemoveAtVertex);
  EXPECT_EQ(trace.steps[2].removed, (std::vector<EdgeId>{4}));
}

TEST(CoverToMatchingTest, HangingTriangleUsesNeighborRule) {
  // Square 0-1-2-3 with triangle 4-5-6 hung from 0 by edge 0.
  const Graph g = Make(7, {{0, 4}, {4, 5}, {5, 6}, {4, 6},
                           {0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto [m, trace] = CoverToMatching(g, Cover(EdgeSet::All(g)));
  EXPECT_EQ(m.edges(), EdgeSet::Of(g, {2, 3, 4, 5, 6, 7}));
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0].rule, ConversionRule::kRemoveAtNeighbor);
  EXPECT_EQ(trace.steps[0].neighbor_degree_before, 3);
  EXPECT_EQ(trace.steps[0].removed, (std::vector<EdgeId>{1}));
  EXPECT_EQ(trace.steps[0].potential_before, 2);
  EXPECT_EQ(trace.steps[0].potential_after, 1);
  EXPECT_EQ(trace.steps[1].rule, ConversionRule::kRemoveEdge);
  EXPECT_EQ(trace.steps[1].removed, (std::vector<EdgeId>{0}));
}

TEST(CoverConversionTest, RandomRoundTrips) {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const auto g = RandomCoverable(n, Rational(1, 2), rng);
    if (!g) continue;
    ++checked;
    const TwoMatching m = MaxTriangleFreeTwoMatching(*g);
    auto [cover, grow] = MatchingToCover(*g, m);
    EXPECT_TRUE(IsTriangleFree(cover.edges()));
    EXPECT_LE(cover.size(), 2 * n - m.size());
    auto [back, shrink] = CoverToMatching(*g, cover);
    EXPECT_TRUE(IsTriangleFree(back.edges()));
    EXPECT_GE(back.size(), 2 * n - cover.size());
    for (const auto& step : shrink.steps) {
      EXPECT_EQ(step.removed.size(), 1u);
      if (step.rule == ConversionRule::kRemoveAtNeighbor) {
        EXPECT_EQ(step.neighbor_degree_before, 3);
      }
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(MinTriangleFreeCoverTest, Examples) {
  EXPECT_EQ(CodeOf([] { MinTriangleFreeCover(Complete(3)); }),
            ErrorCode::kNoCoverExists);
  EXPECT_EQ(CodeOf([] { MinTriangleFreeCover(Path(5)); }),
            ErrorCode::kNoCoverExists);
  EXPECT_EQ(MinTriangleFreeCover(Cycle(4)).cover.size(), 4);
  const CoverResult bowtie = MinTriangleFreeCover(Bowtie());
  EXPECT_EQ(bowtie.cover.size(), 6);
  EXPECT_TRUE(bowtie.optimal);
  EXPECT_EQ(ExactMinTfCover(Bowtie()).value, 6);
}

TEST(MinTriangleFreeCoverTest, TriangleComponentHasNoCover) {
  // C4 plus a separate triangle.
  const Graph g = Make(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                           {4, 6}});
  EXPECT_EQ(CodeOf([&] { MinTriangleFreeCover(g); }),
            ErrorCode::kNoCoverExists);
}

TEST(MinTriangleFreeCoverTest, WorksPerComponent) {
  const Graph g = Make(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                           {6, 7}, {4, 7}, {4, 6}});
  EXPECT_EQ(MinTriangleFreeCover(g).cover.size(), 8);
}

TEST(MinCoverTest, Examples) {
  EXPECT_EQ(MinCover(Complete(3)).cover.size(), 3);
  EXPECT_EQ(MinCover(Cycle(4)).cover.size(), 4);
  EXPECT_EQ(MinCover(Bowtie()).cover.size(), 6);
  EXPECT_EQ(ExactMinCover(Bowtie()).value, 6);
}

TEST(MinCoverTest, NeverLargerThanTriangleFree) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto g = RandomCoverable(4 + static_cast<int>(rng() % 4),
                                   Rational(1, 2), rng);
    if (!g) continue;
    const int plain = MinCover(*g).cover.size();
    EXPECT_EQ(plain, ExactMinCover(*g).value) << FormatGraph(*g);
    EXPECT_LE(plain, MinTriangleFreeCover(*g).cover.size());
  }
}

}  // namespace
}  // namespace ecss
