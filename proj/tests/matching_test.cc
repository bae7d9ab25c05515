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

#include <gtest/gtest.h>

#include <random>

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
using ::ecss::testing::RandomGraph;

TEST(IsTwoMatchingTest, Examples) {
  EXPECT_TRUE(IsTwoMatching(EdgeSet::All(Cycle(5))));
  const Graph star = Make(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(IsTwoMatching(EdgeSet::All(star)));
  EXPECT_TRUE(IsTwoMatching(EdgeSet(star)));
  EXPECT_THROW(TwoMatching(EdgeSet::All(star)), Error);
}

TEST(MaxTwoMatchingTest, Examples) {
  EXPECT_EQ(MaxTwoMatching(Complete(3)).size(), 3);
  EXPECT_EQ(MaxTwoMatching(Path(4)).size(), 3);
  EXPECT_EQ(MaxTwoMatching(Complete(4)).size(), 4);
}

TEST(MaxTriangleFreeTwoMatchingTest, Examples) {
  EXPECT_EQ(MaxTriangleFreeTwoMatching(Complete(3)).size(), 2);
  EXPECT_EQ(MaxTriangleFreeTwoMatching(Cycle(4)).size(), 4);
  EXPECT_EQ(MaxTriangleFreeTwoMatching(Bowtie()).size(), 4);
  const TwoMatching k4 = MaxTriangleFreeTwoMatching(Complete(4));
  EXPECT_EQ(k4.size(), 4);
  EXPECT_TRUE(k4.optimal());
  EXPECT_TRUE(IsTriangleFree(k4.edges()));
}

TEST(MaxTriangleFreeTwoMatchingTest, DisjointTriangles) {
  // Without cross edges at most two edges per triangle survive.
  const Graph g = Make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(MaxTwoMatching(g).size(), 6);
  EXPECT_EQ(MaxTriangleFreeTwoMatching(g).size(), 4);
}

TEST(BranchAndBoundTest, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 300) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = RandomGraph(n, Rational(1 + rng() % 4, 5), rng);
    if (g.num_edges() > 16) continue;
    ++checked;
    const TwoMatching tf = MaxTriangleFreeTwoMatching(g);
    const TwoMatching plain = MaxTwoMatching(g);
    EXPECT_EQ(tf.size(), ExactMaxTf2Matching(g).value) << FormatGraph(g);
    EXPECT_EQ(plain.size(), ExactMaxTwoMatching(g).value) << FormatGraph(g);
    EXPECT_TRUE(IsTwoMatching(tf.edges()));
    EXPECT_TRUE(IsTriangleFree(tf.edges()));
    EXPECT_LE(tf.size(), plain.size());
    EXPECT_LE(plain.size(), n);
  }
}

TEST(BranchAndBoundTest, DeterministicOutput) {
  const Graph g = RandomTwoVertexConnected(9, Rational(1, 2), 5);
  EXPECT_EQ(MaxTriangleFreeTwoMatching(g).edges(),
            MaxTriangleFreeTwoMatching(g).edges());
}

TEST(BranchAndBoundTest, ExhaustedBudgetReturnsIncumbent) {
  const Graph g = RandomTwoVertexConnected(14, Rational(1, 2), 2);
  SolverBudget budget;
  budget.node_limit = 1;
  SolveStats stats;
  const TwoMatching m = BranchAndBoundSolver(true).Solve(g, budget, &stats);
  EXPECT_TRUE(IsTwoMatching(m.edges()));
  EXPECT_TRUE(IsTriangleFree(m.edges()));
  EXPECT_LE(stats.nodes, 1);
  EXPECT_EQ(m.optimal(), !stats.budget_exhausted);
}

TEST(SolverBudgetTest, RejectsNonPositiveLimits) {
  SolverBudget budget;
  budget.node_limit = 0;
  EXPECT_THROW(budget.Validate(), Error);
}

}  // namespace
}  // namespace ecss
