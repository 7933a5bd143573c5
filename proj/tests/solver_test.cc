// Copyright 2026 The unpop Authors
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

#include "unpop/solver.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_support.h"
#include "unpop/errors.h"
#include "unpop/walk_dp.h"

namespace unpop {
namespace {

using testing::RandomGraph;
using testing::RandomRestrictedGraph;

SolverConfig Config(std::uint64_t seed) {
  SolverConfig c;
  c.seed = seed;
  return c;
}

TEST(SolverTest, TriangleWithOneSet) {
  ConstrainedGraph g;
  g.node_count = 3;
  g.edges = {{0, 1}, {1, 2}, {2, 0}};
  g.sets = {{1}};
  const auto r = Solve(g, Config(1));
  ASSERT_TRUE(r.detection.feasible);
  EXPECT_EQ(r.detection.length, 3);
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_EQ(r.solution->chosen, std::vector<int>{1});
}

TEST(SolverTest, TwoParallelEdgesFormACycle) {
  ConstrainedGraph g;
  g.node_count = 2;
  g.edges = {{0, 1}, {0, 1}};
  g.sets = {{0}, {1}};
  const auto r = Solve(g, Config(3));
  ASSERT_TRUE(r.detection.feasible);
  EXPECT_EQ(r.detection.length, 2);
}

TEST(SolverTest, SetUsedTwiceIsInfeasible) {
  // The only cycle uses both edges of S_0.
  ConstrainedGraph g;
  g.node_count = 3;
  g.edges = {{0, 1}, {1, 2}, {2, 0}};
  g.sets = {{0, 1}};
  EXPECT_FALSE(Detect(g, Config(2)).feasible);
  EXPECT_FALSE(BruteForce(g, false).has_value());
}

TEST(SolverTest, EmptySetIsInfeasible) {
  ConstrainedGraph g;
  g.node_count = 3;
  g.edges = {{0, 1}, {1, 2}, {2, 0}};
  g.sets = {{0}, {}};
  EXPECT_FALSE(Detect(g, Config(2)).feasible);
}

TEST(SolverTest, RejectsParallelEdgesInOneSet) {
  ConstrainedGraph g;
  g.node_count = 2;
  g.edges = {{0, 1}, {1, 0}};
  g.sets = {{0, 1}};
  EXPECT_THROW(Detect(g, Config(1)), InvalidInput);
}

TEST(SolverTest, RejectsTooManySets) {
  ConstrainedGraph g;
  g.node_count = 2;
  g.edges = {{0, 1}};
  g.sets.assign(SolverConfig::kMaxSets + 1, {0});
  EXPECT_THROW(Detect(g, Config(1)), InvalidInput);
}

TEST(SolverTest, BruteForceRefusesLargeGraphs) {
  ConstrainedGraph g;
  g.node_count = kBruteForceMaxNodes + 1;
  g.edges = {{0, 1}};
  g.sets = {{0}};
  EXPECT_THROW(BruteForce(g, false), TooLarge);
}

TEST(SolverTest, GreedyCoverPrefersHighDegree) {
  ConstrainedGraph g;
  g.node_count = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {2, 3}};
  const auto cover = GreedyVertexCover(g, {0, 1, 2, 3});
  EXPECT_EQ(cover, (std::vector<int>{0, 2}));
}

TEST(SolverTest, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const ConstrainedGraph g = RandomGraph(rng, 10, 20, 3);
    const auto oracle = BruteForce(g, false);
    const auto got = Solve(g, Config(trial + 1));
    ASSERT_EQ(got.detection.feasible, oracle.has_value()) << "trial " << trial;
    if (!oracle) continue;
    ++feasible;
    EXPECT_EQ(got.detection.length, oracle->length()) << "trial " << trial;
    ASSERT_TRUE(got.solution.has_value());
    EXPECT_EQ(CheckSolution(g, *got.solution, false), "");
    EXPECT_EQ(got.solution->length(), oracle->length());
  }
  EXPECT_GT(feasible, 30);
}

TEST(SolverTest, PolySpaceSumsEqualSubsetDp) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const ConstrainedGraph g = RandomGraph(rng, 8, 16, 4);
    CycleSolver solver(g, Config(trial));
    const auto w = solver.DrawWeights();
    for (int b = 0; b < g.node_count; ++b) {
      const auto dp = ClosedSums(solver.prepared(), solver.field(), w, b,
                                 g.node_count);
      const auto ps = PolySpaceClosedSums(solver.prepared(), solver.field(),
                                          w, b, g.node_count);
      ASSERT_EQ(dp, ps) << "trial " << trial << " start " << b;
    }
  }
}

TEST(SolverTest, SumsVanishBelowMinimumLength) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const ConstrainedGraph g = RandomGraph(rng, 9, 18, 3);
    const auto oracle = BruteForce(g, false);
    const int below = oracle ? oracle->length() : g.node_count + 1;
    if (std::any_of(g.sets.begin(), g.sets.end(),
                    [](const auto& s) { return s.empty(); })) {
      continue;
    }
    CycleSolver solver(g, Config(trial));
    for (int seed = 0; seed < 20; ++seed) {
      const auto w = solver.DrawWeights();
      for (int b = 0; b < g.node_count; ++b) {
        const auto sums = ClosedSums(solver.prepared(), solver.field(), w, b,
                                     below - 1);
        for (int l = 1; l < below; ++l) ASSERT_EQ(sums[l], 0u);
      }
    }
  }
}

TEST(SolverTest, ClosedSumIsHomogeneousInTheWeights) {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const ConstrainedGraph g = RandomGraph(rng, 8, 16, 3);
    CycleSolver solver(g, Config(trial));
    const auto& f = solver.field();
    auto w = solver.DrawWeights();
    Rng local(trial);
    const FieldElement c = f.RandomNonzero(local);
    auto scaled = w;
    for (auto& x : scaled) x = f.Mul(x, c);
    for (int b = 0; b < g.node_count; ++b) {
      const auto a = ClosedSums(solver.prepared(), f, w, b, g.node_count);
      const auto s = ClosedSums(solver.prepared(), f, scaled, b, g.node_count);
      for (int l = 1; l <= g.node_count; ++l) {
        ASSERT_EQ(s[l], f.Mul(a[l], f.Pow(c, l)));
        checked += a[l] != 0;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(SolverTest, RestrictedModeAgreesWithBruteForce) {
  std::mt19937_64 rng(31);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ConstrainedGraph g = RandomRestrictedGraph(rng, 5, 5, 2);
    if (g.node_count > kBruteForceMaxNodes) continue;
    const auto oracle = BruteForce(g, true);
    SolverConfig c = Config(trial + 1);
    c.restricted = true;
    const auto got = Solve(g, c);
    ASSERT_EQ(got.detection.feasible, oracle.has_value()) << "trial " << trial;
    if (oracle) {
      ++feasible;
      EXPECT_EQ(got.detection.length, oracle->length());
      ASSERT_TRUE(got.solution.has_value());
      EXPECT_EQ(CheckSolution(g, *got.solution, true), "");
    }
  }
  EXPECT_GT(feasible, 20);
}

TEST(SolverTest, RestrictedModeForbidsPassingThroughARunNode) {
  // Base nodes 0, 1; run nodes 2..5 of S_0 with central edges 3-4 and 2-5
  // (5 is a dead end). The only cycle enters run node 2 on one peripheral
  // edge and leaves on another.
  ConstrainedGraph g;
  g.node_count = 6;
  g.edges = {{3, 4}, {0, 2}, {1, 2}, {1, 3}, {4, 0}, {2, 5}};
  g.sets = {{0, 5}};
  const EdgeMark p{EdgeRole::kPeripheral, 0};
  g.marks = {{EdgeRole::kCentral, 0}, p, p, p, p, {EdgeRole::kCentral, 0}};
  const auto loose = BruteForce(g, false);
  ASSERT_TRUE(loose.has_value());
  EXPECT_EQ(loose->length(), 5);
  EXPECT_FALSE(BruteForce(g, true).has_value());
  SolverConfig c = Config(1);
  EXPECT_TRUE(Detect(g, c).feasible);
  c.restricted = true;
  EXPECT_FALSE(Detect(g, c).feasible);
}

TEST(SolverTest, RestrictedModeRejectsMixedCentralNode) {
  ConstrainedGraph g;
  g.node_count = 4;
  g.edges = {{0, 1}, {2, 0}, {0, 3}};
  g.sets = {{0}};
  g.marks = {{EdgeRole::kCentral, 0},
             {EdgeRole::kPeripheral, 0},
             {EdgeRole::kOrdinary, -1}};
  EXPECT_THROW(ValidateGraph(g, true), InvalidInput);
  EXPECT_NO_THROW(ValidateGraph(g, false));
}

TEST(SolverTest, RecoveryQueriesStayWithinBound) {
  std::mt19937_64 rng(404);
  double total_queries = 0;
  double total_bound = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ConstrainedGraph g = RandomGraph(rng, 10, 20, 3);
    const auto got = Solve(g, Config(trial + 7));
    if (!got.solution) continue;
    const int n = g.node_count;
    const int m = g.edge_count();
    total_queries += got.recovery.queries;
    total_bound +=
        4.0 * n * std::log2(std::max(2.0, 4.0 * m / n));
  }
  EXPECT_LT(total_queries, 4 * total_bound);
}

TEST(SolverTest, DetectIsSeedDeterministic) {
  std::mt19937_64 rng(8);
  const ConstrainedGraph g = RandomGraph(rng, 10, 20, 3);
  const auto a = Solve(g, Config(42));
  const auto b = Solve(g, Config(42));
  EXPECT_EQ(a.detection.feasible, b.detection.feasible);
  EXPECT_EQ(a.detection.length, b.detection.length);
  EXPECT_EQ(a.detection.start, b.detection.start);
  if (a.solution) EXPECT_EQ(a.solution->edges, b.solution->edges);
}

TEST(SolverTest, PeakTableMatchesBound) {
  ConstrainedGraph g;
  g.node_count = 6;
  for (int i = 0; i < 6; ++i) g.edges.push_back({i, (i + 1) % 6});
  g.sets = {{0}, {2}, {4}};
  const auto r = Detect(g, Config(1));
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.length, 6);
  EXPECT_EQ(r.peak_table_elements, (std::size_t{1} << 3) * 6);
}

}  // namespace
}  // namespace unpop
