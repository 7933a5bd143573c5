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

#include "unpop/gadgets.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.h"
#include "unpop/errors.h"
#include "unpop/pipeline.h"

namespace unpop {
namespace {

using testing::LoadFixture;

const std::vector<std::string> kGraphs = {
    "banana",           "loops_apart",         "loops_nested",
    "looped_pair",      "triangle_doubled",    "k4_doubled_matching",
    "octahedron"};

PlaneGraph LoadGraph(const std::string& name) {
  return PlaneGraphFromJson(LoadFixture("graphs/" + name + ".json"));
}

// Independent search: every Euler circuit from dart {0, 0}, filtered by the
// verifier.
bool BruteForceHasCycle(const PlaneGraph& g) {
  const int m = static_cast<int>(g.edges().size());
  std::vector<char> used(m, 0);
  std::vector<EdgeEnd> path;
  std::function<bool(int)> extend = [&](int at) {
    if (static_cast<int>(path.size()) == m) {
      return IsNonCrossingEulerCycle(g, path);
    }
    for (int e = 0; e < m; ++e) {
      if (used[e]) continue;
      for (int s = 0; s < 2; ++s) {
        const EdgeEnd d{e, s};
        if (g.VertexOf(d) != at) continue;
        used[e] = 1;
        path.push_back(d);
        if (extend(g.VertexOf(d.Opposite()))) return true;
        path.pop_back();
        used[e] = 0;
        if (g.edges()[e].u == g.edges()[e].v) break;  // both sides equivalent
      }
    }
    return false;
  };
  const EdgeEnd first{0, 0};
  used[0] = 1;
  path.push_back(first);
  return extend(g.VertexOf(first.Opposite()));
}

// Random connected plane multigraph with even degrees and no loops, as a
// rotation system of genus zero.
std::optional<PlaneGraph> RandomPlaneGraph(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int n = pick(2, 4);
  std::vector<PlaneEdge> edges;
  // A closed walk keeps every degree even and the graph connected once it
  // has visited every vertex.
  std::vector<int> walk{0};
  for (int v = 1; v < n; ++v) walk.push_back(v);
  const int extra = pick(0, 7);
  for (int i = 0; i < extra; ++i) {
    int next = pick(0, n - 2);
    if (next >= walk.back()) ++next;
    walk.push_back(next);
  }
  if (walk.back() == 0) walk.pop_back();
  for (std::size_t i = 0; i < walk.size(); ++i) {
    edges.push_back({walk[i], walk[(i + 1) % walk.size()], {}});
  }
  std::vector<PlaneVertex> vertices(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    vertices[edges[e].u].rotation.push_back({e, 0});
    vertices[edges[e].v].rotation.push_back({e, 1});
  }
  for (auto& v : vertices) std::shuffle(v.rotation.begin(), v.rotation.end(), rng);
  PlaneGraph g(std::move(vertices), std::move(edges), false);
  if (!g.EmbeddingConsistent()) return std::nullopt;
  return g;
}

TEST(PlaneGraphTest, DerivesRotationAndFacesFromDrawing) {
  const PlaneGraph g = LoadGraph("banana");
  ASSERT_EQ(g.vertices().size(), 2u);
  EXPECT_EQ(g.Degree(0), 4);
  EXPECT_TRUE(g.EmbeddingConsistent());
  EXPECT_EQ(g.Faces().size(), 4u);
  // Around vertex 0 counterclockwise from east: the straight edge, the one
  // leaving north, the west detour and the one leaving south.
  const std::vector<EdgeEnd> expect{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  auto rot = g.vertices()[0].rotation;
  std::rotate(rot.begin(), std::find(rot.begin(), rot.end(), expect[0]),
              rot.end());
  EXPECT_EQ(rot, expect);
}

TEST(PlaneGraphTest, JsonRoundTrip) {
  for (const auto& name : kGraphs) {
    const PlaneGraph g = LoadGraph(name);
    const auto doc = PlaneGraphToJson(g);
    EXPECT_EQ(PlaneGraphToJson(PlaneGraphFromJson(doc)), doc) << name;
  }
}

TEST(PlaneGraphTest, RejectsBadInput) {
  using Json = nlohmann::ordered_json;
  EXPECT_THROW(PlaneGraphFromJson(Json::parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(PlaneGraphFromJson(Json::parse(
                   R"({"vertices": [{"x": 0, "y": 0}], "edges": [{"u": 0, "v": 3}]})")),
               InvalidInput);
  // Rotation listed clockwise.
  EXPECT_THROW(PlaneGraphFromJson(Json::parse(R"({
      "vertices": [{"x": 0, "y": 0, "rotation": [0, 2, 1]},
                   {"x": 1, "y": 0}, {"x": 0, "y": 1}, {"x": -1, "y": 0}],
      "edges": [{"u": 0, "v": 1}, {"u": 0, "v": 2}, {"u": 0, "v": 3}]})")),
               InvalidInput);
}

TEST(EulerOracleTest, FixturesHaveVerifiedCycles) {
  for (const auto& name : kGraphs) {
    const PlaneGraph g = LoadGraph(name);
    const auto cycle = EulerOracle(g);
    ASSERT_TRUE(cycle.has_value()) << name;
    EXPECT_TRUE(IsNonCrossingEulerCycle(g, *cycle)) << name;
  }
}

TEST(EulerOracleTest, AgreesWithBruteForceOnRandomPlaneGraphs) {
  std::mt19937_64 rng(11);
  int tried = 0;
  int negatives = 0;
  while (tried < 300) {
    const auto g = RandomPlaneGraph(rng);
    if (!g) continue;
    ++tried;
    const auto cycle = EulerOracle(*g);
    EXPECT_EQ(cycle.has_value(), BruteForceHasCycle(*g)) << "graph " << tried;
    if (cycle) {
      EXPECT_TRUE(IsNonCrossingEulerCycle(*g, *cycle));
    } else {
      ++negatives;
    }
  }
  RecordProperty("negatives", negatives);
}

TEST(EulerOracleTest, VerifierRejectsBadCycles) {
  // Two vertices joined by four parallel edges; faces are the four digons
  // between rotation neighbours.
  std::vector<PlaneVertex> vertices(2);
  vertices[0].rotation = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  vertices[1].rotation = {{3, 1}, {2, 1}, {1, 1}, {0, 1}};
  std::vector<PlaneEdge> edges(4, PlaneEdge{0, 1, {}});
  const PlaneGraph g(vertices, edges, false);
  ASSERT_TRUE(g.EmbeddingConsistent());
  EXPECT_TRUE(IsNonCrossingEulerCycle(g, {{0, 0}, {1, 1}, {2, 0}, {3, 1}}));
  // Transitions 0 -> 2 do not share a face.
  EXPECT_FALSE(IsNonCrossingEulerCycle(g, {{0, 0}, {2, 1}, {1, 0}, {3, 1}}));
  // Not a trail: the second dart leaves the wrong vertex.
  EXPECT_FALSE(IsNonCrossingEulerCycle(g, {{0, 0}, {1, 0}, {2, 1}, {3, 1}}));
  // Repeats an edge.
  EXPECT_FALSE(IsNonCrossingEulerCycle(g, {{0, 0}, {0, 1}, {2, 0}, {3, 1}}));
  EXPECT_FALSE(IsNonCrossingEulerCycle(g, {{0, 0}, {1, 1}}));
}

TEST(EulerOracleTest, RejectsOutOfContractGraphs) {
  std::vector<PlaneVertex> path(3);
  path[0].rotation = {{0, 0}};
  path[1].rotation = {{0, 1}, {1, 0}};
  path[2].rotation = {{1, 1}};
  EXPECT_THROW(EulerOracle(PlaneGraph(path, {{0, 1, {}}, {1, 2, {}}}, false)),
               InvalidInput);
  EXPECT_THROW(EulerOracle(PlaneGraph(std::vector<PlaneVertex>(2), {}, false)),
               InvalidInput);
  std::vector<PlaneVertex> split(4);
  split[0].rotation = {{0, 0}, {1, 1}};
  split[1].rotation = {{0, 1}, {1, 0}};
  split[2].rotation = {{2, 0}, {3, 1}};
  split[3].rotation = {{2, 1}, {3, 0}};
  EXPECT_THROW(
      EulerOracle(PlaneGraph(
          split, {{0, 1, {}}, {1, 0, {}}, {2, 3, {}}, {3, 2, {}}}, false)),
      InvalidInput);
  // A cycle on eleven vertices.
  std::vector<PlaneVertex> ring(11);
  std::vector<PlaneEdge> ring_edges;
  for (int i = 0; i < 11; ++i) {
    ring_edges.push_back({i, (i + 1) % 11, {}});
    ring[i].rotation = {{i, 0}, {(i + 10) % 11, 1}};
  }
  EXPECT_THROW(EulerOracle(PlaneGraph(ring, ring_edges, false)), TooLarge);
}

int ExpectedTubes(const PlaneGraph& g, int e) {
  const auto& edge = g.edges()[e];
  if (edge.u == edge.v) return 3;
  for (int f = 0; f < static_cast<int>(g.edges().size()); ++f) {
    const auto& other = g.edges()[f];
    if (f != e && std::minmax(other.u, other.v) == std::minmax(edge.u, edge.v)) {
      return 2;
    }
  }
  return 1;
}

TEST(GenReductionTest, EveryTubeIsOnePopularCorridor) {
  for (const auto& name : kGraphs) {
    const PlaneGraph g = LoadGraph(name);
    const auto inst = GenReduction(g);
    int tubes = 0;
    std::set<int> ids;
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
      EXPECT_EQ(static_cast<int>(inst.edge_curves[e].size()), ExpectedTubes(g, e))
          << name << " edge " << e;
      tubes += static_cast<int>(inst.edge_curves[e].size());
      ids.insert(inst.edge_curves[e].begin(), inst.edge_curves[e].end());
    }
    ASSERT_EQ(static_cast<int>(inst.arrangement.curves.size()), tubes) << name;
    EXPECT_EQ(static_cast<int>(ids.size()), tubes) << name;
    for (const auto& c : inst.arrangement.curves) {
      EXPECT_EQ(c.kind, CurveKind::kClosed);
    }
    const auto arr =
        Arrangement::Build(inst.arrangement.curves, inst.arrangement.frame);
    const auto popular = PopularFaces(arr);
    EXPECT_EQ(static_cast<int>(popular.size()), tubes) << name;
    std::set<int> curtain_curves;
    for (const auto& r : popular) {
      EXPECT_TRUE(r.resolvable) << name;
      ASSERT_EQ(r.curtains.size(), 1u) << name << " face " << r.face;
      curtain_curves.insert(arr.CurveId(r.curtains[0].first));
    }
    EXPECT_EQ(curtain_curves, ids) << name;
  }
}

TEST(GenReductionTest, RejectsDrawingsOutsideTheConstruction) {
  using Json = nlohmann::ordered_json;
  // Degree two.
  EXPECT_THROW(GenReduction(PlaneGraphFromJson(Json::parse(R"({
      "vertices": [{"x": 0, "y": 0}, {"x": 2, "y": 0}],
      "edges": [{"u": 0, "v": 1, "via": [[0, 1], [2, 1]]},
                {"u": 0, "v": 1, "via": [[0, -1], [2, -1]]}]})"))),
               InvalidInput);
  // Diagonal segment.
  auto doc = LoadFixture("graphs/banana.json");
  doc["edges"][1]["via"] = Json::parse("[[0.5, 1], [3, 1]]");
  EXPECT_THROW(GenReduction(PlaneGraphFromJson(doc)), InvalidInput);
  // Off-grid vertex.
  doc = LoadFixture("graphs/banana.json");
  doc["vertices"][1]["x"] = 3.5;
  doc["edges"][1]["via"][1][0] = 3.5;
  doc["edges"][3]["via"][1][0] = 3.5;
  EXPECT_THROW(GenReduction(PlaneGraphFromJson(doc)), InvalidInput);
}

class ReductionPipelineTest : public ::testing::TestWithParam<std::string> {};

TEST_P(ReductionPipelineTest, ResolvesExactlyWhenOracleSaysYes) {
  const PlaneGraph g = LoadGraph(GetParam());
  const auto inst = GenReduction(g);
  const auto arr =
      Arrangement::Build(inst.arrangement.curves, inst.arrangement.frame);
  ResolveOptions options;
  options.frame_endpoints = false;
  options.seed = 5;
  const RunResult r = Resolve(arr, options);
  const bool oracle = EulerOracle(g).has_value();
  EXPECT_EQ(r.status == RunStatus::kResolved, oracle) << r.message;
  if (r.status != RunStatus::kResolved) return;
  EXPECT_EQ(r.popular_after, 0);
  ASSERT_TRUE(r.curve.has_value());
  const auto cycle = ReadEulerCycle(g, inst, *r.curve);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_TRUE(IsNonCrossingEulerCycle(g, *cycle));
}

INSTANTIATE_TEST_SUITE_P(Graphs, ReductionPipelineTest,
                         ::testing::ValuesIn(kGraphs),
                         [](const auto& info) { return info.param; });

TEST(ReductionPipelineTest, SeparateGadgetsCannotShareOneCurve) {
  // Two disjoint copies: the inserted curve would have to leave one gadget
  // through a corridor wall, which makes that wall popular again.
  const auto inst = GenReduction(LoadGraph("loops_apart"));
  const Frame f = inst.arrangement.frame;
  const double shift = f.xmax - f.xmin;
  std::vector<Curve> curves = inst.arrangement.curves;
  const int count = static_cast<int>(curves.size());
  for (int i = 0; i < count; ++i) {
    Curve c = inst.arrangement.curves[i];
    c.id += 100;
    for (auto& p : c.points) p.x += shift;
    curves.push_back(std::move(c));
  }
  const auto arr = Arrangement::Build(curves, {f.xmin, f.ymin, f.xmax + shift, f.ymax});
  ResolveOptions options;
  options.frame_endpoints = false;
  options.seed = 5;
  EXPECT_EQ(Resolve(arr, options).status, RunStatus::kInfeasible);
}

}  // namespace
}  // namespace unpop
