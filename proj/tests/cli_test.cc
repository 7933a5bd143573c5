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

// Runs the unpop binary end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "test_support.h"

namespace {

using Json = nlohmann::ordered_json;
using unpop::testing::FixturePath;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(UNPOP_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("unpop_cli_test_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

std::string Arrangement(const std::string& name) {
  return FixturePath("arrangements/" + name + ".json");
}

TEST(CliTest, AnalyzeReportsPopularFaces) {
  const CliRun r = Cli("analyze " + Arrangement("bump") + " --svg " + Temp("a.svg"));
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["popular_count"], 2);
  EXPECT_TRUE(std::filesystem::exists(Temp("a.svg")));
}

TEST(CliTest, MalformedInputExitsWithTwo) {
  const std::string path = Temp("bad.json");
  std::ofstream(path) << "{\"frame\": ";
  EXPECT_EQ(Cli("analyze " + path).code, 2);
  EXPECT_EQ(Cli("analyze " + Temp("missing.json")).code, 2);
  EXPECT_EQ(Cli("resolve " + Arrangement("bump") + " --variant sideways").code, 2);
  EXPECT_EQ(Cli("").code, 2);
}

TEST(CliTest, EmptyCurveListHasNoPopularFaces) {
  const std::string path = Temp("empty.json");
  std::ofstream(path)
      << R"({"frame": {"xmin": 0, "ymin": 0, "xmax": 1, "ymax": 1}, "curves": []})";
  const CliRun r = Cli("analyze " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["popular_count"], 0);
}

TEST(CliTest, ResolveWritesAugmentedArrangement) {
  const std::string out = Temp("aug.json");
  const CliRun r = Cli("resolve " + Arrangement("bump") + " --seed 4 --out " + out +
                    " --svg " + Temp("r.svg"));
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["status"], "resolved");
  EXPECT_EQ(doc["popular_after"], 0);
  EXPECT_EQ(doc["seed"], 4);
  EXPECT_FALSE(doc.contains("timings_ms"));
  // The augmented file has no popular faces left.
  const CliRun again = Cli("analyze " + out);
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(Json::parse(again.out)["popular_count"], 0);
}

TEST(CliTest, ResolveNegativeOutcomesExitWithOne) {
  const CliRun u = Cli("resolve " + Arrangement("unresolvable_double_bump") + " --seed 1");
  EXPECT_EQ(u.code, 1);
  EXPECT_EQ(Json::parse(u.out)["status"], "unresolvable_face");
  const CliRun i = Cli("resolve " + Arrangement("snake_infeasible") + " --seed 1");
  EXPECT_EQ(i.code, 1);
  EXPECT_EQ(Json::parse(i.out)["status"], "infeasible");
}

TEST(CliTest, OutputIsDeterministicUnderSeed) {
  for (const std::string args :
       {"resolve " + Arrangement("mixed_curves") + " --seed 99",
        "resolve " + Arrangement("mixed_curves") + " --seed 99 --variant full --poly-space",
        "solve-cycle " + FixturePath("solver/k4.json") + " --seed 5"}) {
    const CliRun a = Cli(args);
    const CliRun b = Cli(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(CliTest, SeedIsEchoedWhenDrawn) {
  const CliRun r = Cli("solve-cycle " + FixturePath("solver/c4.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["seed"].is_number_unsigned());
}

TEST(CliTest, SolveCycleFixtures) {
  CliRun r = Cli("solve-cycle " + FixturePath("solver/c4.json") + " --seed 3");
  ASSERT_EQ(r.code, 0);
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["length"], 4);
  EXPECT_EQ(doc["chosen"]["0"], 0);
  EXPECT_EQ(doc["cycle"].size(), 4u);

  r = Cli("solve-cycle " + FixturePath("solver/k4.json") + " --seed 3");
  ASSERT_EQ(r.code, 0);
  doc = Json::parse(r.out);
  EXPECT_EQ(doc["length"], 4);
  EXPECT_EQ(doc["chosen"]["0"], 0);
  EXPECT_EQ(doc["chosen"]["1"], 5);

  r = Cli("solve-cycle " + FixturePath("solver/bowtie.json") + " --seed 3");
  EXPECT_EQ(r.code, 1);
  doc = Json::parse(r.out);
  EXPECT_EQ(doc["feasible"], false);
  EXPECT_EQ(doc["repetitions_used"], 3);
}

TEST(CliTest, GenEulerProducesResolvableArrangement) {
  const std::string arr = Temp("gen.json");
  const CliRun g = Cli("gen-euler " + FixturePath("graphs/banana.json") + " --out " +
                    arr + " --svg " + Temp("gen.svg"));
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(Json::parse(g.out)["curves"], 8);
  const CliRun r = Cli("resolve " + arr + " --seed 2 --no-frame-endpoints");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["status"], "resolved");
  EXPECT_EQ(Json::parse(r.out)["curve"]["kind"], "closed");
  // Out of contract graph.
  const std::string bad = Temp("tri.json");
  std::ofstream(bad) << R"({"vertices": [{"x": 0, "y": 0}, {"x": 2, "y": 0}],
      "edges": [{"u": 0, "v": 1, "via": [[0, 1], [2, 1]]},
                {"u": 0, "v": 1, "via": [[0, -1], [2, -1]]}]})";
  EXPECT_EQ(Cli("gen-euler " + bad).code, 2);
}

}  // namespace
