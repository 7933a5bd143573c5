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

#ifndef UNPOP_SOLVER_H_
#define UNPOP_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "unpop/constrained_graph.h"
#include "unpop/gf2.h"
#include "unpop/walk_dp.h"

namespace unpop {

enum class SolverVariant { kStandard, kPolySpace };

struct SolverConfig {
  static constexpr int kMaxSets = 24;

  int field_bits = 32;
  int repetitions = 3;  // W
  SolverVariant variant = SolverVariant::kStandard;
  bool restricted = false;  // peripheral-bit mode for compact duals
  int max_length = 0;       // 0 means node count
  std::uint64_t seed = 1;
  int retry_budget = 32;
  // Give weight 1 to edges that form a singleton set.
  bool unit_weight_forced = false;
};

struct DetectResult {
  bool feasible = false;
  int length = 0;
  int start = -1;
  int repetitions_used = 0;
  std::size_t peak_table_elements = 0;
};

struct RecoverStats {
  int queries = 0;
  int rerandomizations = 0;
};

struct SolveResult {
  DetectResult detection;
  std::optional<CycleSolution> solution;
  RecoverStats recovery;
};

// Shared state of one solver run: the field, the random stream and the
// prepared graph. Detection and recovery draw fresh weights from `rng`.
class CycleSolver {
 public:
  CycleSolver(const ConstrainedGraph& graph, const SolverConfig& config);
  CycleSolver(const ConstrainedGraph& graph, const SolverConfig& config,
              FieldSpec field);

  const FieldSpec& field() const { return field_; }
  const PreparedGraph& prepared() const { return prepared_; }
  // Start vertices: a greedy vertex cover of the anchor set.
  const std::vector<int>& starts() const { return starts_; }
  // Caller's index of the set every walk starts in.
  int anchor_set() const { return prepared_.set_order[0]; }

  // Smallest nonzero length over the start cover, retrying with fresh
  // weights up to W times.
  DetectResult Detect();

  // Rebuilds the cycle found by Detect edge by edge.
  CycleSolution Recover(int length, int start, RecoverStats* stats = nullptr);

  // Detect, then Recover when feasible.
  SolveResult Solve();

  // One weight draw; exposed for tests of the algebraic invariants.
  std::vector<FieldElement> DrawWeights();

  // Smallest l in [1, cap] with T^_b(l) != 0 under `weights`, or 0.
  int FirstNonzero(std::span<const FieldElement> weights, int start, int cap,
                   std::span<const std::uint8_t> alive = {},
                   std::size_t* peak = nullptr) const;

 private:
  ConstrainedGraph graph_;
  SolverConfig config_;
  FieldSpec field_;
  Rng rng_;
  PreparedGraph prepared_;
  std::vector<int> starts_;
  std::vector<bool> forced_;
  bool trivially_infeasible_ = false;
};

// Convenience wrappers matching the command-line operations.
DetectResult Detect(const ConstrainedGraph& g, const SolverConfig& config);
DetectResult SolvePolySpace(const ConstrainedGraph& g, SolverConfig config);
SolveResult Solve(const ConstrainedGraph& g, const SolverConfig& config);

// Greedy vertex cover of the given edges: repeatedly take the endpoint of
// largest remaining degree (ties to the smaller node id).
std::vector<int> GreedyVertexCover(const ConstrainedGraph& g,
                                   const std::vector<int>& edges);

// Exhaustive backtracking oracle: a minimum-length cycle meeting all set
// constraints (and the peripheral rule with `restricted`), or nullopt.
// Throws TooLarge for more than kBruteForceMaxNodes nodes.
inline constexpr int kBruteForceMaxNodes = 16;
std::optional<CycleSolution> BruteForce(const ConstrainedGraph& g,
                                        bool restricted);

}  // namespace unpop

#endif  // UNPOP_SOLVER_H_
