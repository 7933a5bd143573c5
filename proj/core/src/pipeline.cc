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

#include "unpop/pipeline.h"

#include <algorithm>
#include <chrono>

#include "unpop/errors.h"

namespace unpop {
namespace {

class Stopwatch {
 public:
  explicit Stopwatch(RunResult& out) : out_(out) {}

  void Lap(const char* stage) {
    const auto now = std::chrono::steady_clock::now();
    out_.timings_ms.emplace_back(
        stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  RunResult& out_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

const char* RunStatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kResolved: return "resolved";
    case RunStatus::kInfeasible: return "infeasible";
    case RunStatus::kUnresolvableFace: return "unresolvable_face";
    case RunStatus::kError: return "error";
  }
  return "error";
}

RunResult Resolve(const Arrangement& arr, const ResolveOptions& options) {
  RunResult out;
  out.seed = options.seed;
  out.field_bits = options.field_bits;
  Stopwatch clock(out);

  const auto reports = PopularFaces(arr);
  out.popular_before = static_cast<int>(reports.size());
  clock.Lap("analyze");
  if (reports.empty()) {
    out.status = RunStatus::kResolved;
    out.popular_after = 0;
    out.message = "no popular faces";
    return out;
  }
  for (const auto& r : reports) {
    if (!r.resolvable) {
      out.status = RunStatus::kUnresolvableFace;
      out.face = r.face;
      out.message = "a curve bounds face " + std::to_string(r.face) +
                    " with more than two edges";
      return out;
    }
  }

  ModifiedDual dual;
  try {
    dual = BuildModifiedDual(arr, reports,
                             {options.variant, options.frame_endpoints});
  } catch (const Infeasible& e) {
    out.status = RunStatus::kInfeasible;
    out.face = e.face();
    out.message = e.what();
    return out;
  }
  out.dual_nodes = dual.graph.node_count;
  out.dual_edges = dual.graph.edge_count();
  clock.Lap("dual");

  SolverConfig config;
  config.field_bits = options.field_bits;
  config.repetitions = options.repetitions;
  config.seed = options.seed;
  config.restricted = dual.restricted();
  config.variant = options.poly_space ? SolverVariant::kPolySpace
                                      : SolverVariant::kStandard;
  SolveResult solved;
  try {
    solved = Solve(dual.graph, config);
  } catch (const InvalidInput& e) {
    out.status = RunStatus::kError;
    out.message = e.what();
    return out;
  }
  out.repetitions_used = solved.detection.repetitions_used;
  clock.Lap("solve");
  if (!solved.solution) {
    out.status = RunStatus::kInfeasible;
    out.message = "no simple cycle meets every edge set";
    return out;
  }
  out.crossings = solved.solution->length();

  int next_id = 0;
  for (const auto& c : arr.curves()) next_id = std::max(next_id, c.id + 1);
  try {
    out.curve = DualCycleToCurve(arr, dual, *solved.solution, next_id);
  } catch (const EmbedError& e) {
    out.status = RunStatus::kError;
    out.message = e.what();
    return out;
  }
  clock.Lap("embed");

  bool resolved = false;
  try {
    resolved = VerifyResolved(arr, *out.curve);
  } catch (const Error& e) {
    out.message = std::string("inserted curve is not in general position: ") +
                  e.what();
  }
  clock.Lap("verify");
  if (!resolved) {
    out.status = RunStatus::kError;
    if (out.message.empty()) out.message = "inserted curve leaves popular faces";
    return out;
  }
  out.status = RunStatus::kResolved;
  out.popular_after = 0;
  return out;
}

}  // namespace unpop
