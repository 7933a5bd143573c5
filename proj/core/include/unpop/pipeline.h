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

#ifndef UNPOP_PIPELINE_H_
#define UNPOP_PIPELINE_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unpop/arrangement.h"
#include "unpop/dual.h"
#include "unpop/solver.h"

namespace unpop {

enum class RunStatus { kResolved, kInfeasible, kUnresolvableFace, kError };

const char* RunStatusName(RunStatus status);

struct ResolveOptions {
  DualVariant variant = DualVariant::kCompact;
  bool frame_endpoints = true;
  bool poly_space = false;
  int field_bits = 32;
  int repetitions = 3;
  std::uint64_t seed = 1;
};

struct RunResult {
  RunStatus status = RunStatus::kError;
  std::string message;
  std::optional<Curve> curve;  // set when resolved by inserting a curve
  int popular_before = 0;
  int popular_after = -1;  // -1 when not resolved
  int face = -1;           // offending face for infeasible/unresolvable
  std::uint64_t seed = 0;
  int field_bits = 0;
  int repetitions_used = 0;
  int dual_nodes = 0;
  int dual_edges = 0;
  int crossings = 0;  // length of the dual cycle
  std::vector<std::pair<std::string, double>> timings_ms;
};

// Popular faces, modified dual, solver, embedding and verification. Errors
// from the solver and embedding are reported in the result; retry
// exhaustion propagates as RetryExhausted.
RunResult Resolve(const Arrangement& arr, const ResolveOptions& options);

}  // namespace unpop

#endif  // UNPOP_PIPELINE_H_
