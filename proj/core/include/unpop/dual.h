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

#ifndef UNPOP_DUAL_H_
#define UNPOP_DUAL_H_

#include <vector>

#include "unpop/arrangement.h"
#include "unpop/constrained_graph.h"

namespace unpop {

enum class DualVariant { kFull, kCompact };

struct DualOptions {
  DualVariant variant = DualVariant::kCompact;
  // Adds the frame excursion set so the inserted curve is open and ends on
  // the frame.
  bool frame_constraint = true;
};

// Modified dual graph plus the bookkeeping needed to turn a solution back
// into geometry. Per graph edge:
//   crossing[e]    arrangement edge crossed between two non-popular faces
//   frame_edge[e]  frame edge where a frame connection leaves or enters
//   inside[e]      face a passage, central or peripheral edge runs in
// each -1 when not applicable.
struct ModifiedDual {
  ConstrainedGraph graph;
  DualVariant variant = DualVariant::kCompact;
  bool frame_constraint = true;
  std::vector<int> set_faces;  // popular face per set; -1 for the frame set
  std::vector<int> crossing;
  std::vector<int> frame_edge;
  std::vector<int> inside;

  bool restricted() const { return variant == DualVariant::kCompact; }
};

// Throws Infeasible(face) when a report is unresolvable or a face admits no
// passage.
ModifiedDual BuildModifiedDual(const Arrangement& arr,
                               const std::vector<PopularFaceReport>& reports,
                               const DualOptions& options = {});

// Realizes a solution as a polyline that crosses exactly the encoded
// arrangement edges. Open with endpoints on the frame when the dual has the
// frame set, otherwise closed. Throws EmbedError if routing fails.
Curve DualCycleToCurve(const Arrangement& arr, const ModifiedDual& dual,
                       const CycleSolution& solution, int curve_id);

}  // namespace unpop

#endif  // UNPOP_DUAL_H_
