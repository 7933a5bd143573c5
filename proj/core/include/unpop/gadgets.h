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

#ifndef UNPOP_GADGETS_H_
#define UNPOP_GADGETS_H_

#include <optional>
#include <vector>

#include "unpop/arrangement_io.h"
#include "unpop/plane_graph.h"

namespace unpop {

inline constexpr int kEulerOracleMaxVertices = 10;

// Exhaustive search over transition systems. At every vertex the edge ends
// are paired without crossing in the rotation, and each pair must share a
// face. Returns the darts of one single closed trail through every edge, or
// nothing. Throws InvalidInput for odd degrees or a disconnected graph and
// TooLarge above kEulerOracleMaxVertices vertices.
std::optional<std::vector<EdgeEnd>> EulerOracle(const PlaneGraph& graph);

// Whether consecutive darts of `cycle` form a non-crossing Euler circuit of
// `graph` in the sense used by EulerOracle.
bool IsNonCrossingEulerCycle(const PlaneGraph& graph,
                             const std::vector<EdgeEnd>& cycle);

struct ReductionInstance {
  ArrangementInput arrangement;
  double scale = 0;
  // Curve ids realizing each graph edge, ordered from its u end to its v end.
  std::vector<std::vector<int>> edge_curves;
};

// Builds a closed-curve arrangement that one inserted closed curve can
// resolve exactly when the graph has a non-crossing Euler circuit.
//
// Every edge becomes a tube: a closed curve following the edge's drawing.
// At a vertex the four tube ends interlock like a pinwheel, each end poking
// into its counterclockwise neighbour, so the inside of a tube between its
// two vertices is the only popular face it creates. Parallel edges are
// split into two tubes and loops into three, linked end to end.
//
// The drawing must be rectilinear on the integer grid, with every segment
// at least one grid unit long and, on parallel edges and loops, one segment
// at least two units long. One grid unit is `scale` plane units and all
// coordinates are multiples of scale / 16.
//
// Throws InvalidInput if the graph is not connected and 4-regular or the
// drawing is not of that form, and EmbedError if the tubes meet anywhere
// except where the construction intends.
ReductionInstance GenReduction(const PlaneGraph& graph, double scale = 16);

// Reads the Euler circuit off a closed curve that resolves `inst`: the order
// in which the curve passes the tubes gives the edge order, and the tube end
// it enters first gives each direction. Empty if the curve does not pass
// every tube exactly once in edge-contiguous runs.
std::optional<std::vector<EdgeEnd>> ReadEulerCycle(
    const PlaneGraph& graph, const ReductionInstance& inst, const Curve& ell);

}  // namespace unpop

#endif  // UNPOP_GADGETS_H_
