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

#ifndef UNPOP_CONSTRAINED_GRAPH_H_
#define UNPOP_CONSTRAINED_GRAPH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace unpop {

// Role of an edge in the compact dual variant.
enum class EdgeRole : std::uint8_t { kOrdinary, kCentral, kPeripheral };

struct EdgeMark {
  EdgeRole role = EdgeRole::kOrdinary;
  int set = -1;  // owning set index for central and peripheral edges
};

// What a node of a modified dual stands for. Graphs read from a file carry
// kPlain tags.
enum class NodeKind : std::uint8_t {
  kPlain,
  kFace,            // non-popular face; ref = face id
  kTerminal,        // crossing point on an arrangement edge; ref = edge id
  kSharedTerminal,  // terminal on an edge between two popular faces
  kRunTerminal,     // compact variant: one node per run; ref = face id
  kFrameIn,         // frame excursion start/end
  kFrameOut,
};

struct NodeTag {
  NodeKind kind = NodeKind::kPlain;
  int ref = -1;
};

struct GraphEdge {
  int u = 0;
  int v = 0;
};

// Undirected loop-free multigraph with edge-set constraints S_0..S_{k-1}.
// Set indices are 0-based throughout the code and in files.
struct ConstrainedGraph {
  int node_count = 0;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<int>> sets;
  std::vector<EdgeMark> marks;  // empty, or one per edge
  std::vector<NodeTag> tags;    // empty, or one per node

  int edge_count() const { return static_cast<int>(edges.size()); }
  int set_count() const { return static_cast<int>(sets.size()); }
  bool has_marks() const { return !marks.empty(); }
  EdgeMark mark(int e) const { return marks.empty() ? EdgeMark{} : marks[e]; }
  int Other(int e, int node) const {
    return edges[e].u == node ? edges[e].v : edges[e].u;
  }

  // Index sets I(e) = { i : e in S_i } as bit masks; requires k <= 64.
  std::vector<std::uint64_t> MembershipMasks() const;
};

// Throws InvalidInput on dangling ids, loops, duplicate members in a set,
// parallel edges inside one set, or inconsistent marks. With `restricted`
// the compact-variant structure is checked as well: every peripheral edge of
// S_i has exactly one endpoint on a central edge of S_i, and that endpoint
// carries only peripheral and central edges of S_i.
void ValidateGraph(const ConstrainedGraph& g, bool restricted);

// For restricted mode: the node of a peripheral edge that lies on a central
// edge of the same set, or -1 for other edges.
std::vector<int> CentralSideEndpoints(const ConstrainedGraph& g);

// A simple cycle meeting the edge-set constraints.
struct CycleSolution {
  std::vector<int> edges;   // in traversal order, starting at `start`
  std::vector<int> nodes;   // nodes[i] is the tail of edges[i]
  std::vector<int> chosen;  // chosen[i] = the edge of S_i on the cycle
  int start = -1;

  int length() const { return static_cast<int>(edges.size()); }
};

// Returns an empty string when `sol` is a valid solution for `g`, otherwise
// a description of the first violated invariant. With `restricted`, a
// peripheral edge entering its central-side endpoint must be followed by a
// central edge of the same set (cyclically).
std::string CheckSolution(const ConstrainedGraph& g, const CycleSolution& sol,
                          bool restricted);

// File format:
//   { "nodes": n, "edges": [[u,v],...], "sets": [[edge ids],...],
//     "marks": { "central": [edge ids], "peripheral": [[edge, set],...] } }
// "marks" is optional. Throws ParseError on malformed documents.
ConstrainedGraph GraphFromJson(const nlohmann::ordered_json& doc);
nlohmann::ordered_json GraphToJson(const ConstrainedGraph& g);

}  // namespace unpop

#endif  // UNPOP_CONSTRAINED_GRAPH_H_
