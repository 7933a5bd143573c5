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

#ifndef UNPOP_WALK_DP_H_
#define UNPOP_WALK_DP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "unpop/constrained_graph.h"
#include "unpop/gf2.h"

namespace unpop {

// Adjacency view of a ConstrainedGraph used by the dynamic programs. Sets
// are indexed so that the anchor set (the one whose edges start every walk)
// is bit 0; `set_order[bit]` maps back to the caller's set index.
struct PreparedGraph {
  struct Arc {
    int to;
    int edge;
    std::uint32_t sets;  // I(e) in anchor-first bit order
    bool toward;         // peripheral edge entering its central-side node
  };

  int node_count = 0;
  int set_count = 0;
  int edge_count = 0;
  bool restricted = false;
  std::vector<int> set_order;
  std::vector<std::vector<Arc>> out;  // out[u]: arcs leaving u
  // Restricted mode: for a node on the central side of peripheral edges,
  // the bit of that set; otherwise -1.
  std::vector<int> central_bit;
  std::vector<bool> central_edge;  // role == kCentral, per edge

  // `anchor` is the caller's set index that becomes bit 0.
  static PreparedGraph Build(const ConstrainedGraph& g, int anchor,
                             bool restricted);
};

// Layered evaluation of T_b(R, l, v[, p]): the weighted sum of walks from b
// of length l ending at v whose first edge lies in the anchor set and which
// use each set in R exactly once and no other set. Only two layers are kept.
//
// `alive` (optional, one flag per edge) removes edges from the graph.
class WalkSumDp {
 public:
  WalkSumDp(const PreparedGraph& graph, const FieldSpec& field,
            std::span<const FieldElement> weights, int start,
            std::span<const std::uint8_t> alive = {});

  int length() const { return length_; }
  // Advances to the next length; the first call produces layer 1.
  void Step();

  // R is a mask in anchor-first bit order and must contain bit 0.
  FieldElement Value(std::uint32_t set_mask, int node, int p = 0) const;
  // T^_b(l): every set used, walk closed at b.
  FieldElement ClosedSum() const;

  std::size_t mask_count() const { return mask_count_; }
  // Field elements held by the two live layers.
  std::size_t TableElements() const { return cur_.size() + next_.size(); }

 private:
  std::size_t Index(std::size_t r, int node, int p) const {
    return (static_cast<std::size_t>(p) * mask_count_ + r) * node_count_ +
           node;
  }

  const PreparedGraph& graph_;
  const FieldSpec& field_;
  std::span<const FieldElement> weights_;
  std::span<const std::uint8_t> alive_;
  int start_;
  int node_count_;
  int layers_;  // 2 in restricted mode (p bit), else 1
  std::size_t mask_count_;
  int length_ = 0;
  std::vector<FieldElement> cur_;
  std::vector<FieldElement> next_;
};

// Polynomial-space evaluation of T^_b(1..max_length) by inclusion-exclusion
// over forbidden sets F of non-anchor sets: for each F the walks avoiding
// those sets are counted by the total number j of set memberships they use,
// and the j = k terms are summed (characteristic 2 makes the signs vanish).
// Returns sums[l] for l = 0..max_length (sums[0] = 0).
std::vector<FieldElement> PolySpaceClosedSums(
    const PreparedGraph& graph, const FieldSpec& field,
    std::span<const FieldElement> weights, int start, int max_length,
    std::span<const std::uint8_t> alive = {},
    std::size_t* peak_elements = nullptr);

// Same quantity via the subset DP, for all lengths up to max_length.
std::vector<FieldElement> ClosedSums(const PreparedGraph& graph,
                                     const FieldSpec& field,
                                     std::span<const FieldElement> weights,
                                     int start, int max_length,
                                     std::span<const std::uint8_t> alive = {});

}  // namespace unpop

#endif  // UNPOP_WALK_DP_H_
