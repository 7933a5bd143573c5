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

#include "unpop/walk_dp.h"

#include <algorithm>
#include <bit>

#include "unpop/errors.h"

namespace unpop {
namespace {

bool Alive(std::span<const std::uint8_t> alive, int e) {
  return alive.empty() || alive[e] != 0;
}

// In restricted mode a walk that just entered a central-side node through a
// peripheral edge must continue on a central edge of that node's set.
bool TransitionAllowed(const PreparedGraph& g, int from, int p,
                       const PreparedGraph::Arc& arc) {
  if (p == 0) return true;
  const int bit = g.central_bit[from];
  return g.central_edge[arc.edge] && bit >= 0 && ((arc.sets >> bit) & 1);
}

}  // namespace

PreparedGraph PreparedGraph::Build(const ConstrainedGraph& g, int anchor,
                                   bool restricted) {
  if (g.set_count() < 1) throw InvalidInput("at least one edge set required");
  if (g.set_count() > 31) throw InvalidInput("at most 31 edge sets supported");
  if (anchor < 0 || anchor >= g.set_count()) {
    throw InvalidInput("anchor set out of range");
  }
  PreparedGraph p;
  p.node_count = g.node_count;
  p.set_count = g.set_count();
  p.edge_count = g.edge_count();
  p.restricted = restricted && g.has_marks();
  p.set_order.push_back(anchor);
  for (int i = 0; i < g.set_count(); ++i) {
    if (i != anchor) p.set_order.push_back(i);
  }
  std::vector<int> bit_of(g.set_count());
  for (int b = 0; b < g.set_count(); ++b) bit_of[p.set_order[b]] = b;

  std::vector<std::uint32_t> sets(g.edges.size(), 0);
  for (int i = 0; i < g.set_count(); ++i) {
    for (int e : g.sets[i]) sets[e] |= std::uint32_t{1} << bit_of[i];
  }
  const auto toward = CentralSideEndpoints(g);
  p.central_bit.assign(g.node_count, -1);
  p.central_edge.assign(g.edges.size(), false);
  p.out.assign(g.node_count, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    const bool t_v = p.restricted && toward[e] == v;
    const bool t_u = p.restricted && toward[e] == u;
    p.out[u].push_back({v, e, sets[e], t_v});
    p.out[v].push_back({u, e, sets[e], t_u});
    if (p.restricted) {
      p.central_edge[e] = g.marks[e].role == EdgeRole::kCentral;
      if (toward[e] >= 0) p.central_bit[toward[e]] = bit_of[g.marks[e].set];
    }
  }
  return p;
}

WalkSumDp::WalkSumDp(const PreparedGraph& graph, const FieldSpec& field,
                     std::span<const FieldElement> weights, int start,
                     std::span<const std::uint8_t> alive)
    : graph_(graph),
      field_(field),
      weights_(weights),
      alive_(alive),
      start_(start),
      node_count_(graph.node_count),
      layers_(graph.restricted ? 2 : 1),
      mask_count_(std::size_t{1} << (graph.set_count - 1)) {
  const std::size_t size = mask_count_ * node_count_ * layers_;
  cur_.assign(size, 0);
  next_.assign(size, 0);
}

void WalkSumDp::Step() {
  std::fill(next_.begin(), next_.end(), 0);
  if (length_ == 0) {
    for (const auto& arc : graph_.out[start_]) {
      if ((arc.sets & 1) == 0 || !Alive(alive_, arc.edge)) continue;
      next_[Index(arc.sets >> 1, arc.to, arc.toward ? 1 : 0)] ^=
          weights_[arc.edge];
    }
  } else {
    for (int p = 0; p < layers_; ++p) {
      for (int u = 0; u < node_count_; ++u) {
        for (const auto& arc : graph_.out[u]) {
          // A second anchor-set edge can never be part of a counted walk.
          if ((arc.sets & 1) != 0 || !Alive(alive_, arc.edge)) continue;
          if (graph_.restricted && !TransitionAllowed(graph_, u, p, arc)) {
            continue;
          }
          const FieldElement w = weights_[arc.edge];
          const std::size_t need = arc.sets >> 1;
          const int p_to = arc.toward ? 1 : 0;
          // Enumerate every R' = R - I(e) with R a superset of I(e).
          for (std::size_t r = need; r < mask_count_; r = (r + 1) | need) {
            const FieldElement prev = cur_[Index(r ^ need, u, p)];
            if (prev != 0) {
              next_[Index(r, arc.to, p_to)] ^= field_.Mul(w, prev);
            }
          }
        }
      }
    }
  }
  cur_.swap(next_);
  ++length_;
}

FieldElement WalkSumDp::Value(std::uint32_t set_mask, int node, int p) const {
  if ((set_mask & 1) == 0 || p >= layers_) return 0;
  return cur_[Index(set_mask >> 1, node, p)];
}

FieldElement WalkSumDp::ClosedSum() const {
  FieldElement sum = 0;
  for (int p = 0; p < layers_; ++p) {
    sum ^= cur_[Index(mask_count_ - 1, start_, p)];
  }
  return sum;
}

std::vector<FieldElement> ClosedSums(const PreparedGraph& graph,
                                     const FieldSpec& field,
                                     std::span<const FieldElement> weights,
                                     int start, int max_length,
                                     std::span<const std::uint8_t> alive) {
  std::vector<FieldElement> sums(max_length + 1, 0);
  WalkSumDp dp(graph, field, weights, start, alive);
  for (int l = 1; l <= max_length; ++l) {
    dp.Step();
    sums[l] = dp.ClosedSum();
  }
  return sums;
}

std::vector<FieldElement> PolySpaceClosedSums(
    const PreparedGraph& graph, const FieldSpec& field,
    std::span<const FieldElement> weights, int start, int max_length,
    std::span<const std::uint8_t> alive, std::size_t* peak_elements) {
  const int k = graph.set_count;
  const int n = graph.node_count;
  const int layers = graph.restricted ? 2 : 1;
  const std::size_t width = static_cast<std::size_t>(k + 1) * n * layers;
  auto at = [&](int j, int v, int p) {
    return (static_cast<std::size_t>(p) * (k + 1) + j) * n + v;
  };
  std::vector<FieldElement> sums(max_length + 1, 0);
  std::vector<FieldElement> cur(width);
  std::vector<FieldElement> next(width);
  if (peak_elements != nullptr) *peak_elements = 2 * width;

  const std::uint32_t forbidden_count = std::uint32_t{1} << (k - 1);
  for (std::uint32_t f = 0; f < forbidden_count; ++f) {
    const std::uint32_t forbidden = f << 1;
    auto usable = [&](const PreparedGraph::Arc& arc) {
      return Alive(alive, arc.edge) && (arc.sets & forbidden) == 0;
    };
    std::fill(cur.begin(), cur.end(), 0);
    for (const auto& arc : graph.out[start]) {
      if ((arc.sets & 1) == 0 || !usable(arc)) continue;
      const int j = std::popcount(arc.sets);
      if (j <= k) cur[at(j, arc.to, arc.toward ? 1 : 0)] ^= weights[arc.edge];
    }
    if (max_length >= 1) {
      for (int p = 0; p < layers; ++p) sums[1] ^= cur[at(k, start, p)];
    }
    for (int l = 2; l <= max_length; ++l) {
      std::fill(next.begin(), next.end(), 0);
      for (int p = 0; p < layers; ++p) {
        for (int u = 0; u < n; ++u) {
          for (const auto& arc : graph.out[u]) {
            if (!usable(arc)) continue;
            if (graph.restricted && !TransitionAllowed(graph, u, p, arc)) {
              continue;
            }
            const int c = std::popcount(arc.sets);
            const int p_to = arc.toward ? 1 : 0;
            const FieldElement w = weights[arc.edge];
            for (int j = c; j <= k; ++j) {
              const FieldElement prev = cur[at(j - c, u, p)];
              if (prev != 0) next[at(j, arc.to, p_to)] ^= field.Mul(w, prev);
            }
          }
        }
      }
      cur.swap(next);
      for (int p = 0; p < layers; ++p) sums[l] ^= cur[at(k, start, p)];
    }
  }
  return sums;
}

}  // namespace unpop
