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

#include <string>

#include "unpop/errors.h"
#include "unpop/solver.h"

namespace unpop {
namespace {

struct Search {
  const ConstrainedGraph& g;
  bool restricted;
  std::vector<std::uint64_t> masks;
  std::uint64_t all = 0;
  std::vector<std::vector<int>> incident;
  std::vector<bool> on_path;
  std::vector<int> nodes;
  std::vector<int> edges;
  int start = 0;
  std::optional<CycleSolution> best;

  int best_length() const {
    return best ? best->length() : g.node_count + 1;
  }

  CycleSolution Current() const {
    CycleSolution sol;
    sol.start = start;
    sol.nodes = nodes;
    sol.edges = edges;
    sol.chosen.assign(g.set_count(), -1);
    for (int e : edges) {
      for (int i = 0; i < g.set_count(); ++i) {
        if ((masks[e] >> i) & 1) sol.chosen[i] = e;
      }
    }
    return sol;
  }

  void Extend(int u, std::uint64_t used) {
    for (int e : incident[u]) {
      if (!edges.empty() && e == edges.back()) continue;
      if ((masks[e] & used) != 0) continue;
      const int v = g.Other(e, u);
      const int len = static_cast<int>(edges.size()) + 1;
      if (len >= best_length()) continue;
      if (v == start) {
        if (len < 2 || (used | masks[e]) != all) continue;
        edges.push_back(e);
        CycleSolution sol = Current();
        edges.pop_back();
        if (CheckSolution(g, sol, restricted).empty()) best = std::move(sol);
        continue;
      }
      if (v < start || on_path[v]) continue;
      on_path[v] = true;
      nodes.push_back(v);
      edges.push_back(e);
      Extend(v, used | masks[e]);
      edges.pop_back();
      nodes.pop_back();
      on_path[v] = false;
    }
  }
};

}  // namespace

std::optional<CycleSolution> BruteForce(const ConstrainedGraph& g,
                                        bool restricted) {
  if (g.node_count > kBruteForceMaxNodes) {
    throw TooLarge("brute force is limited to " +
                   std::to_string(kBruteForceMaxNodes) + " nodes");
  }
  ValidateGraph(g, restricted);
  for (const auto& s : g.sets) {
    if (s.empty()) return std::nullopt;
  }
  Search search{g, restricted, g.MembershipMasks(), 0, {}, {}, {}, {}, 0, {}};
  search.all = g.set_count() >= 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << g.set_count()) - 1;
  search.incident.assign(g.node_count, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    search.incident[g.edges[e].u].push_back(e);
    search.incident[g.edges[e].v].push_back(e);
  }
  search.on_path.assign(g.node_count, false);
  for (int s = 0; s < g.node_count; ++s) {
    search.start = s;
    search.nodes = {s};
    search.on_path[s] = true;
    search.Extend(s, 0);
    search.on_path[s] = false;
  }
  return search.best;
}

}  // namespace unpop
