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

#include "unpop/solver.h"

#include <algorithm>
#include <set>
#include <string>

#include "unpop/errors.h"

namespace unpop {

std::vector<int> GreedyVertexCover(const ConstrainedGraph& g,
                                   const std::vector<int>& edges) {
  std::vector<int> cover;
  std::vector<bool> covered(edges.size(), false);
  std::size_t remaining = edges.size();
  while (remaining > 0) {
    std::vector<int> degree(g.node_count, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (covered[i]) continue;
      ++degree[g.edges[edges[i]].u];
      ++degree[g.edges[edges[i]].v];
    }
    const int best = static_cast<int>(
        std::max_element(degree.begin(), degree.end()) - degree.begin());
    cover.push_back(best);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (covered[i]) continue;
      if (g.edges[edges[i]].u == best || g.edges[edges[i]].v == best) {
        covered[i] = true;
        --remaining;
      }
    }
  }
  return cover;
}

CycleSolver::CycleSolver(const ConstrainedGraph& graph,
                         const SolverConfig& config)
    : CycleSolver(graph, config,
                  FieldSpec::Random(config.field_bits, config.seed)) {}

CycleSolver::CycleSolver(const ConstrainedGraph& graph,
                         const SolverConfig& config, FieldSpec field)
    : graph_(graph), config_(config), field_(std::move(field)),
      rng_(config.seed) {
  if (config_.repetitions < 1) throw InvalidInput("repetitions must be >= 1");
  if (graph_.set_count() < 1) throw InvalidInput("no edge sets given");
  if (graph_.set_count() > SolverConfig::kMaxSets) {
    throw InvalidInput("at most " + std::to_string(SolverConfig::kMaxSets) +
                       " edge sets are supported");
  }
  ValidateGraph(graph_, config_.restricted);

  // Anchor walks in the set with the smallest start cover.
  int anchor = 0;
  std::vector<int> best_cover;
  for (int i = 0; i < graph_.set_count(); ++i) {
    if (graph_.sets[i].empty()) {
      trivially_infeasible_ = true;
      continue;
    }
    auto cover = GreedyVertexCover(graph_, graph_.sets[i]);
    if (best_cover.empty() || cover.size() < best_cover.size()) {
      best_cover = std::move(cover);
      anchor = i;
    }
  }
  prepared_ = PreparedGraph::Build(graph_, anchor, config_.restricted);
  starts_ = std::move(best_cover);

  forced_.assign(graph_.edges.size(), false);
  if (config_.unit_weight_forced) {
    for (const auto& s : graph_.sets) {
      if (s.size() == 1) forced_[s[0]] = true;
    }
  }
}

std::vector<FieldElement> CycleSolver::DrawWeights() {
  std::vector<FieldElement> w(graph_.edges.size());
  for (std::size_t e = 0; e < w.size(); ++e) {
    w[e] = forced_[e] ? 1 : field_.RandomNonzero(rng_);
  }
  return w;
}

int CycleSolver::FirstNonzero(std::span<const FieldElement> weights, int start,
                              int cap, std::span<const std::uint8_t> alive,
                              std::size_t* peak) const {
  if (config_.variant == SolverVariant::kPolySpace) {
    const auto sums =
        PolySpaceClosedSums(prepared_, field_, weights, start, cap, alive, peak);
    for (int l = 1; l <= cap; ++l) {
      if (sums[l] != 0) return l;
    }
    return 0;
  }
  WalkSumDp dp(prepared_, field_, weights, start, alive);
  if (peak != nullptr) *peak = dp.TableElements();
  for (int l = 1; l <= cap; ++l) {
    dp.Step();
    if (dp.ClosedSum() != 0) return l;
  }
  return 0;
}

DetectResult CycleSolver::Detect() {
  DetectResult result;
  if (trivially_infeasible_) return result;
  const int n = graph_.node_count;
  const int max_len =
      config_.max_length > 0 ? std::min(config_.max_length, n) : n;
  for (int rep = 0; rep < config_.repetitions; ++rep) {
    result.repetitions_used = rep + 1;
    const auto weights = DrawWeights();
    int best = 0;
    int best_start = -1;
    for (int b : starts_) {
      const int cap = best > 0 ? best - 1 : max_len;
      if (cap < 1) break;
      std::size_t peak = 0;
      const int l = FirstNonzero(weights, b, cap, {}, &peak);
      result.peak_table_elements = std::max(result.peak_table_elements, peak);
      if (l > 0) {
        best = l;
        best_start = b;
      }
    }
    if (best > 0) {
      result.feasible = true;
      result.length = best;
      result.start = best_start;
      return result;
    }
  }
  return result;
}

CycleSolution CycleSolver::Recover(int length, int start, RecoverStats* stats) {
  RecoverStats local;
  RecoverStats& st = stats != nullptr ? *stats : local;
  const int m = graph_.edge_count();
  const int n = graph_.node_count;
  const auto masks = graph_.MembershipMasks();
  const std::uint64_t all_sets =
      graph_.set_count() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << graph_.set_count()) - 1;
  const int anchor = anchor_set();
  const std::uint64_t anchor_bit = std::uint64_t{1} << anchor;
  const auto toward = CentralSideEndpoints(graph_);
  const bool sparse = m <= 2 * n;

  std::vector<int> path_nodes{start};
  std::vector<int> path_edges;
  std::vector<bool> on_path(n, false);
  on_path[start] = true;
  std::uint64_t used = 0;
  int bound = length;

  auto edges_at = [&](int x) {
    std::vector<int> out;
    for (const auto& arc : prepared_.out[x]) out.push_back(arc.edge);
    return out;
  };

  for (;;) {
    const int u = path_nodes.back();
    const int j = static_cast<int>(path_edges.size());
    const int arriving = j == 0 ? -1 : path_edges.back();

    std::vector<int> candidates;
    for (int e : edges_at(u)) {
      if (e == arriving) continue;
      if (j == 0) {
        if ((masks[e] & anchor_bit) == 0) continue;
      } else if ((masks[e] & used) != 0) {
        continue;
      }
      const int v = graph_.Other(e, u);
      const bool closes = v == start && j >= 1;
      if (on_path[v] && !closes) continue;
      if (closes) {
        if ((used | masks[e]) != all_sets || j + 1 > bound) continue;
      } else if (j + 2 > bound) {
        continue;
      }
      if (config_.restricted && graph_.has_marks() && arriving >= 0 &&
          graph_.marks[arriving].role == EdgeRole::kPeripheral &&
          toward[arriving] == u) {
        const int s = graph_.marks[arriving].set;
        if (graph_.marks[e].role != EdgeRole::kCentral ||
            ((masks[e] >> s) & 1) == 0) {
          continue;
        }
      }
      candidates.push_back(e);
    }
    std::sort(candidates.begin(), candidates.end());
    if (candidates.empty()) {
      throw Error("recovery lost the cycle at node " + std::to_string(u));
    }

    // Graph restricted to cycles that extend the current prefix and leave u
    // through one of `keep`.
    auto query = [&](const std::vector<int>& keep) {
      std::vector<std::uint8_t> alive(m, 1);
      if (j >= 1) {
        for (int e : edges_at(start)) {
          if ((masks[e] & anchor_bit) != 0 && e != path_edges.front()) {
            alive[e] = 0;
          }
        }
        for (int i = 1; i < j; ++i) {
          for (int e : edges_at(path_nodes[i])) {
            if (e != path_edges[i - 1] && e != path_edges[i]) alive[e] = 0;
          }
        }
        for (int e : edges_at(u)) {
          if (e != arriving &&
              std::find(keep.begin(), keep.end(), e) == keep.end()) {
            alive[e] = 0;
          }
        }
      } else {
        for (int e : edges_at(start)) {
          if ((masks[e] & anchor_bit) != 0 &&
              std::find(keep.begin(), keep.end(), e) == keep.end()) {
            alive[e] = 0;
          }
        }
      }
      ++st.queries;
      const auto weights = DrawWeights();
      const int l = FirstNonzero(weights, start, bound, alive);
      if (l > 0) bound = std::min(bound, l);
      return l > 0;
    };

    while (candidates.size() > 1) {
      bool narrowed = false;
      if (sparse) {
        for (int e : candidates) {
          if (query({e})) {
            candidates = {e};
            narrowed = true;
            break;
          }
        }
      } else {
        const std::size_t half = candidates.size() / 2;
        std::vector<int> lower(candidates.begin(), candidates.begin() + half);
        std::vector<int> upper(candidates.begin() + half, candidates.end());
        if (query(lower)) {
          candidates = std::move(lower);
          narrowed = true;
        } else if (query(upper)) {
          candidates = std::move(upper);
          narrowed = true;
        }
      }
      if (!narrowed && ++st.rerandomizations > config_.retry_budget) {
        throw RetryExhausted("recovery exceeded " +
                             std::to_string(config_.retry_budget) +
                             " re-randomizations");
      }
    }

    const int e = candidates.front();
    path_edges.push_back(e);
    used |= masks[e];
    const int v = graph_.Other(e, u);
    if (v == start) break;
    path_nodes.push_back(v);
    on_path[v] = true;
  }

  CycleSolution sol;
  sol.start = start;
  sol.nodes = path_nodes;
  sol.edges = path_edges;
  sol.chosen.assign(graph_.set_count(), -1);
  for (int e : path_edges) {
    for (int i = 0; i < graph_.set_count(); ++i) {
      if ((masks[e] >> i) & 1) sol.chosen[i] = e;
    }
  }
  const std::string problem = CheckSolution(graph_, sol, config_.restricted);
  if (!problem.empty()) throw Error("recovered cycle is invalid: " + problem);
  return sol;
}

SolveResult CycleSolver::Solve() {
  SolveResult out;
  out.detection = Detect();
  if (out.detection.feasible) {
    out.solution =
        Recover(out.detection.length, out.detection.start, &out.recovery);
  }
  return out;
}

DetectResult Detect(const ConstrainedGraph& g, const SolverConfig& config) {
  return CycleSolver(g, config).Detect();
}

DetectResult SolvePolySpace(const ConstrainedGraph& g, SolverConfig config) {
  config.variant = SolverVariant::kPolySpace;
  return CycleSolver(g, config).Detect();
}

SolveResult Solve(const ConstrainedGraph& g, const SolverConfig& config) {
  return CycleSolver(g, config).Solve();
}

}  // namespace unpop
