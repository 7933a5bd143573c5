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

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "unpop/errors.h"
#include "unpop/gadgets.h"

namespace unpop {
namespace {

using Pairing = std::vector<std::pair<int, int>>;  // rotation positions

// Non-crossing perfect matchings of rotation positions [lo, hi).
std::vector<Pairing> Matchings(int lo, int hi) {
  if (lo >= hi) return {Pairing{}};
  std::vector<Pairing> out;
  for (int j = lo + 1; j < hi; j += 2) {
    for (const auto& inner : Matchings(lo + 1, j)) {
      for (const auto& outer : Matchings(j + 1, hi)) {
        Pairing p{{lo, j}};
        p.insert(p.end(), inner.begin(), inner.end());
        p.insert(p.end(), outer.begin(), outer.end());
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

class Oracle {
 public:
  explicit Oracle(const PlaneGraph& g) : g_(g) {
    const auto faces = g.Faces();
    faces_of_.resize(g.edges().size());
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      for (EdgeEnd d : faces[f]) faces_of_[d.edge].insert(f);
    }
    partner_.assign(g.edges().size(), std::vector<EdgeEnd>(2));
  }

  bool ShareFace(EdgeEnd a, EdgeEnd b) const {
    for (int f : faces_of_[a.edge]) {
      if (faces_of_[b.edge].count(f)) return true;
    }
    return false;
  }

  std::vector<Pairing> Options(int v) const {
    const auto& rot = g_.vertices()[v].rotation;
    std::vector<Pairing> ok;
    for (const auto& p : Matchings(0, static_cast<int>(rot.size()))) {
      const bool shares = std::all_of(p.begin(), p.end(), [&](auto pr) {
        return ShareFace(rot[pr.first], rot[pr.second]);
      });
      if (shares) ok.push_back(p);
    }
    return ok;
  }

  std::optional<std::vector<EdgeEnd>> Search() {
    const int n = static_cast<int>(g_.vertices().size());
    options_.resize(n);
    for (int v = 0; v < n; ++v) {
      options_[v] = Options(v);
      if (options_[v].empty()) return std::nullopt;
    }
    if (Assign(0)) return Trail();
    return std::nullopt;
  }

 private:
  bool Assign(int v) {
    if (v == static_cast<int>(g_.vertices().size())) {
      return static_cast<int>(Trail().size()) ==
             static_cast<int>(g_.edges().size());
    }
    const auto& rot = g_.vertices()[v].rotation;
    for (const auto& pairing : options_[v]) {
      for (auto [a, b] : pairing) {
        partner_[rot[a].edge][rot[a].side] = rot[b];
        partner_[rot[b].edge][rot[b].side] = rot[a];
      }
      if (Assign(v + 1)) return true;
    }
    return false;
  }

  std::vector<EdgeEnd> Trail() const {
    std::vector<EdgeEnd> darts;
    const EdgeEnd start{0, 0};
    EdgeEnd d = start;
    do {
      darts.push_back(d);
      const EdgeEnd arrive = d.Opposite();
      d = partner_[arrive.edge][arrive.side];
    } while (!(d == start) && darts.size() <= g_.edges().size());
    return darts;
  }

  const PlaneGraph& g_;
  std::vector<std::set<int>> faces_of_;
  std::vector<std::vector<Pairing>> options_;
  std::vector<std::vector<EdgeEnd>> partner_;
};

void CheckOracleInput(const PlaneGraph& g) {
  if (g.edges().empty()) throw InvalidInput("graph has no edges");
  if (!g.Connected()) throw InvalidInput("graph is not connected");
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    if (g.Degree(v) % 2 != 0) {
      throw InvalidInput("vertex " + std::to_string(v) + " has odd degree");
    }
  }
}

}  // namespace

std::optional<std::vector<EdgeEnd>> EulerOracle(const PlaneGraph& graph) {
  if (graph.vertices().size() > kEulerOracleMaxVertices) {
    throw TooLarge("euler oracle handles at most " +
                   std::to_string(kEulerOracleMaxVertices) + " vertices");
  }
  CheckOracleInput(graph);
  return Oracle(graph).Search();
}

bool IsNonCrossingEulerCycle(const PlaneGraph& graph,
                             const std::vector<EdgeEnd>& cycle) {
  const int m = static_cast<int>(graph.edges().size());
  if (static_cast<int>(cycle.size()) != m) return false;
  std::vector<char> used(m, 0);
  // Per vertex, transitions as pairs of rotation positions.
  std::vector<Pairing> transitions(graph.vertices().size());
  std::vector<std::vector<int>> slot(m, std::vector<int>(2, -1));
  for (const auto& v : graph.vertices()) {
    for (int i = 0; i < static_cast<int>(v.rotation.size()); ++i) {
      slot[v.rotation[i].edge][v.rotation[i].side] = i;
    }
  }
  Oracle faces(graph);
  for (int i = 0; i < m; ++i) {
    const EdgeEnd d = cycle[i];
    if (d.edge < 0 || d.edge >= m || d.side < 0 || d.side > 1) return false;
    if (used[d.edge]++) return false;
    const EdgeEnd arrive = d.Opposite();
    const EdgeEnd leave = cycle[(i + 1) % m];
    if (leave.edge < 0 || leave.edge >= m || leave.side < 0 || leave.side > 1) {
      return false;
    }
    const int v = graph.VertexOf(arrive);
    if (graph.VertexOf(leave) != v) return false;
    if (!faces.ShareFace(arrive, leave)) return false;
    transitions[v].emplace_back(slot[arrive.edge][arrive.side],
                                slot[leave.edge][leave.side]);
  }
  for (const auto& pairs : transitions) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        auto [a, b] = pairs[i];
        if (a > b) std::swap(a, b);
        const bool c_in = a < pairs[j].first && pairs[j].first < b;
        const bool d_in = a < pairs[j].second && pairs[j].second < b;
        if (c_in != d_in) return false;
      }
    }
  }
  return true;
}

}  // namespace unpop
