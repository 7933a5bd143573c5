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

#include "unpop/dual.h"

#include <algorithm>
#include <map>
#include <string>

#include "unpop/errors.h"

namespace unpop {
namespace {

class DualBuilder {
 public:
  DualBuilder(const Arrangement& arr,
              const std::vector<PopularFaceReport>& reports,
              const DualOptions& options)
      : arr_(arr), reports_(reports), options_(options) {
    report_of_.assign(arr.faces().size(), -1);
    for (int i = 0; i < static_cast<int>(reports.size()); ++i) {
      report_of_[reports[i].face] = i;
    }
  }

  ModifiedDual Build() {
    for (const auto& r : reports_) {
      if (!r.resolvable) {
        throw Infeasible(r.face, "face " + std::to_string(r.face) +
                                     " is not resolvable");
      }
    }
    out_.variant = options_.variant;
    out_.frame_constraint = options_.frame_constraint;
    out_.graph.sets.assign(reports_.size(), {});
    for (const auto& r : reports_) out_.set_faces.push_back(r.face);

    for (int f = 0; f < static_cast<int>(arr_.faces().size()); ++f) {
      if (!arr_.faces()[f].outer && report_of_[f] < 0) {
        face_node_[f] = AddNode({NodeKind::kFace, f});
      }
    }
    AddCrossings();
    for (int i = 0; i < static_cast<int>(reports_.size()); ++i) {
      if (options_.variant == DualVariant::kFull) {
        AddFullPassages(i);
      } else {
        AddCompactPassages(i);
      }
      if (out_.graph.sets[i].empty()) {
        throw Infeasible(reports_[i].face,
                         "no passage through face " +
                             std::to_string(reports_[i].face) +
                             " separates its curtains");
      }
    }
    if (options_.frame_constraint) AddFrameSet();
    Prune();
    if (options_.variant == DualVariant::kFull) out_.graph.marks.clear();
    return std::move(out_);
  }

 private:
  int AddNode(NodeTag tag) {
    out_.graph.tags.push_back(tag);
    return out_.graph.node_count++;
  }

  int AddEdge(int u, int v, EdgeMark mark = {}) {
    out_.graph.edges.push_back({u, v});
    out_.graph.marks.push_back(mark);
    out_.crossing.push_back(-1);
    out_.frame_edge.push_back(-1);
    out_.inside.push_back(-1);
    return out_.graph.edge_count() - 1;
  }

  std::pair<int, int> SideFaces(int e) const {
    return {arr_.DartFace(2 * e), arr_.DartFace(2 * e + 1)};
  }

  // Whether edge e of popular face `face` may host a terminal.
  bool Eligible(int face, int e) const {
    if (arr_.IsFrameEdge(e)) return options_.frame_constraint;
    const auto [a, b] = SideFaces(e);
    if (a == b) return false;
    if (reports_[report_of_[face]].IsDuplicate(e)) return false;
    const int other = a == face ? b : a;
    return report_of_[other] < 0 || !reports_[report_of_[other]].IsDuplicate(e);
  }

  void AddCrossings() {
    if (options_.frame_constraint) {
      frame_in_ = AddNode({NodeKind::kFrameIn, -1});
      frame_out_ = AddNode({NodeKind::kFrameOut, -1});
    }
    for (int e = 0; e < static_cast<int>(arr_.edges().size()); ++e) {
      if (arr_.IsFrameEdge(e)) {
        if (options_.frame_constraint) AddFrameCrossing(e);
        continue;
      }
      const auto [a, b] = SideFaces(e);
      if (a == b) continue;
      const bool pa = report_of_[a] >= 0;
      const bool pb = report_of_[b] >= 0;
      if (!pa && !pb) {
        const int edge = AddEdge(face_node_.at(a), face_node_.at(b));
        out_.crossing[edge] = e;
      } else if (pa && pb) {
        if (Eligible(a, e) && Eligible(b, e)) {
          terminal_[e] = AddNode({NodeKind::kSharedTerminal, e});
        }
      } else {
        const int popular = pa ? a : b;
        if (!Eligible(popular, e)) continue;
        terminal_[e] = AddNode({NodeKind::kTerminal, e});
        AddEdge(terminal_[e], face_node_.at(pa ? b : a));
      }
    }
  }

  // Terminal edges on one boundary cycle of a face, in cycle order.
  std::vector<int> CycleEdges(int cycle) const {
    std::vector<int> out;
    for (int d : arr_.CycleDarts(cycle)) out.push_back(Arrangement::EdgeOf(d));
    return out;
  }

  void AddPassage(int set, int u, int v, EdgeMark mark) {
    const int edge = AddEdge(u, v, mark);
    out_.inside[edge] = reports_[set].face;
    out_.graph.sets[set].push_back(edge);
  }

  void AddFullPassages(int set) {
    const auto& report = reports_[set];
    std::vector<int> terms;
    for (int c : arr_.faces()[report.face].cycles) {
      for (int e : CycleEdges(c)) {
        if (terminal_.count(e) != 0) terms.push_back(e);
      }
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    for (std::size_t a = 0; a < terms.size(); ++a) {
      for (std::size_t b = a + 1; b < terms.size(); ++b) {
        if (SeparatesCurtains(arr_, report, terms[a], terms[b])) {
          AddPassage(set, terminal_[terms[a]], terminal_[terms[b]], {});
        }
      }
    }
  }

  // Runs are the arcs between consecutive duplicates of a boundary cycle.
  // Terminals shared with another popular face form runs of their own.
  std::vector<std::vector<int>> Runs(int set) const {
    const auto& report = reports_[set];
    std::vector<std::vector<int>> runs;
    for (int c : arr_.faces()[report.face].cycles) {
      auto order = CycleEdges(c);
      const auto first_dup =
          std::find_if(order.begin(), order.end(),
                       [&](int e) { return report.IsDuplicate(e); });
      if (first_dup != order.end()) {
        std::rotate(order.begin(), first_dup + 1, order.end());
      }
      std::vector<int> run;
      auto flush = [&] {
        if (!run.empty()) runs.push_back(std::move(run));
        run.clear();
      };
      for (int e : order) {
        if (report.IsDuplicate(e)) {
          flush();
        } else if (terminal_.count(e) != 0) {
          if (out_.graph.tags[terminal_.at(e)].kind ==
              NodeKind::kSharedTerminal) {
            runs.push_back({e});
          } else if (std::find(run.begin(), run.end(), e) == run.end()) {
            run.push_back(e);
          }
        }
      }
      flush();
    }
    return runs;
  }

  void AddCompactPassages(int set) {
    const auto& report = reports_[set];
    const auto runs = Runs(set);
    const int r = static_cast<int>(runs.size());
    std::vector<std::vector<int>> partners(r);
    for (int a = 0; a < r; ++a) {
      for (int b = a + 1; b < r; ++b) {
        if (SeparatesCurtains(arr_, report, runs[a].front(),
                              runs[b].front())) {
          partners[a].push_back(b);
        }
      }
    }
    std::vector<int> node(r, -1);
    auto run_node = [&](int a) {
      if (node[a] >= 0) return node[a];
      if (runs[a].size() == 1) return node[a] = terminal_.at(runs[a][0]);
      node[a] = AddNode({NodeKind::kRunTerminal, report.face});
      for (int e : runs[a]) {
        const int edge =
            AddEdge(terminal_.at(e), node[a], {EdgeRole::kPeripheral, set});
        out_.inside[edge] = report.face;
      }
      return node[a];
    };
    for (int a = 0; a < r; ++a) {
      for (int b : partners[a]) {
        AddPassage(set, run_node(a), run_node(b),
                   {EdgeRole::kCentral, set});
      }
    }
  }

  // The curve may start or end on frame edge e. Inside a popular face the
  // frame edge hosts a terminal like any other non-duplicate edge.
  void AddFrameCrossing(int e) {
    const auto [a, b] = SideFaces(e);
    const int inner = arr_.faces()[a].outer ? b : a;
    int node = -1;
    if (report_of_[inner] >= 0) {
      node = terminal_[e] = AddNode({NodeKind::kTerminal, e});
    } else {
      node = face_node_.at(inner);
    }
    out_.frame_edge[AddEdge(frame_in_, node)] = e;
    out_.frame_edge[AddEdge(frame_out_, node)] = e;
  }

  void AddFrameSet() {
    out_.graph.sets.push_back({AddEdge(frame_in_, frame_out_)});
    out_.set_faces.push_back(-1);
  }

  // Drops nodes without edges, keeping ids dense.
  void Prune() {
    auto& g = out_.graph;
    std::vector<int> degree(g.node_count, 0);
    for (const auto& e : g.edges) {
      ++degree[e.u];
      ++degree[e.v];
    }
    std::vector<int> remap(g.node_count, -1);
    std::vector<NodeTag> tags;
    for (int v = 0; v < g.node_count; ++v) {
      if (degree[v] == 0) continue;
      remap[v] = static_cast<int>(tags.size());
      tags.push_back(g.tags[v]);
    }
    for (auto& e : g.edges) {
      e.u = remap[e.u];
      e.v = remap[e.v];
    }
    g.tags = std::move(tags);
    g.node_count = static_cast<int>(g.tags.size());
  }

  const Arrangement& arr_;
  const std::vector<PopularFaceReport>& reports_;
  DualOptions options_;
  std::vector<int> report_of_;
  std::map<int, int> face_node_;
  std::map<int, int> terminal_;
  int frame_in_ = -1;
  int frame_out_ = -1;
  ModifiedDual out_;
};

}  // namespace

ModifiedDual BuildModifiedDual(const Arrangement& arr,
                               const std::vector<PopularFaceReport>& reports,
                               const DualOptions& options) {
  return DualBuilder(arr, reports, options).Build();
}

}  // namespace unpop
