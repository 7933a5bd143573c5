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

#include "unpop/constrained_graph.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "unpop/errors.h"

namespace unpop {
namespace {

using Json = nlohmann::ordered_json;

std::string Str(int v) { return std::to_string(v); }

int ReadInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string("expected integer for ") + what);
  }
  return j.get<int>();
}

}  // namespace

std::vector<std::uint64_t> ConstrainedGraph::MembershipMasks() const {
  std::vector<std::uint64_t> out(edges.size(), 0);
  for (int i = 0; i < set_count(); ++i) {
    for (int e : sets[i]) out[e] |= std::uint64_t{1} << i;
  }
  return out;
}

std::vector<int> CentralSideEndpoints(const ConstrainedGraph& g) {
  std::vector<int> out(g.edges.size(), -1);
  if (!g.has_marks()) return out;
  // Nodes touching a central edge, per set.
  std::set<std::pair<int, int>> central_nodes;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.marks[e].role != EdgeRole::kCentral) continue;
    central_nodes.insert({g.marks[e].set, g.edges[e].u});
    central_nodes.insert({g.marks[e].set, g.edges[e].v});
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.marks[e].role != EdgeRole::kPeripheral) continue;
    const int s = g.marks[e].set;
    const bool on_u = central_nodes.count({s, g.edges[e].u}) != 0;
    const bool on_v = central_nodes.count({s, g.edges[e].v}) != 0;
    if (on_u && !on_v) out[e] = g.edges[e].u;
    if (on_v && !on_u) out[e] = g.edges[e].v;
  }
  return out;
}

void ValidateGraph(const ConstrainedGraph& g, bool restricted) {
  if (g.node_count < 0) throw InvalidInput("negative node count");
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u < 0 || v < 0 || u >= g.node_count || v >= g.node_count) {
      throw InvalidInput("edge " + Str(e) + " has an endpoint out of range");
    }
    if (u == v) throw InvalidInput("edge " + Str(e) + " is a loop");
  }
  if (g.set_count() > 64) throw InvalidInput("more than 64 edge sets");
  for (int i = 0; i < g.set_count(); ++i) {
    std::set<int> seen;
    std::set<std::pair<int, int>> pairs;
    for (int e : g.sets[i]) {
      if (e < 0 || e >= g.edge_count()) {
        throw InvalidInput("set " + Str(i) + " references unknown edge " +
                           Str(e));
      }
      if (!seen.insert(e).second) {
        throw InvalidInput("set " + Str(i) + " lists edge " + Str(e) +
                           " twice");
      }
      const auto [u, v] = g.edges[e];
      if (!pairs.insert({std::min(u, v), std::max(u, v)}).second) {
        throw InvalidInput("set " + Str(i) +
                           " holds parallel edges between one node pair");
      }
    }
  }
  if (!g.marks.empty() && g.marks.size() != g.edges.size()) {
    throw InvalidInput("marks must cover every edge");
  }
  if (!g.tags.empty() && static_cast<int>(g.tags.size()) != g.node_count) {
    throw InvalidInput("node tags must cover every node");
  }
  const auto masks = g.MembershipMasks();
  for (int e = 0; e < static_cast<int>(g.marks.size()); ++e) {
    const EdgeMark m = g.marks[e];
    if (m.role == EdgeRole::kOrdinary) continue;
    if (m.set < 0 || m.set >= g.set_count()) {
      throw InvalidInput("mark of edge " + Str(e) + " names unknown set");
    }
    if (m.role == EdgeRole::kCentral && ((masks[e] >> m.set) & 1) == 0) {
      throw InvalidInput("central edge " + Str(e) + " is not in its set");
    }
  }
  if (!restricted || !g.has_marks()) return;

  const auto toward = CentralSideEndpoints(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.marks[e].role != EdgeRole::kPeripheral) continue;
    if (toward[e] < 0) {
      throw InvalidInput("peripheral edge " + Str(e) +
                         " needs exactly one endpoint on a central edge");
    }
  }
  // Every central-side node may only carry edges of its own set.
  std::vector<int> node_set(g.node_count, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (toward[e] < 0) continue;
    int& s = node_set[toward[e]];
    if (s >= 0 && s != g.marks[e].set) {
      throw InvalidInput("node " + Str(toward[e]) +
                         " is the central side of two different sets");
    }
    s = g.marks[e].set;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int x : {g.edges[e].u, g.edges[e].v}) {
      const int s = node_set[x];
      if (s < 0) continue;
      const EdgeMark m = g.marks[e];
      const bool ok = (m.role == EdgeRole::kPeripheral && m.set == s) ||
                      (m.role == EdgeRole::kCentral && ((masks[e] >> s) & 1));
      if (!ok) {
        throw InvalidInput("node " + Str(x) + " mixes edge " + Str(e) +
                           " with the peripheral structure of set " + Str(s));
      }
    }
  }
}

std::string CheckSolution(const ConstrainedGraph& g, const CycleSolution& sol,
                          bool restricted) {
  const int len = sol.length();
  if (len < 2) return "cycle shorter than two edges";
  if (static_cast<int>(sol.nodes.size()) != len) return "node list mismatch";
  if (sol.nodes.front() != sol.start) return "cycle does not begin at start";
  std::set<int> nodes(sol.nodes.begin(), sol.nodes.end());
  if (static_cast<int>(nodes.size()) != len) return "a node repeats";
  std::set<int> edges(sol.edges.begin(), sol.edges.end());
  if (static_cast<int>(edges.size()) != len) return "an edge repeats";
  for (int i = 0; i < len; ++i) {
    const int e = sol.edges[i];
    if (e < 0 || e >= g.edge_count()) return "unknown edge id";
    const int tail = sol.nodes[i];
    const int head = sol.nodes[(i + 1) % len];
    const auto [u, v] = g.edges[e];
    if (!((u == tail && v == head) || (v == tail && u == head))) {
      return "edge " + Str(e) + " does not join consecutive nodes";
    }
  }
  if (static_cast<int>(sol.chosen.size()) != g.set_count()) {
    return "chosen list does not cover every set";
  }
  for (int i = 0; i < g.set_count(); ++i) {
    int hits = 0;
    int hit = -1;
    for (int e : g.sets[i]) {
      if (edges.count(e)) {
        ++hits;
        hit = e;
      }
    }
    if (hits != 1) {
      return "set " + Str(i) + " is used " + Str(hits) + " times";
    }
    if (sol.chosen[i] != hit) return "chosen edge of set " + Str(i) + " wrong";
  }
  if (restricted && g.has_marks()) {
    const auto toward = CentralSideEndpoints(g);
    const auto masks = g.MembershipMasks();
    for (int i = 0; i < len; ++i) {
      const int e = sol.edges[i];
      const int head = sol.nodes[(i + 1) % len];
      if (g.marks[e].role != EdgeRole::kPeripheral || toward[e] != head) {
        continue;
      }
      const int next = sol.edges[(i + 1) % len];
      const int s = g.marks[e].set;
      if (g.marks[next].role != EdgeRole::kCentral ||
          ((masks[next] >> s) & 1) == 0) {
        return "peripheral edge " + Str(e) +
               " is not followed by a central edge";
      }
    }
  }
  return {};
}

ConstrainedGraph GraphFromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be an object");
  ConstrainedGraph g;
  if (!doc.contains("nodes")) throw ParseError("missing \"nodes\"");
  g.node_count = ReadInt(doc["nodes"], "nodes");
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("missing \"edges\" array");
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("each edge must be a pair [u, v]");
    }
    g.edges.push_back({ReadInt(e[0], "edge endpoint"),
                       ReadInt(e[1], "edge endpoint")});
  }
  if (!doc.contains("sets") || !doc["sets"].is_array()) {
    throw ParseError("missing \"sets\" array");
  }
  for (const auto& s : doc["sets"]) {
    if (!s.is_array()) throw ParseError("each set must be an array");
    auto& out = g.sets.emplace_back();
    for (const auto& e : s) out.push_back(ReadInt(e, "set member"));
  }
  if (doc.contains("marks")) {
    const auto& m = doc["marks"];
    if (!m.is_object()) throw ParseError("\"marks\" must be an object");
    g.marks.assign(g.edges.size(), EdgeMark{});
    auto at = [&](int e) -> EdgeMark& {
      if (e < 0 || e >= g.edge_count()) {
        throw ParseError("mark references unknown edge " + Str(e));
      }
      return g.marks[e];
    };
    if (m.contains("central")) {
      for (const auto& e : m["central"]) {
        const int id = ReadInt(e, "central edge");
        // Central edges belong to exactly one set in the compact dual.
        int owner = -1;
        for (int i = 0; i < g.set_count() && owner < 0; ++i) {
          if (std::find(g.sets[i].begin(), g.sets[i].end(), id) !=
              g.sets[i].end()) {
            owner = i;
          }
        }
        at(id) = {EdgeRole::kCentral, owner};
      }
    }
    if (m.contains("peripheral")) {
      for (const auto& p : m["peripheral"]) {
        if (!p.is_array() || p.size() != 2) {
          throw ParseError("peripheral marks must be [edge, set] pairs");
        }
        at(ReadInt(p[0], "peripheral edge")) = {EdgeRole::kPeripheral,
                                                ReadInt(p[1], "set index")};
      }
    }
  }
  ValidateGraph(g, false);
  return g;
}

Json GraphToJson(const ConstrainedGraph& g) {
  Json doc;
  doc["nodes"] = g.node_count;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  Json sets = Json::array();
  for (const auto& s : g.sets) sets.push_back(s);
  doc["sets"] = std::move(sets);
  if (g.has_marks()) {
    Json central = Json::array();
    Json peripheral = Json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.marks[e].role == EdgeRole::kCentral) central.push_back(e);
      if (g.marks[e].role == EdgeRole::kPeripheral) {
        peripheral.push_back({e, g.marks[e].set});
      }
    }
    doc["marks"] = {{"central", std::move(central)},
                    {"peripheral", std::move(peripheral)}};
  }
  return doc;
}

}  // namespace unpop
