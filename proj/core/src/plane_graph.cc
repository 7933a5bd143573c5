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

#include "unpop/plane_graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "unpop/errors.h"

namespace unpop {
namespace {

using Json = nlohmann::ordered_json;

double Angle(Point d) { return std::atan2(d.y, d.x); }

// Rotation of `ends` sorted counterclockwise by heading, starting anywhere.
std::vector<EdgeEnd> SortedByHeading(const PlaneGraph& g,
                                     std::vector<EdgeEnd> ends) {
  std::sort(ends.begin(), ends.end(), [&](EdgeEnd a, EdgeEnd b) {
    return Angle(g.Heading(a)) < Angle(g.Heading(b));
  });
  return ends;
}

bool SameCycle(const std::vector<EdgeEnd>& a, const std::vector<EdgeEnd>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const std::size_t shift = it - b.begin();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[(i + shift) % b.size()])) return false;
  }
  return true;
}

Point ReadPoint(const Json& p) {
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
      !p[1].is_number()) {
    throw ParseError("points must be [x, y] pairs");
  }
  return {p[0].get<double>(), p[1].get<double>()};
}

void CheckId(const Json& item, std::size_t index, const char* what) {
  if (item.contains("id") &&
      (!item["id"].is_number_integer() ||
       item["id"].get<long long>() != static_cast<long long>(index))) {
    throw ParseError(std::string(what) + " ids must equal their position");
  }
}

}  // namespace

PlaneGraph::PlaneGraph(std::vector<PlaneVertex> vertices,
                       std::vector<PlaneEdge> edges, bool check_drawing)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = static_cast<int>(vertices_.size());
  std::vector<std::vector<EdgeEnd>> incident(n);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto& edge = edges_[e];
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) {
      throw InvalidInput("edge " + std::to_string(e) + " names a missing vertex");
    }
    incident[edge.u].push_back({e, 0});
    incident[edge.v].push_back({e, 1});
  }
  slot_.assign(edges_.size(), std::vector<int>(2, -1));
  for (int v = 0; v < n; ++v) {
    auto& rot = vertices_[v].rotation;
    if (!check_drawing && rot.empty()) rot = incident[v];
    const auto drawn =
        check_drawing ? SortedByHeading(*this, incident[v]) : rot;
    for (std::size_t i = 1; check_drawing && i < drawn.size(); ++i) {
      const Point a = Heading(drawn[i - 1]);
      const Point b = Heading(drawn[i]);
      if (std::abs(Cross(a, b)) < 1e-12 && Dot(a, b) > 0) {
        throw InvalidInput("two edges leave vertex " + std::to_string(v) +
                           " in the same direction");
      }
    }
    if (rot.empty()) {
      rot = drawn;
    } else {
      for (EdgeEnd end : rot) {
        if (end.edge < 0 || end.edge >= static_cast<int>(edges_.size()) ||
            end.side < 0 || end.side > 1 || VertexOf(end) != v) {
          throw InvalidInput("rotation of vertex " + std::to_string(v) +
                             " names an end that is not incident");
        }
      }
      std::vector<EdgeEnd> sorted = rot;
      auto key = [](EdgeEnd x) { return std::pair(x.edge, x.side); };
      std::sort(sorted.begin(), sorted.end(),
                [&](EdgeEnd a, EdgeEnd b) { return key(a) < key(b); });
      std::vector<EdgeEnd> expect = incident[v];
      std::sort(expect.begin(), expect.end(),
                [&](EdgeEnd a, EdgeEnd b) { return key(a) < key(b); });
      if (sorted != expect) {
        throw InvalidInput("rotation of vertex " + std::to_string(v) +
                           " must list each incident end once");
      }
      if (!SameCycle(rot, drawn)) {
        throw InvalidInput("rotation of vertex " + std::to_string(v) +
                           " disagrees with the drawing");
      }
    }
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      slot_[rot[i].edge][rot[i].side] = i;
    }
  }
}

int PlaneGraph::VertexOf(EdgeEnd end) const {
  const auto& e = edges_[end.edge];
  return end.side == 0 ? e.u : e.v;
}

int PlaneGraph::Degree(int v) const {
  return static_cast<int>(vertices_[v].rotation.size());
}

std::vector<Point> PlaneGraph::Route(int edge) const {
  const auto& e = edges_[edge];
  std::vector<Point> route{vertices_[e.u].at};
  route.insert(route.end(), e.via.begin(), e.via.end());
  route.push_back(vertices_[e.v].at);
  return route;
}

Point PlaneGraph::Heading(EdgeEnd end) const {
  const auto route = Route(end.edge);
  const Point d = end.side == 0 ? route[1] - route[0]
                                : route[route.size() - 2] - route.back();
  if (Norm(d) == 0) {
    throw InvalidInput("edge " + std::to_string(end.edge) +
                       " has a zero-length first or last segment");
  }
  return d;
}

EdgeEnd PlaneGraph::RotationNext(EdgeEnd end) const {
  const auto& rot = vertices_[VertexOf(end)].rotation;
  return rot[(slot_[end.edge][end.side] + 1) % rot.size()];
}

EdgeEnd PlaneGraph::RotationPrev(EdgeEnd end) const {
  const auto& rot = vertices_[VertexOf(end)].rotation;
  return rot[(slot_[end.edge][end.side] + rot.size() - 1) % rot.size()];
}

std::vector<std::vector<EdgeEnd>> PlaneGraph::Faces() const {
  std::vector<std::vector<char>> seen(edges_.size(), std::vector<char>(2, 0));
  std::vector<std::vector<EdgeEnd>> faces;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    for (int s = 0; s < 2; ++s) {
      if (seen[e][s]) continue;
      std::vector<EdgeEnd> face;
      EdgeEnd d{e, s};
      while (!seen[d.edge][d.side]) {
        seen[d.edge][d.side] = 1;
        face.push_back(d);
        // Arriving through the opposite end, the face on the left continues
        // along the next end clockwise.
        d = RotationPrev(d.Opposite());
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool PlaneGraph::Connected() const {
  const int n = static_cast<int>(vertices_.size());
  if (n == 0) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) parent[find(e.u)] = find(e.v);
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

bool PlaneGraph::EmbeddingConsistent() const {
  if (!Connected()) return false;
  const long long v = vertices_.size();
  const long long e = edges_.size();
  const long long f = Faces().size();
  return v - e + f == 2;
}

PlaneGraph PlaneGraphFromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError("plane graph must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("missing \"vertices\" array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("missing \"edges\" array");
  }
  std::vector<PlaneVertex> vertices;
  std::vector<PlaneEdge> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& e = doc["edges"][i];
    if (!e.is_object()) throw ParseError("each edge must be an object");
    CheckId(e, i, "edge");
    if (!e.contains("u") || !e["u"].is_number_integer() || !e.contains("v") ||
        !e["v"].is_number_integer()) {
      throw ParseError("edge " + std::to_string(i) + " needs integer u and v");
    }
    PlaneEdge edge{e["u"].get<int>(), e["v"].get<int>(), {}};
    if (e.contains("via")) {
      if (!e["via"].is_array()) throw ParseError("\"via\" must be an array");
      for (const auto& p : e["via"]) edge.via.push_back(ReadPoint(p));
    }
    edges.push_back(std::move(edge));
  }
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    if (!v.is_object()) throw ParseError("each vertex must be an object");
    CheckId(v, i, "vertex");
    if (!v.contains("x") || !v["x"].is_number() || !v.contains("y") ||
        !v["y"].is_number()) {
      throw ParseError("vertex " + std::to_string(i) + " needs numeric x and y");
    }
    PlaneVertex vertex{{v["x"].get<double>(), v["y"].get<double>()}, {}};
    if (v.contains("rotation")) {
      if (!v["rotation"].is_array()) throw ParseError("rotation must be an array");
      for (const auto& r : v["rotation"]) {
        if (r.is_number_integer()) {
          const int e = r.get<int>();
          if (e < 0 || e >= static_cast<int>(edges.size())) {
            throw InvalidInput("rotation names a missing edge");
          }
          if (edges[e].u == edges[e].v) {
            throw InvalidInput("loop " + std::to_string(e) +
                               " must be given as [edge, side] in a rotation");
          }
          vertex.rotation.push_back(
              {e, edges[e].u == static_cast<int>(i) ? 0 : 1});
        } else if (r.is_array() && r.size() == 2 && r[0].is_number_integer() &&
                   r[1].is_number_integer()) {
          vertex.rotation.push_back({r[0].get<int>(), r[1].get<int>()});
        } else {
          throw ParseError("rotation entries are edge or [edge, side]");
        }
      }
    }
    vertices.push_back(std::move(vertex));
  }
  return PlaneGraph(std::move(vertices), std::move(edges));
}

Json PlaneGraphToJson(const PlaneGraph& graph) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < graph.vertices().size(); ++i) {
    const auto& v = graph.vertices()[i];
    Json rotation = Json::array();
    for (EdgeEnd end : v.rotation) rotation.push_back({end.edge, end.side});
    vertices.push_back({{"id", i},
                        {"x", v.at.x},
                        {"y", v.at.y},
                        {"rotation", std::move(rotation)}});
  }
  Json edges = Json::array();
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const auto& e = graph.edges()[i];
    Json via = Json::array();
    for (const Point& p : e.via) via.push_back({p.x, p.y});
    edges.push_back(
        {{"id", i}, {"u", e.u}, {"v", e.v}, {"via", std::move(via)}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

}  // namespace unpop
