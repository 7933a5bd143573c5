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
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "unpop/dual.h"
#include "unpop/errors.h"

namespace unpop {
namespace {

struct Segment {
  Point a;
  Point b;
};

struct Item {
  enum Kind { kFace, kEvent, kFrameEvent, kCut } kind;
  int ref;
};

Point LeftNormal(Point d) {
  const double n = Norm(d);
  return n == 0 ? Point{0, 0} : Point{-d.y / n, d.x / n};
}

// Where the curve crosses an arrangement edge: the middle of its middle
// polyline segment, away from every vertex.
Point CrossingPoint(const ArrEdge& edge) {
  const auto& line = edge.polyline;
  const std::size_t s = (line.size() - 2) / 2;
  return Lerp(line[s], line[s + 1], 0.5);
}

class FaceRouter {
 public:
  FaceRouter(const Arrangement& arr, int face) : arr_(arr), face_(face) {
    for (int c : arr.faces()[face].cycles) {
      for (int d : arr.CycleDarts(c)) {
        const auto line = arr.DartPolyline(d);
        for (std::size_t i = 1; i < line.size(); ++i) {
          segments_.push_back({line[i - 1], line[i]});
        }
      }
    }
    min_length_ = std::numeric_limits<double>::infinity();
    for (const auto& s : segments_) {
      min_length_ = std::min(min_length_, Distance(s.a, s.b));
    }
  }

  // Path from p to q through the face interior; p and q lie on its
  // boundary. `clearance` receives a distance the path keeps from every
  // boundary segment it does not start or end on.
  std::vector<Point> Route(Point p, Point q, double* clearance) const {
    double delta = 0.2 * min_length_;
    for (int attempt = 0; attempt < 8; ++attempt, delta /= 4) {
      auto path = TryRoute(p, q, delta);
      if (!path.empty()) {
        *clearance = 1e-3 * delta;
        return path;
      }
    }
    throw EmbedError("no route inside face " + std::to_string(face_));
  }

 private:
  // Index of the boundary segment holding x, or -1.
  int HomeSegment(Point x) const {
    for (int i = 0; i < static_cast<int>(segments_.size()); ++i) {
      if (PointSegmentDistance(x, segments_[i].a, segments_[i].b) <=
          arr_.options().epsilon) {
        return i;
      }
    }
    return -1;
  }

  bool Visible(Point x, int home_x, Point y, int home_y, double tol) const {
    for (int i = 0; i < static_cast<int>(segments_.size()); ++i) {
      const auto& s = segments_[i];
      if (i == home_x || i == home_y) {
        const Point far = i == home_x ? y : x;
        const double side = Cross(s.b - s.a, far - s.a) / Norm(s.b - s.a);
        if (side <= tol) return false;
        if (home_x == home_y) return false;
        continue;
      }
      if (SegmentDistance(x, y, s.a, s.b) <= tol) return false;
    }
    return true;
  }

  std::vector<Point> Candidates(double delta) const {
    std::vector<Point> raw;
    for (int c : arr_.faces()[face_].cycles) {
      auto ring = arr_.CycleRing(c);
      if (ring.size() > 1 && Distance(ring.front(), ring.back()) == 0) {
        ring.pop_back();
      }
      const std::size_t n = ring.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Point prev = ring[(i + n - 1) % n];
        const Point v = ring[i];
        const Point next = ring[(i + 1) % n];
        const Point bis = LeftNormal(v - prev) + LeftNormal(next - v);
        const double len = Norm(bis);
        if (len > 1e-9) {
          for (double k : {1.0, 3.0}) raw.push_back(v + (k * delta / len) * bis);
        }
        raw.push_back(Lerp(v, next, 0.5) + delta * LeftNormal(next - v));
      }
    }
    std::vector<Point> out;
    for (const Point& x : raw) {
      bool clear = true;
      for (const auto& s : segments_) {
        if (PointSegmentDistance(x, s.a, s.b) < 0.5 * delta) {
          clear = false;
          break;
        }
      }
      if (clear && arr_.LocatePoint(x) == face_) out.push_back(x);
    }
    return out;
  }

  std::vector<Point> TryRoute(Point p, Point q, double delta) const {
    const double tol = 1e-3 * delta;
    std::vector<Point> nodes{p, q};
    const auto extra = Candidates(delta);
    nodes.insert(nodes.end(), extra.begin(), extra.end());
    std::vector<int> home(nodes.size(), -1);
    home[0] = HomeSegment(p);
    home[1] = HomeSegment(q);

    const int n = static_cast<int>(nodes.size());
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);
    std::vector<bool> done(n, false);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[0] = 0;
    heap.push({0, 0});
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (done[x]) continue;
      done[x] = true;
      if (x == 1) break;
      for (int y = 1; y < n; ++y) {
        if (done[y]) continue;
        const double nd = d + Distance(nodes[x], nodes[y]);
        if (nd >= dist[y]) continue;
        if (!Visible(nodes[x], home[x], nodes[y], home[y], tol)) continue;
        dist[y] = nd;
        parent[y] = x;
        heap.push({nd, y});
      }
    }
    if (!done[1]) return {};
    std::vector<Point> path;
    for (int x = 1; x >= 0; x = parent[x]) path.push_back(nodes[x]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  const Arrangement& arr_;
  int face_;
  std::vector<Segment> segments_;
  double min_length_;
};

std::vector<Item> SolutionItems(const ModifiedDual& dual,
                                const CycleSolution& sol) {
  const auto& g = dual.graph;
  std::vector<Item> items;
  for (int i = 0; i < sol.length(); ++i) {
    const NodeTag tag = g.tags[sol.nodes[i]];
    switch (tag.kind) {
      case NodeKind::kFace:
      case NodeKind::kRunTerminal:
        items.push_back({Item::kFace, tag.ref});
        break;
      case NodeKind::kTerminal:
      case NodeKind::kSharedTerminal:
        items.push_back({Item::kEvent, tag.ref});
        break;
      default:
        break;
    }
    const int e = sol.edges[i];
    if (dual.crossing[e] >= 0) {
      items.push_back({Item::kEvent, dual.crossing[e]});
    } else if (dual.inside[e] >= 0) {
      items.push_back({Item::kFace, dual.inside[e]});
    } else if (dual.frame_edge[e] >= 0) {
      // Frame terminals contribute their crossing as nodes.
      const auto ends = {g.tags[g.edges[e].u].kind, g.tags[g.edges[e].v].kind};
      if (std::find(ends.begin(), ends.end(), NodeKind::kTerminal) ==
          ends.end()) {
        items.push_back({Item::kFrameEvent, dual.frame_edge[e]});
      }
    } else if (dual.frame_constraint && !dual.set_faces.empty() &&
               dual.set_faces.back() == -1 && g.sets.back().front() == e) {
      items.push_back({Item::kCut, -1});
    }
  }
  return items;
}

}  // namespace

Curve DualCycleToCurve(const Arrangement& arr, const ModifiedDual& dual,
                       const CycleSolution& solution, int curve_id) {
  auto items = SolutionItems(dual, solution);
  for (Item& x : items) {
    if (x.kind == Item::kEvent && arr.IsFrameEdge(x.ref)) {
      x.kind = Item::kFrameEvent;
    }
  }
  const auto cut = std::find_if(items.begin(), items.end(), [](const Item& x) {
    return x.kind == Item::kCut;
  });
  const bool open = cut != items.end();
  if (open) {
    std::rotate(items.begin(), cut + 1, items.end());
    items.pop_back();
  } else {
    const auto first = std::find_if(items.begin(), items.end(),
                                    [](const Item& x) {
                                      return x.kind != Item::kFace;
                                    });
    if (first == items.end()) throw EmbedError("cycle crosses no edge");
    std::rotate(items.begin(), first, items.end());
  }
  std::vector<Item> seq;
  for (const Item& x : items) {
    if (x.kind == Item::kFace && !seq.empty() && seq.back().kind == Item::kFace) {
      if (seq.back().ref != x.ref) throw EmbedError("faces without a crossing");
      continue;
    }
    seq.push_back(x);
  }
  if (!open) seq.push_back(seq.front());

  // seq alternates crossing, face, crossing, ..., crossing.
  std::vector<Point> at;
  int frame_events = 0;
  for (std::size_t i = 0; i < seq.size(); i += 2) {
    if (seq[i].kind == Item::kFace) throw EmbedError("malformed solution");
    const ArrEdge& edge = arr.edges()[seq[i].ref];
    if (seq[i].kind == Item::kFrameEvent) {
      at.push_back(PointAlong(edge.polyline, ++frame_events == 1 ? 1.0 / 3
                                                                 : 2.0 / 3));
    } else {
      at.push_back(CrossingPoint(edge));
    }
  }
  if (seq.size() % 2 == 0) throw EmbedError("malformed solution");

  std::vector<std::vector<Point>> legs;
  std::vector<double> clearance;
  for (std::size_t i = 1; i < seq.size(); i += 2) {
    if (seq[i].kind != Item::kFace) throw EmbedError("malformed solution");
    double c = 0;
    legs.push_back(FaceRouter(arr, seq[i].ref).Route(at[i / 2], at[i / 2 + 1], &c));
    clearance.push_back(c);
  }

  // A crossing must not be a polyline vertex of the curve: replace it by
  // two points just inside the faces on either side.
  const std::size_t n = legs.size();
  auto nudge = [&](std::size_t leg, bool at_start) {
    const auto& path = legs[leg];
    const Point x = at_start ? path.front() : path.back();
    const Point y = at_start ? path[1] : path[path.size() - 2];
    const double step = std::min(0.5 * clearance[leg], 1e-3 * Distance(x, y));
    return Lerp(x, y, step / Distance(x, y));
  };
  Curve curve;
  curve.id = curve_id;
  curve.kind = open ? CurveKind::kOpen : CurveKind::kClosed;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& path = legs[i];
    if (i == 0 && open) {
      curve.points.push_back(path.front());
    } else {
      curve.points.push_back(nudge(i, true));
    }
    curve.points.insert(curve.points.end(), path.begin() + 1, path.end() - 1);
    if (i + 1 == n && open) {
      curve.points.push_back(path.back());
    } else {
      curve.points.push_back(nudge(i, false));
    }
  }
  if (!open) curve.points.push_back(curve.points.front());
  return curve;
}

}  // namespace unpop
