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

#include "unpop/arrangement.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "unpop/errors.h"

namespace unpop {
namespace {

std::string Str(int v) { return std::to_string(v); }

std::string CurveName(const Curve& c) { return "curve " + Str(c.id); }

struct Segment {
  int curve;
  int index;
  Point a;
  Point b;
};

struct Crossing {
  int seg_a;
  double t;
  int seg_b;
  double u;
  Point at;
};

// An event along a curve: a vertex at parameter (segment, t).
struct Event {
  int seg;
  double t;
  int vertex;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Unite(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

// Distance from p to the frame boundary (negative outside).
double FrameClearance(const Frame& f, Point p) {
  return std::min({p.x - f.xmin, f.xmax - p.x, p.y - f.ymin, f.ymax - p.y});
}

// Counterclockwise perimeter coordinate starting at (xmin, ymin).
double PerimeterPosition(const Frame& f, Point p, double eps) {
  const double w = f.xmax - f.xmin;
  const double h = f.ymax - f.ymin;
  if (std::abs(p.y - f.ymin) <= eps) return p.x - f.xmin;
  if (std::abs(p.x - f.xmax) <= eps) return w + (p.y - f.ymin);
  if (std::abs(p.y - f.ymax) <= eps) return w + h + (f.xmax - p.x);
  return 2 * w + h + (f.ymax - p.y);
}

std::vector<Point> Normalize(const Curve& c, double eps) {
  std::vector<Point> out;
  for (const Point& p : c.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidInput(CurveName(c) + " has a non-finite coordinate");
    }
    if (out.empty() || Distance(out.back(), p) > eps) out.push_back(p);
  }
  if (c.kind == CurveKind::kClosed) {
    if (out.size() < 2 || Distance(out.front(), out.back()) > eps) {
      throw InvalidInput(CurveName(c) +
                         " is closed but does not end at its first point");
    }
    out.back() = out.front();
    if (out.size() < 4) {
      throw InvalidInput(CurveName(c) +
                         " needs at least three distinct points");
    }
  } else if (out.size() < 2) {
    throw InvalidInput(CurveName(c) + " needs at least two distinct points");
  }
  return out;
}

}  // namespace

int Arrangement::CurveId(int edge) const {
  const int c = edges_[edge].curve;
  return c == kFrameCurve ? kFrameCurve : curves_[c].id;
}

int Arrangement::CurveIndexOfId(int id) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> Arrangement::CycleDarts(int cycle) const {
  std::vector<int> out;
  const int first = cycles_[cycle].first_dart;
  int d = first;
  do {
    out.push_back(d);
    d = darts_[d].next;
  } while (d != first);
  return out;
}

std::vector<Point> Arrangement::DartPolyline(int dart) const {
  std::vector<Point> line = edges_[EdgeOf(dart)].polyline;
  if (dart & 1) std::reverse(line.begin(), line.end());
  return line;
}

std::vector<Point> Arrangement::CycleRing(int cycle) const {
  std::vector<Point> ring;
  for (int d : CycleDarts(cycle)) {
    const auto line = DartPolyline(d);
    ring.insert(ring.end(), line.begin(), line.end() - 1);
  }
  return ring;
}

int Arrangement::LocatePoint(Point p) const {
  int best = -1;
  double best_area = 0;
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    if (cycles_[c].area <= 0) continue;
    if (best >= 0 && cycles_[c].area >= best_area) continue;
    if (InsideRing(p, rings_[c])) {
      best = static_cast<int>(c);
      best_area = cycles_[c].area;
    }
  }
  return best < 0 ? outer_face_ : cycles_[best].face;
}

bool Arrangement::EulerHolds() const {
  const long v = static_cast<long>(vertices_.size());
  const long e = static_cast<long>(edges_.size());
  const long f = static_cast<long>(faces_.size());
  return v - e + f == 1 + component_count_;
}

Arrangement Arrangement::Build(std::vector<Curve> curves, const Frame& frame,
                               const ArrangementOptions& options) {
  const double eps = options.epsilon;
  if (!(frame.xmax - frame.xmin > eps) || !(frame.ymax - frame.ymin > eps)) {
    throw InvalidInput("frame must have positive width and height");
  }
  {
    std::set<int> ids;
    for (const auto& c : curves) {
      if (!ids.insert(c.id).second) {
        throw InvalidInput("duplicate curve id " + Str(c.id));
      }
    }
  }

  Arrangement arr;
  arr.frame_ = frame;
  arr.options_ = options;
  for (auto& c : curves) c.points = Normalize(c, eps);
  arr.curves_ = std::move(curves);
  const auto& cs = arr.curves_;
  const int curve_count = static_cast<int>(cs.size());

  // Placement relative to the frame.
  for (const auto& c : cs) {
    const auto& pts = c.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double clear = FrameClearance(frame, pts[i]);
      const bool endpoint =
          c.kind == CurveKind::kOpen && (i == 0 || i + 1 == pts.size());
      if (endpoint) {
        if (std::abs(clear) > eps) {
          throw EndpointError(CurveName(c) +
                              " has an endpoint that is not on the frame");
        }
        continue;
      }
      if (clear < -eps) {
        throw InvalidInput(CurveName(c) + " leaves the frame");
      }
      if (clear <= eps) {
        throw SimplicityViolation(CurveName(c) + " touches the frame");
      }
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (FrameClearance(frame, Lerp(pts[i - 1], pts[i], 0.5)) <= eps) {
        throw SimplicityViolation(CurveName(c) + " runs along the frame");
      }
    }
  }

  // Segments and their pairwise crossings.
  std::vector<Segment> segs;
  std::vector<int> first_seg(curve_count + 1, 0);
  for (int c = 0; c < curve_count; ++c) {
    first_seg[c] = static_cast<int>(segs.size());
    const auto& pts = cs[c].points;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      segs.push_back({c, static_cast<int>(i - 1), pts[i - 1], pts[i]});
    }
  }
  first_seg[curve_count] = static_cast<int>(segs.size());
  auto adjacent = [&](const Segment& s, const Segment& t) {
    if (s.curve != t.curve) return false;
    const int n = first_seg[s.curve + 1] - first_seg[s.curve];
    const int d = std::abs(s.index - t.index);
    return d == 1 || (cs[s.curve].kind == CurveKind::kClosed && d == n - 1);
  };
  std::vector<Crossing> crossings;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& s = segs[i];
      const Segment& t = segs[j];
      if (adjacent(s, t)) {
        // Shared vertex; reject a fold back along the other segment.
        const Point shared = (s.b == t.a) ? s.b : s.a;
        const Point s_far = s.a == shared ? s.b : s.a;
        const Point t_far = t.a == shared ? t.b : t.a;
        if (PointSegmentDistance(s_far, t.a, t.b) <= eps ||
            PointSegmentDistance(t_far, s.a, s.b) <= eps) {
          throw SimplicityViolation(CurveName(cs[s.curve]) +
                                    " folds back on itself");
        }
        continue;
      }
      const double near =
          std::min({PointSegmentDistance(s.a, t.a, t.b),
                    PointSegmentDistance(s.b, t.a, t.b),
                    PointSegmentDistance(t.a, s.a, s.b),
                    PointSegmentDistance(t.b, s.a, s.b)});
      if (near <= eps) {
        throw SimplicityViolation(
            CurveName(cs[s.curve]) + " and " + CurveName(cs[t.curve]) +
            " touch, overlap or meet at a polyline vertex");
      }
      const auto hit = ProperCrossing(s.a, s.b, t.a, t.b);
      if (!hit) continue;
      if (s.curve == t.curve && !options.allow_self_intersecting) {
        throw SimplicityViolation(CurveName(cs[s.curve]) +
                                  " intersects itself");
      }
      crossings.push_back({static_cast<int>(i), hit->t, static_cast<int>(j),
                           hit->u, hit->at});
    }
  }
  {
    std::vector<std::vector<std::pair<double, Point>>> on_seg(segs.size());
    for (const auto& x : crossings) {
      on_seg[x.seg_a].push_back({x.t, x.at});
      on_seg[x.seg_b].push_back({x.u, x.at});
    }
    for (auto& list : on_seg) {
      std::sort(list.begin(), list.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 1; i < list.size(); ++i) {
        if (Distance(list[i - 1].second, list[i].second) <= eps) {
          throw SimplicityViolation("three curve pieces meet at one point");
        }
      }
    }
  }

  // Vertices in creation order: corners, attachments, crossings, anchors.
  std::vector<ArrVertex> raw;
  const Point corners[4] = {{frame.xmin, frame.ymin},
                            {frame.xmax, frame.ymin},
                            {frame.xmax, frame.ymax},
                            {frame.xmin, frame.ymax}};
  for (const Point& p : corners) raw.push_back({p, VertexKind::kFrameCorner});
  std::vector<std::pair<int, int>> attach(curve_count, {-1, -1});
  std::vector<std::pair<double, int>> frame_events;
  const double w = frame.xmax - frame.xmin;
  const double h = frame.ymax - frame.ymin;
  frame_events.push_back({0, 0});
  frame_events.push_back({w, 1});
  frame_events.push_back({w + h, 2});
  frame_events.push_back({2 * w + h, 3});
  for (int c = 0; c < curve_count; ++c) {
    if (cs[c].kind != CurveKind::kOpen) continue;
    for (int end = 0; end < 2; ++end) {
      const Point p = end == 0 ? cs[c].points.front() : cs[c].points.back();
      for (const Point& corner : corners) {
        if (Distance(p, corner) <= eps) {
          throw SimplicityViolation(CurveName(cs[c]) +
                                    " ends at a frame corner");
        }
      }
      const int id = static_cast<int>(raw.size());
      raw.push_back({p, VertexKind::kFrameAttachment});
      (end == 0 ? attach[c].first : attach[c].second) = id;
      frame_events.push_back({PerimeterPosition(frame, p, eps), id});
    }
  }
  std::vector<std::vector<Event>> events(curve_count);
  for (int c = 0; c < curve_count; ++c) {
    if (cs[c].kind == CurveKind::kOpen) {
      events[c].push_back({0, 0.0, attach[c].first});
      events[c].push_back({first_seg[c + 1] - first_seg[c] - 1, 1.0,
                           attach[c].second});
    }
  }
  for (const auto& x : crossings) {
    const int id = static_cast<int>(raw.size());
    raw.push_back({x.at, VertexKind::kCrossing});
    const Segment& s = segs[x.seg_a];
    const Segment& t = segs[x.seg_b];
    events[s.curve].push_back({s.index, x.t, id});
    events[t.curve].push_back({t.index, x.u, id});
  }
  for (int c = 0; c < curve_count; ++c) {
    if (cs[c].kind == CurveKind::kClosed && events[c].empty()) {
      const int id = static_cast<int>(raw.size());
      raw.push_back({cs[c].points.front(), VertexKind::kAnchor});
      events[c].push_back({0, 0.0, id});
    }
  }
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(raw[a].at.x, raw[a].at.y) <
           std::tie(raw[b].at.x, raw[b].at.y);
  });
  std::vector<int> rank(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i);
    arr.vertices_.push_back(raw[order[i]]);
  }

  // Edges along each curve, then along the frame.
  std::vector<std::pair<int, int>> ends;  // (origin, destination) per edge
  arr.curve_edges_.assign(curve_count, {});
  for (int c = 0; c < curve_count; ++c) {
    auto& ev = events[c];
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
      return std::tie(a.seg, a.t) < std::tie(b.seg, b.t);
    });
    const auto& pts = cs[c].points;
    const int nseg = static_cast<int>(pts.size()) - 1;
    const bool closed = cs[c].kind == CurveKind::kClosed;
    const int pieces = closed ? static_cast<int>(ev.size())
                              : static_cast<int>(ev.size()) - 1;
    for (int i = 0; i < pieces; ++i) {
      const Event& a = ev[i];
      const Event& b = ev[(i + 1) % ev.size()];
      ArrEdge edge{c, {}};
      edge.polyline.push_back(raw[a.vertex].at);
      // Polyline vertices strictly after a and up to b's segment start.
      int last = b.seg;
      if (closed && (i + 1 == static_cast<int>(ev.size()))) last += nseg;
      if (closed && ev.size() == 1) last = a.seg + nseg;
      for (int s = a.seg + 1; s <= last; ++s) {
        edge.polyline.push_back(pts[s % nseg]);
      }
      edge.polyline.push_back(raw[b.vertex].at);
      // Anchors sit on a polyline vertex; drop the doubled point.
      edge.polyline.erase(
          std::unique(edge.polyline.begin(), edge.polyline.end()),
          edge.polyline.end());
      if (edge.polyline.size() < 2) {
        throw SimplicityViolation(CurveName(cs[c]) + " has a degenerate edge");
      }
      arr.curve_edges_[c].push_back(static_cast<int>(arr.edges_.size()));
      arr.edges_.push_back(std::move(edge));
      ends.push_back({rank[a.vertex], rank[b.vertex]});
    }
  }
  std::sort(frame_events.begin(), frame_events.end());
  for (std::size_t i = 1; i < frame_events.size(); ++i) {
    if (frame_events[i].first - frame_events[i - 1].first <= eps) {
      throw SimplicityViolation("two curve endpoints share a frame point");
    }
  }
  for (std::size_t i = 0; i < frame_events.size(); ++i) {
    const int a = frame_events[i].second;
    const int b = frame_events[(i + 1) % frame_events.size()].second;
    arr.edges_.push_back({kFrameCurve, {raw[a].at, raw[b].at}});
    ends.push_back({rank[a], rank[b]});
  }

  // Darts and the rotation system.
  const int edge_count = static_cast<int>(arr.edges_.size());
  const int vertex_count = static_cast<int>(arr.vertices_.size());
  arr.darts_.assign(2 * edge_count, Dart{-1, -1, -1, -1});
  std::vector<std::vector<std::pair<double, int>>> around(vertex_count);
  for (int e = 0; e < edge_count; ++e) {
    const auto& line = arr.edges_[e].polyline;
    arr.darts_[2 * e].origin = ends[e].first;
    arr.darts_[2 * e + 1].origin = ends[e].second;
    const Point out0 = line[1] - line[0];
    const Point out1 = line[line.size() - 2] - line.back();
    around[ends[e].first].push_back({std::atan2(out0.y, out0.x), 2 * e});
    around[ends[e].second].push_back({std::atan2(out1.y, out1.x), 2 * e + 1});
  }
  std::vector<int> cw_neighbor(2 * edge_count);
  for (auto& list : around) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::size_t prev = (i + list.size() - 1) % list.size();
      cw_neighbor[list[i].second] = list[prev].second;
    }
  }
  for (int d = 0; d < 2 * edge_count; ++d) {
    const int next = cw_neighbor[Twin(d)];
    arr.darts_[d].next = next;
    arr.darts_[next].prev = d;
  }

  // Boundary cycles and components.
  UnionFind uf(vertex_count);
  for (int e = 0; e < edge_count; ++e) uf.Unite(ends[e].first, ends[e].second);
  std::map<int, int> component_id;
  for (int v = 0; v < vertex_count; ++v) {
    component_id.emplace(uf.Find(v), static_cast<int>(component_id.size()));
  }
  arr.component_count_ = static_cast<int>(component_id.size());
  for (int d = 0; d < 2 * edge_count; ++d) {
    if (arr.darts_[d].cycle >= 0) continue;
    const int cycle = static_cast<int>(arr.cycles_.size());
    int x = d;
    do {
      arr.darts_[x].cycle = cycle;
      x = arr.darts_[x].next;
    } while (x != d);
    arr.cycles_.push_back(
        {d, 0, -1, component_id[uf.Find(arr.darts_[d].origin)]});
    arr.rings_.push_back(arr.CycleRing(cycle));
    arr.cycles_.back().area = SignedArea(arr.rings_.back());
  }
  const int frame_component = component_id[uf.Find(rank[0])];

  // Faces: one per positive cycle, the outer face, and holes attached to the
  // smallest enclosing positive cycle of another component.
  std::vector<int> owner(arr.cycles_.size(), -1);  // cycle -> positive cycle
  int outer_cycle = -1;
  for (std::size_t c = 0; c < arr.cycles_.size(); ++c) {
    const auto& cyc = arr.cycles_[c];
    if (cyc.area > 0) {
      owner[c] = static_cast<int>(c);
      continue;
    }
    if (cyc.component == frame_component) {
      outer_cycle = static_cast<int>(c);
      continue;
    }
    const Point probe = arr.vertices_[arr.darts_[cyc.first_dart].origin].at;
    double best_area = 0;
    for (std::size_t o = 0; o < arr.cycles_.size(); ++o) {
      const auto& cand = arr.cycles_[o];
      if (cand.area <= 0 || cand.component == cyc.component) continue;
      if (owner[c] >= 0 && cand.area >= best_area) continue;
      if (InsideRing(probe, arr.rings_[o])) {
        owner[c] = static_cast<int>(o);
        best_area = cand.area;
      }
    }
    if (owner[c] < 0) {
      throw SimplicityViolation("a curve component lies outside the frame");
    }
  }
  // Group and order faces by smallest dart.
  std::map<int, std::vector<int>> groups;  // key: representative cycle
  for (std::size_t c = 0; c < arr.cycles_.size(); ++c) {
    const int key = static_cast<int>(c) == outer_cycle ? -1 : owner[c];
    groups[key].push_back(static_cast<int>(c));
  }
  struct PendingFace {
    int min_dart;
    bool outer;
    std::vector<int> cycles;
  };
  std::vector<PendingFace> pending;
  for (auto& [key, list] : groups) {
    int min_dart = 2 * edge_count;
    for (int c : list) {
      for (int d : arr.CycleDarts(c)) min_dart = std::min(min_dart, d);
    }
    // Outer boundary first, then holes.
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
      return arr.cycles_[a].area > arr.cycles_[b].area;
    });
    pending.push_back({min_dart, key == -1, list});
  }
  std::sort(pending.begin(), pending.end(),
            [](const auto& a, const auto& b) { return a.min_dart < b.min_dart; });
  for (auto& p : pending) {
    const int f = static_cast<int>(arr.faces_.size());
    if (p.outer) arr.outer_face_ = f;
    for (int c : p.cycles) arr.cycles_[c].face = f;
    arr.faces_.push_back({std::move(p.cycles), p.outer});
  }
  if (!arr.EulerHolds()) {
    throw SimplicityViolation("arrangement violates the Euler relation");
  }
  return arr;
}

bool PopularFaceReport::IsDuplicate(int edge) const {
  for (const auto& inc : incidence) {
    if (inc.edges.size() >= 2 &&
        std::binary_search(inc.edges.begin(), inc.edges.end(), edge)) {
      return true;
    }
  }
  return false;
}

int PopularFaceReport::MaxIncidence() const {
  std::size_t best = 0;
  for (const auto& inc : incidence) best = std::max(best, inc.edges.size());
  return static_cast<int>(best);
}

PopularFaceReport FaceReport(const Arrangement& arr, int face) {
  PopularFaceReport report;
  report.face = face;
  std::map<int, std::set<int>> by_curve;  // curve index -> edges
  for (int c : arr.faces()[face].cycles) {
    for (int d : arr.CycleDarts(c)) {
      const int e = Arrangement::EdgeOf(d);
      if (!arr.IsFrameEdge(e)) by_curve[arr.edges()[e].curve].insert(e);
    }
  }
  for (const auto& [curve, edges] : by_curve) {
    CurveIncidence inc{arr.curves()[curve].id, {edges.begin(), edges.end()}};
    if (inc.edges.size() > 2) report.resolvable = false;
    report.incidence.push_back(std::move(inc));
  }
  std::sort(report.incidence.begin(), report.incidence.end(),
            [](const auto& a, const auto& b) { return a.curve_id < b.curve_id; });
  report.curtains.clear();
  for (const auto& inc : report.incidence) {
    if (inc.edges.size() == 2) report.curtains.push_back({inc.edges[0], inc.edges[1]});
  }
  return report;
}

std::vector<PopularFaceReport> PopularFaces(const Arrangement& arr) {
  std::vector<PopularFaceReport> out;
  for (int f = 0; f < static_cast<int>(arr.faces().size()); ++f) {
    if (arr.faces()[f].outer) continue;
    auto report = FaceReport(arr, f);
    if (report.MaxIncidence() >= 2) out.push_back(std::move(report));
  }
  return out;
}

}  // namespace unpop
