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
#include <limits>
#include <tuple>

#include "unpop/arrangement.h"
#include "unpop/errors.h"

namespace unpop {
namespace {

struct Hit {
  int seg;
  double t;
  int edge;
};

int NearestFrameEdge(const Arrangement& arr, Point p) {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int e = 0; e < static_cast<int>(arr.edges().size()); ++e) {
    if (!arr.IsFrameEdge(e)) continue;
    const auto& line = arr.edges()[e].polyline;
    const double d = PointSegmentDistance(p, line.front(), line.back());
    if (d < best_d) {
      best_d = d;
      best = e;
    }
  }
  return best;
}

// Edge order along the boundary cycle of `face` holding `edge`, or empty.
std::vector<int> CycleContaining(const Arrangement& arr, int face, int edge) {
  for (int c : arr.faces()[face].cycles) {
    std::vector<int> order;
    bool found = false;
    for (int d : arr.CycleDarts(c)) {
      order.push_back(Arrangement::EdgeOf(d));
      found = found || order.back() == edge;
    }
    if (found) return order;
  }
  return {};
}

}  // namespace

std::vector<CurveVisit> TraceCurve(const Arrangement& arr, const Curve& ell) {
  const double eps = arr.options().epsilon;
  std::vector<Point> pts;
  for (const Point& p : ell.points) {
    if (pts.empty() || Distance(pts.back(), p) > eps) pts.push_back(p);
  }
  const bool closed = ell.kind == CurveKind::kClosed;
  if (closed && pts.size() >= 2 && Distance(pts.front(), pts.back()) <= eps) {
    pts.back() = pts.front();
  }
  if (pts.size() < 2) throw InvalidInput("curve needs two distinct points");
  const int nseg = static_cast<int>(pts.size()) - 1;

  std::vector<Hit> hits;
  for (int i = 0; i < nseg; ++i) {
    const Point a = pts[i];
    const Point b = pts[i + 1];
    for (int e = 0; e < static_cast<int>(arr.edges().size()); ++e) {
      const auto& line = arr.edges()[e].polyline;
      const bool frame = arr.IsFrameEdge(e);
      for (std::size_t j = 1; j < line.size(); ++j) {
        const Point c = line[j - 1];
        const Point d = line[j];
        double near = std::min(PointSegmentDistance(c, a, b),
                               PointSegmentDistance(d, a, b));
        for (int end = 0; end < 2; ++end) {
          const bool tip = !closed && ((end == 0 && i == 0) ||
                                       (end == 1 && i == nseg - 1));
          if (tip && frame) continue;  // endpoints sit on the frame
          near = std::min(near, PointSegmentDistance(end == 0 ? a : b, c, d));
        }
        if (near <= eps) {
          throw SimplicityViolation(
              "curve touches the arrangement without crossing it");
        }
        if (const auto hit = ProperCrossing(a, b, c, d)) {
          hits.push_back({i, hit->t, e});
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    return std::tie(x.seg, x.t) < std::tie(y.seg, y.t);
  });

  auto sample = [&](const Hit& from, const Hit& to) {
    if (from.seg == to.seg && from.t < to.t) {
      return Lerp(pts[from.seg], pts[from.seg + 1], (from.t + to.t) / 2);
    }
    return pts[(from.seg + 1) % nseg];
  };
  std::vector<CurveVisit> visits;
  if (!closed) {
    std::vector<Hit> events;
    events.push_back({0, 0.0, NearestFrameEdge(arr, pts.front())});
    events.insert(events.end(), hits.begin(), hits.end());
    events.push_back({nseg - 1, 1.0, NearestFrameEdge(arr, pts.back())});
    for (std::size_t i = 1; i < events.size(); ++i) {
      const Point p = sample(events[i - 1], events[i]);
      visits.push_back({arr.LocatePoint(p), events[i - 1].edge, events[i].edge});
    }
    return visits;
  }
  if (hits.empty()) {
    visits.push_back({arr.LocatePoint(Lerp(pts[0], pts[1], 0.5)), -1, -1});
    return visits;
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const Hit& from = hits[i];
    const Hit& to = hits[(i + 1) % hits.size()];
    const Point p = hits.size() == 1 ? pts[(from.seg + 1) % nseg]
                                     : sample(from, to);
    visits.push_back({arr.LocatePoint(p), from.edge, to.edge});
  }
  return visits;
}

bool SeparatesCurtains(const Arrangement& arr, const PopularFaceReport& report,
                       int entry_edge, int exit_edge) {
  for (const auto& [d1, d2] : report.curtains) {
    const auto order = CycleContaining(arr, report.face, d1);
    auto pos = [&](int e) {
      const auto it = std::find(order.begin(), order.end(), e);
      return it == order.end() ? -1 : static_cast<int>(it - order.begin());
    };
    const int p1 = pos(d1);
    const int p2 = pos(d2);
    const int pa = pos(entry_edge);
    const int pb = pos(exit_edge);
    if (p2 < 0 || pa < 0 || pb < 0) return false;
    const int lo = std::min(p1, p2);
    const int hi = std::max(p1, p2);
    const bool a_in = lo < pa && pa < hi;
    const bool b_in = lo < pb && pb < hi;
    if (a_in == b_in) return false;
  }
  return true;
}

PassageCheck CheckPassage(const Arrangement& arr,
                          const PopularFaceReport& report, const Curve& ell) {
  if (!report.resolvable) {
    return {false, "a curve bounds the face with more than two edges"};
  }
  const auto visits = TraceCurve(arr, ell);
  const CurveVisit* only = nullptr;
  int count = 0;
  for (const auto& v : visits) {
    if (v.face == report.face) {
      ++count;
      only = &v;
    }
  }
  if (count != 1) {
    return {false, "face visited " + std::to_string(count) + " times"};
  }
  if (only->entry_edge < 0) return {false, "curve never crosses the boundary"};
  if (report.IsDuplicate(only->entry_edge)) {
    return {false, "curve enters through a duplicate edge"};
  }
  if (report.IsDuplicate(only->exit_edge)) {
    return {false, "curve exits through a duplicate edge"};
  }
  if (!SeparatesCurtains(arr, report, only->entry_edge, only->exit_edge)) {
    return {false, "passage leaves a pair of duplicate edges unseparated"};
  }
  return {true, {}};
}

bool CheckPassageConditions(const Arrangement& arr,
                            const PopularFaceReport& report,
                            const Curve& ell) {
  return CheckPassage(arr, report, ell).ok;
}

bool VerifyResolved(const Arrangement& arr, const Curve& ell) {
  std::vector<Curve> curves = arr.curves();
  Curve added = ell;
  for (const auto& c : curves) added.id = std::max(added.id, c.id + 1);
  if (std::none_of(curves.begin(), curves.end(),
                   [&](const Curve& c) { return c.id == ell.id; })) {
    added.id = ell.id;
  }
  curves.push_back(std::move(added));
  const Arrangement next =
      Arrangement::Build(std::move(curves), arr.frame(), arr.options());
  return PopularFaces(next).empty();
}

}  // namespace unpop
