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

#include "unpop/gadgets.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "unpop/arrangement.h"
#include "unpop/errors.h"

namespace unpop {
namespace {

// All offsets are in units of g = scale / 16. Seen from a vertex along one
// of its edges, a tube spans 4 units to the left of the edge and 2 to the
// right, and its cap ends 3 units behind the vertex. Rotating this end by
// 90 degrees gives the neighbouring end, and the two overlap in one lens.
constexpr double kWide = 4;
constexpr double kNarrow = 2;
constexpr double kCapBack = 3;
// Where two tubes of one edge are linked, the later tube starts kLink units
// before the link point and the earlier one ends kLink units after it.
constexpr double kLink = 3;

struct Section {
  double left;
  double right;
};

struct Step {
  double at;  // arc length along the route
  Section to;
};

Point Dir(Point a, Point b) {
  const Point d = b - a;
  return (1.0 / Norm(d)) * d;
}

Point LeftOf(Point d) { return {-d.y, d.x}; }

double ArcLength(const std::vector<Point>& route) {
  double total = 0;
  for (std::size_t i = 1; i < route.size(); ++i) {
    total += Distance(route[i - 1], route[i]);
  }
  return total;
}

Point PointAt(const std::vector<Point>& route, double s) {
  for (std::size_t i = 1; i < route.size(); ++i) {
    const double len = Distance(route[i - 1], route[i]);
    if (s <= len) return route[i - 1] + s * Dir(route[i - 1], route[i]);
    s -= len;
  }
  return route.back();
}

// The part of `route` between two arc lengths.
std::vector<Point> Cut(const std::vector<Point>& route, double from,
                       double to) {
  std::vector<Point> out{PointAt(route, from)};
  double s = 0;
  for (std::size_t i = 1; i + 1 < route.size(); ++i) {
    s += Distance(route[i - 1], route[i]);
    if (from < s && s < to) out.push_back(route[i]);
  }
  out.push_back(PointAt(route, to));
  return out;
}

// Boundary of the region swept along an axis-parallel route by a cross
// section that changes only at `steps`, closed with the first point
// repeated. Steps must lie strictly inside segments.
std::vector<Point> TubeOutline(const std::vector<Point>& route, Section start,
                               const std::vector<Step>& steps) {
  std::vector<Point> left;
  std::vector<Point> right;
  Section sec = start;
  std::size_t next = 0;
  double s0 = 0;
  for (std::size_t i = 1; i < route.size(); ++i) {
    const Point a = route[i - 1];
    const Point d = Dir(a, route[i]);
    const Point n = LeftOf(d);
    const double len = Distance(a, route[i]);
    if (i == 1) {
      left.push_back(a + sec.left * n);
      right.push_back(a - sec.right * n);
    } else {
      const Point m = LeftOf(Dir(route[i - 2], a));
      left.push_back(a + sec.left * m + sec.left * n);
      right.push_back(a - sec.right * m - sec.right * n);
    }
    for (; next < steps.size() && steps[next].at < s0 + len; ++next) {
      const Point p = a + (steps[next].at - s0) * d;
      const Section to = steps[next].to;
      left.push_back(p + sec.left * n);
      left.push_back(p + to.left * n);
      right.push_back(p - sec.right * n);
      right.push_back(p - to.right * n);
      sec = to;
    }
    s0 += len;
  }
  const Point n = LeftOf(Dir(route[route.size() - 2], route.back()));
  left.push_back(route.back() + sec.left * n);
  right.push_back(route.back() - sec.right * n);
  std::vector<Point> ring = left;
  ring.insert(ring.end(), right.rbegin(), right.rend());
  ring.push_back(ring.front());
  return ring;
}

bool NearInteger(double x) { return std::abs(x - std::round(x)) < 1e-9; }

void CheckDrawing(const PlaneGraph& g) {
  if (!g.Connected()) throw InvalidInput("graph is not connected");
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    if (g.Degree(v) != 4) {
      throw InvalidInput("vertex " + std::to_string(v) +
                         " does not have degree 4");
    }
  }
  if (!g.EmbeddingConsistent()) {
    throw InvalidInput("rotation system is not a plane embedding");
  }
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const auto route = g.Route(e);
    for (std::size_t i = 0; i < route.size(); ++i) {
      if (!NearInteger(route[i].x) || !NearInteger(route[i].y)) {
        throw InvalidInput("edge " + std::to_string(e) +
                           " leaves the integer grid");
      }
      if (i == 0) continue;
      const Point d = route[i] - route[i - 1];
      const bool axis = (d.x == 0) != (d.y == 0);
      if (!axis || Norm(d) < 1) {
        throw InvalidInput("edge " + std::to_string(e) +
                           " is not drawn with axis-parallel unit segments");
      }
    }
  }
}

// Arc-length start and length of the longest segment, first on ties.
std::pair<double, double> LongestSegment(const std::vector<Point>& route) {
  double best = -1;
  double start = 0;
  double s = 0;
  for (std::size_t i = 1; i < route.size(); ++i) {
    const double len = Distance(route[i - 1], route[i]);
    if (len > best) {
      best = len;
      start = s;
    }
    s += len;
  }
  return {start, best};
}

}  // namespace

ReductionInstance GenReduction(const PlaneGraph& graph, double scale) {
  if (!(scale > 0)) throw InvalidInput("scale must be positive");
  CheckDrawing(graph);
  const double g = scale / 16;
  const Section out_end{kWide * g, kNarrow * g};  // leaving u
  const Section in_end{kNarrow * g, kWide * g};   // arriving at v

  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto& e : graph.edges()) {
    ++multiplicity[std::minmax(e.u, e.v)];
  }

  ReductionInstance inst;
  inst.scale = scale;
  auto emit = [&](const std::vector<Point>& ring) {
    Curve c;
    c.id = static_cast<int>(inst.arrangement.curves.size()) + 1;
    c.kind = CurveKind::kClosed;
    c.points = ring;
    inst.arrangement.curves.push_back(std::move(c));
    return inst.arrangement.curves.back().id;
  };
  // Curve pairs that are meant to cross, twice per entry. All four ends at
  // a vertex meet pairwise.
  std::map<std::pair<int, int>, int> expected;

  for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e) {
    const auto& edge = graph.edges()[e];
    auto route = graph.Route(e);
    for (Point& p : route) p = scale * p;
    route.front() = route.front() - kCapBack * g * Dir(route[0], route[1]);
    route.back() = route.back() +
                   kCapBack * g * Dir(route[route.size() - 2], route.back());
    const double total = ArcLength(route);
    const auto [seg, len] = LongestSegment(route);
    auto& ids = inst.edge_curves.emplace_back();
    const double grid_len = len / scale;
    if (edge.u == edge.v) {
      if (grid_len < 2) {
        throw InvalidInput("loop " + std::to_string(e) +
                           " needs a straight run of two grid units");
      }
      const double j1 = seg + std::floor(len / 3 / g) * g;
      const double j2 = seg + std::floor(2 * len / 3 / g) * g;
      ids.push_back(emit(TubeOutline(Cut(route, 0, j1 + kLink * g), out_end, {})));
      ids.push_back(emit(TubeOutline(Cut(route, j1 - kLink * g, j2 + kLink * g),
                                     {3 * g, 1 * g}, {})));
      ids.push_back(emit(TubeOutline(Cut(route, j2 - kLink * g, total),
                                     {2 * g, 0}, {{8 * g, in_end}})));
    } else if (multiplicity[std::minmax(edge.u, edge.v)] > 1) {
      if (grid_len < 2) {
        throw InvalidInput("parallel edge " + std::to_string(e) +
                           " needs a straight run of two grid units");
      }
      const double j = seg + std::floor(len / 2 / g) * g;
      ids.push_back(emit(TubeOutline(Cut(route, 0, j + kLink * g), out_end, {})));
      ids.push_back(emit(TubeOutline(Cut(route, j - kLink * g, total),
                                     {3 * g, 1 * g}, {{9 * g, in_end}})));
    } else {
      const double j = seg + std::floor(len / 2 / g) * g;
      ids.push_back(emit(TubeOutline(route, out_end, {{j, in_end}})));
    }
    for (std::size_t i = 1; i < ids.size(); ++i) {
      ++expected[std::minmax(ids[i - 1], ids[i])];
    }
  }
  auto end_curve = [&](EdgeEnd end) {
    const auto& ids = inst.edge_curves[end.edge];
    return end.side == 0 ? ids.front() : ids.back();
  };
  for (const auto& v : graph.vertices()) {
    for (std::size_t i = 0; i < v.rotation.size(); ++i) {
      for (std::size_t j = i + 1; j < v.rotation.size(); ++j) {
        ++expected[std::minmax(end_curve(v.rotation[i]),
                               end_curve(v.rotation[j]))];
      }
    }
  }

  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
  bool first = true;
  for (const auto& c : inst.arrangement.curves) {
    for (const Point& p : c.points) {
      xmin = first ? p.x : std::min(xmin, p.x);
      xmax = first ? p.x : std::max(xmax, p.x);
      ymin = first ? p.y : std::min(ymin, p.y);
      ymax = first ? p.y : std::max(ymax, p.y);
      first = false;
    }
  }
  inst.arrangement.frame = {xmin - 2 * scale, ymin - 2 * scale,
                            xmax + 2 * scale, ymax + 2 * scale};

  const auto& curves = inst.arrangement.curves;
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      int hits = 0;
      for (std::size_t i = 1; i < curves[a].points.size(); ++i) {
        for (std::size_t j = 1; j < curves[b].points.size(); ++j) {
          if (ProperCrossing(curves[a].points[i - 1], curves[a].points[i],
                             curves[b].points[j - 1], curves[b].points[j])) {
            ++hits;
          }
        }
      }
      const auto it = expected.find({curves[a].id, curves[b].id});
      const int want = it == expected.end() ? 0 : 2 * it->second;
      if (hits != want) {
        throw EmbedError("tubes " + std::to_string(curves[a].id) + " and " +
                         std::to_string(curves[b].id) + " cross " +
                         std::to_string(hits) + " times instead of " +
                         std::to_string(want) + "; increase the spacing");
      }
    }
  }
  try {
    Arrangement::Build(inst.arrangement.curves, inst.arrangement.frame);
  } catch (const SimplicityViolation& e) {
    throw EmbedError(std::string("generated arrangement is not simple: ") +
                     e.what());
  }
  return inst;
}

std::optional<std::vector<EdgeEnd>> ReadEulerCycle(
    const PlaneGraph& graph, const ReductionInstance& inst, const Curve& ell) {
  const Arrangement arr = Arrangement::Build(inst.arrangement.curves,
                                             inst.arrangement.frame);
  std::map<int, std::pair<int, int>> tube_of;  // curve id -> (edge, index)
  for (int e = 0; e < static_cast<int>(inst.edge_curves.size()); ++e) {
    for (int i = 0; i < static_cast<int>(inst.edge_curves[e].size()); ++i) {
      tube_of[inst.edge_curves[e][i]] = {e, i};
    }
  }
  std::map<int, int> corridor;  // face -> curve id
  for (const auto& r : PopularFaces(arr)) {
    if (r.curtains.size() != 1) return std::nullopt;
    corridor[r.face] = arr.CurveId(r.curtains[0].first);
  }
  struct Pass {
    int edge;
    int index;
    int entry;
  };
  std::vector<Pass> passes;
  for (const auto& v : TraceCurve(arr, ell)) {
    const auto it = corridor.find(v.face);
    if (it == corridor.end()) continue;
    const auto [e, i] = tube_of.at(it->second);
    passes.push_back({e, i, v.entry_edge});
  }
  if (passes.empty()) return std::nullopt;
  // Start at a run boundary so that no edge wraps around the end.
  std::size_t start = 0;
  while (start < passes.size() &&
         passes[start].edge == passes[(start + passes.size() - 1) %
                                      passes.size()].edge) {
    ++start;
  }
  if (start == passes.size()) start = 0;
  std::rotate(passes.begin(), passes.begin() + start, passes.end());

  std::vector<EdgeEnd> cycle;
  std::vector<char> seen(graph.edges().size(), 0);
  for (std::size_t i = 0; i < passes.size();) {
    const int e = passes[i].edge;
    std::size_t j = i;
    while (j < passes.size() && passes[j].edge == e) ++j;
    const int tubes = static_cast<int>(inst.edge_curves[e].size());
    if (seen[e]++ || static_cast<int>(j - i) != tubes) return std::nullopt;
    int side;
    if (tubes > 1) {
      side = passes[i].index == 0 ? 0 : 1;
    } else {
      const auto& line = arr.edges()[passes[i].entry].polyline;
      const Point mid = PointAlong(line, 0.5);
      const auto& ge = graph.edges()[e];
      const double du = Distance(mid, inst.scale * graph.vertices()[ge.u].at);
      const double dv = Distance(mid, inst.scale * graph.vertices()[ge.v].at);
      side = du < dv ? 0 : 1;
    }
    cycle.push_back({e, side});
    i = j;
  }
  if (cycle.size() != graph.edges().size()) return std::nullopt;
  return cycle;
}

}  // namespace unpop
