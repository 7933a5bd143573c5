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

#include "unpop/geometry.h"

#include <algorithm>
#include <cmath>

namespace unpop {

double Dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double Cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double Norm(Point a) { return std::hypot(a.x, a.y); }
double Distance(Point a, Point b) { return Norm(a - b); }
Point Lerp(Point a, Point b, double t) { return a + t * (b - a); }

double Orient(Point a, Point b, Point c) { return Cross(b - a, c - a); }

double PointSegmentDistance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = Dot(ab, ab);
  if (len2 == 0) return Distance(p, a);
  const double t = std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
  return Distance(p, Lerp(a, b, t));
}

double SegmentDistance(Point a, Point b, Point c, Point d) {
  if (ProperCrossing(a, b, c, d)) return 0;
  return std::min({PointSegmentDistance(a, c, d), PointSegmentDistance(b, c, d),
                   PointSegmentDistance(c, a, b),
                   PointSegmentDistance(d, a, b)});
}

std::optional<SegmentHit> ProperCrossing(Point a, Point b, Point c, Point d) {
  const double o1 = Orient(a, b, c);
  const double o2 = Orient(a, b, d);
  const double o3 = Orient(c, d, a);
  const double o4 = Orient(c, d, b);
  if (!((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0))) return std::nullopt;
  if (!((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) return std::nullopt;
  const double t = o3 / (o3 - o4);
  const double u = o1 / (o1 - o2);
  return SegmentHit{t, u, Lerp(a, b, t)};
}

double SignedArea(std::span<const Point> ring) {
  double twice = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    twice += Cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return twice / 2;
}

bool InsideRing(Point p, std::span<const Point> ring) {
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point a = ring[i];
    const Point b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double PolylineLength(std::span<const Point> line) {
  double len = 0;
  for (std::size_t i = 1; i < line.size(); ++i) {
    len += Distance(line[i - 1], line[i]);
  }
  return len;
}

Point PointAlong(std::span<const Point> line, double fraction) {
  double remaining = PolylineLength(line) * fraction;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const double seg = Distance(line[i - 1], line[i]);
    if (remaining <= seg && seg > 0) {
      return Lerp(line[i - 1], line[i], remaining / seg);
    }
    remaining -= seg;
  }
  return line.back();
}

}  // namespace unpop
