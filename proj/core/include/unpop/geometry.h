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

#ifndef UNPOP_GEOMETRY_H_
#define UNPOP_GEOMETRY_H_

#include <optional>
#include <span>
#include <vector>

namespace unpop {

struct Point {
  double x = 0;
  double y = 0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

double Dot(Point a, Point b);
double Cross(Point a, Point b);
double Norm(Point a);
double Distance(Point a, Point b);
Point Lerp(Point a, Point b, double t);

// Twice the signed area of triangle abc; positive when counterclockwise.
double Orient(Point a, Point b, Point c);

double PointSegmentDistance(Point p, Point a, Point b);
double SegmentDistance(Point a, Point b, Point c, Point d);

// Transversal crossing of segments ab and cd strictly inside both; returns
// the parameters along ab and cd. Touching or collinear segments give
// nullopt.
struct SegmentHit {
  double t;
  double u;
  Point at;
};
std::optional<SegmentHit> ProperCrossing(Point a, Point b, Point c, Point d);

// Signed area of a closed polygon (last point joins the first).
double SignedArea(std::span<const Point> ring);

// Ray-casting point-in-polygon; points on the boundary give either answer.
bool InsideRing(Point p, std::span<const Point> ring);

// Length of a polyline and the point at a given arc-length fraction.
double PolylineLength(std::span<const Point> line);
Point PointAlong(std::span<const Point> line, double fraction);

}  // namespace unpop

#endif  // UNPOP_GEOMETRY_H_
