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

#ifndef UNPOP_ARRANGEMENT_H_
#define UNPOP_ARRANGEMENT_H_

#include <string>
#include <utility>
#include <vector>

#include "unpop/geometry.h"

namespace unpop {

// Curve index carried by frame edges.
inline constexpr int kFrameCurve = -1;

enum class CurveKind { kOpen, kClosed };

// Polyline curve. Open curves start and end on the frame; closed curves
// repeat their first point at the end.
struct Curve {
  int id = 0;
  CurveKind kind = CurveKind::kOpen;
  std::vector<Point> points;
};

struct Frame {
  double xmin = 0;
  double ymin = 0;
  double xmax = 1;
  double ymax = 1;
};

struct ArrangementOptions {
  double epsilon = 1e-9;
  bool allow_self_intersecting = false;
};

enum class VertexKind { kFrameCorner, kFrameAttachment, kCrossing, kAnchor };

struct ArrVertex {
  Point at;
  VertexKind kind;
};

// Undirected arrangement edge. Dart 2e runs along the polyline, dart 2e+1
// against it. For curve edges the polyline follows the curve's direction.
struct ArrEdge {
  int curve;  // index into curves(), or kFrameCurve
  std::vector<Point> polyline;
};

struct Dart {
  int origin;
  int next;  // next dart around the face on its left
  int prev;
  int cycle;
};

// A closed walk of darts. Positive area means the walk bounds its face from
// outside (counterclockwise); negative area means it is a hole boundary or
// the frame seen from outside.
struct BoundaryCycle {
  int first_dart;
  double area;
  int face;
  int component;
};

struct Face {
  std::vector<int> cycles;  // for inner faces cycles[0] is the outer boundary
  bool outer = false;       // the unbounded face outside the frame
};

// Planar subdivision of the frame by the curves, as a dart-based
// combinatorial map. Vertices are sorted by (x, y) and then by creation
// order; faces by their smallest dart id.
class Arrangement {
 public:
  // Throws InvalidInput, EndpointError or SimplicityViolation.
  static Arrangement Build(std::vector<Curve> curves, const Frame& frame,
                           const ArrangementOptions& options = {});

  const std::vector<Curve>& curves() const { return curves_; }
  const Frame& frame() const { return frame_; }
  const ArrangementOptions& options() const { return options_; }
  const std::vector<ArrVertex>& vertices() const { return vertices_; }
  const std::vector<ArrEdge>& edges() const { return edges_; }
  const std::vector<Dart>& darts() const { return darts_; }
  const std::vector<BoundaryCycle>& cycles() const { return cycles_; }
  const std::vector<Face>& faces() const { return faces_; }
  int outer_face() const { return outer_face_; }
  int component_count() const { return component_count_; }

  static int Twin(int dart) { return dart ^ 1; }
  static int EdgeOf(int dart) { return dart >> 1; }
  int Destination(int dart) const { return darts_[dart ^ 1].origin; }
  int DartFace(int dart) const { return cycles_[darts_[dart].cycle].face; }
  bool IsFrameEdge(int edge) const { return edges_[edge].curve == kFrameCurve; }
  // Caller-facing id of an edge's curve, or kFrameCurve.
  int CurveId(int edge) const;
  int CurveIndexOfId(int id) const;

  std::vector<int> CycleDarts(int cycle) const;
  // Polygon traced by a cycle, in dart direction.
  std::vector<Point> CycleRing(int cycle) const;
  // Points of a dart's polyline in dart direction.
  std::vector<Point> DartPolyline(int dart) const;
  // Edges of one curve in curve order.
  const std::vector<int>& CurveEdges(int curve_index) const {
    return curve_edges_[curve_index];
  }

  // Face containing p; the outer face for points outside the frame. Points
  // on edges give an arbitrary incident face.
  int LocatePoint(Point p) const;

  // V - E + F == 1 + C.
  bool EulerHolds() const;

 private:
  std::vector<Curve> curves_;
  Frame frame_;
  ArrangementOptions options_;
  std::vector<ArrVertex> vertices_;
  std::vector<ArrEdge> edges_;
  std::vector<Dart> darts_;
  std::vector<BoundaryCycle> cycles_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> curve_edges_;
  std::vector<std::vector<Point>> rings_;  // per cycle
  int outer_face_ = -1;
  int component_count_ = 0;
};

struct CurveIncidence {
  int curve_id;
  std::vector<int> edges;  // distinct boundary edges of that curve, sorted
};

// A face some curve bounds with two or more edges.
struct PopularFaceReport {
  int face = -1;
  std::vector<CurveIncidence> incidence;  // every non-frame curve on the face
  std::vector<std::pair<int, int>> curtains;  // curves with exactly 2 edges
  bool resolvable = true;                     // no curve has more than 2

  bool IsDuplicate(int edge) const;
  int MaxIncidence() const;
};

PopularFaceReport FaceReport(const Arrangement& arr, int face);
// Reports for every popular face, by face id.
std::vector<PopularFaceReport> PopularFaces(const Arrangement& arr);

// Passage of a curve through one face between two crossings. Entry and exit
// are arrangement edges; for an open curve the frame edges holding its
// endpoints. -1 for a closed curve that crosses nothing.
struct CurveVisit {
  int face;
  int entry_edge;
  int exit_edge;
};

// Splits `ell` at its crossings with `arr` and locates every piece. Throws
// SimplicityViolation if ell touches the arrangement without crossing it.
std::vector<CurveVisit> TraceCurve(const Arrangement& arr, const Curve& ell);

struct PassageCheck {
  bool ok = false;
  std::string reason;
};

// Whether ell passes the popular face described by `report` such that the
// face splits into non-popular parts: the face is visited exactly once,
// entry and exit are not duplicate edges, and every curtain is separated.
PassageCheck CheckPassage(const Arrangement& arr,
                          const PopularFaceReport& report, const Curve& ell);
bool CheckPassageConditions(const Arrangement& arr,
                            const PopularFaceReport& report,
                            const Curve& ell);

// Whether two boundary edges of a face lie on one boundary cycle and on
// different sides of every curtain. Shared by the dual construction.
bool SeparatesCurtains(const Arrangement& arr, const PopularFaceReport& report,
                       int entry_edge, int exit_edge);

// Rebuilds with ell added and checks that no face is popular. Throws
// SimplicityViolation if the augmented arrangement is not simple.
bool VerifyResolved(const Arrangement& arr, const Curve& ell);

}  // namespace unpop

#endif  // UNPOP_ARRANGEMENT_H_
