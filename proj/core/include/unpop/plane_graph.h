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

#ifndef UNPOP_PLANE_GRAPH_H_
#define UNPOP_PLANE_GRAPH_H_

#include <vector>

#include <nlohmann/json.hpp>

#include "unpop/geometry.h"

namespace unpop {

// One end of an edge: side 0 sits at edge.u, side 1 at edge.v. As a dart it
// names the traversal that leaves through this end.
struct EdgeEnd {
  int edge = 0;
  int side = 0;

  EdgeEnd Opposite() const { return {edge, 1 - side}; }
  friend bool operator==(EdgeEnd, EdgeEnd) = default;
};

struct PlaneVertex {
  Point at;
  std::vector<EdgeEnd> rotation;  // counterclockwise
};

// Drawn as the polyline u, via..., v.
struct PlaneEdge {
  int u = 0;
  int v = 0;
  std::vector<Point> via;
};

// Multigraph with a rotation system. Rotations left empty are derived from
// the drawing, from the direction in which each edge leaves its vertex.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // Throws InvalidInput on bad indices or a rotation that does not list each
  // incident end exactly once. With `check_drawing` false the rotations are
  // taken as given and the coordinates are ignored.
  PlaneGraph(std::vector<PlaneVertex> vertices, std::vector<PlaneEdge> edges,
             bool check_drawing = true);

  const std::vector<PlaneVertex>& vertices() const { return vertices_; }
  const std::vector<PlaneEdge>& edges() const { return edges_; }
  int VertexOf(EdgeEnd end) const;
  int Degree(int v) const;
  // u, via..., v.
  std::vector<Point> Route(int edge) const;
  // Unit-free direction in which the edge leaves through `end`.
  Point Heading(EdgeEnd end) const;
  // Next end counterclockwise around the end's vertex, and the previous one.
  EdgeEnd RotationNext(EdgeEnd end) const;
  EdgeEnd RotationPrev(EdgeEnd end) const;

  // Faces of the rotation system as dart cycles, each face on the left.
  std::vector<std::vector<EdgeEnd>> Faces() const;
  bool Connected() const;
  // V - E + F == 2 for a connected graph.
  bool EmbeddingConsistent() const;

 private:
  std::vector<PlaneVertex> vertices_;
  std::vector<PlaneEdge> edges_;
  std::vector<std::vector<int>> slot_;  // [edge][side] -> position in rotation
};

// { "vertices": [{"x", "y", "rotation"?: [edge | [edge, side], ...]}],
//   "edges": [{"u", "v", "via"?: [[x, y], ...]}] }
// Optional "id" fields must equal the array position.
PlaneGraph PlaneGraphFromJson(const nlohmann::ordered_json& doc);
nlohmann::ordered_json PlaneGraphToJson(const PlaneGraph& graph);

}  // namespace unpop

#endif  // UNPOP_PLANE_GRAPH_H_
