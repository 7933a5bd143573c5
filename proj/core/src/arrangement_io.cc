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

#include "unpop/arrangement_io.h"

#include <algorithm>
#include <set>

#include "unpop/errors.h"

namespace unpop {
namespace {

using Json = nlohmann::ordered_json;

double Number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected number for ") + what);
  return j.get<double>();
}

}  // namespace

Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line =
        1 + std::count(text.begin(), text.begin() + (at > 0 ? at - 1 : 0), '\n');
    const std::size_t start = text.rfind('\n', at > 0 ? at - 1 : 0);
    const std::size_t column =
        start == std::string::npos ? at : at - start - 1;
    throw ParseError("invalid JSON at line " + std::to_string(line) +
                     ", column " + std::to_string(column));
  }
}

Curve CurveFromJson(const Json& c) {
  if (!c.is_object()) throw ParseError("each curve must be an object");
  Curve curve;
  if (!c.contains("id") || !c["id"].is_number_integer()) {
    throw ParseError("curve needs an integer \"id\"");
  }
  curve.id = c["id"].get<int>();
  const std::string kind = c.value("kind", std::string("open"));
  if (kind == "open") {
    curve.kind = CurveKind::kOpen;
  } else if (kind == "closed") {
    curve.kind = CurveKind::kClosed;
  } else {
    throw ParseError("curve " + std::to_string(curve.id) +
                     ": kind must be \"open\" or \"closed\"");
  }
  if (!c.contains("points") || !c["points"].is_array()) {
    throw ParseError("curve " + std::to_string(curve.id) +
                     " needs a \"points\" array");
  }
  for (const auto& p : c["points"]) {
    if (!p.is_array() || p.size() != 2) {
      throw ParseError("points must be [x, y] pairs");
    }
    curve.points.push_back({Number(p[0], "x"), Number(p[1], "y")});
  }
  return curve;
}

ArrangementInput ArrangementInputFromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError("arrangement must be an object");
  if (!doc.contains("frame") || !doc["frame"].is_object()) {
    throw ParseError("missing \"frame\" object");
  }
  ArrangementInput in;
  const auto& f = doc["frame"];
  for (const char* key : {"xmin", "ymin", "xmax", "ymax"}) {
    if (!f.contains(key)) throw ParseError(std::string("frame lacks ") + key);
  }
  in.frame = {Number(f["xmin"], "xmin"), Number(f["ymin"], "ymin"),
              Number(f["xmax"], "xmax"), Number(f["ymax"], "ymax")};
  if (doc.contains("curves")) {
    if (!doc["curves"].is_array()) throw ParseError("\"curves\" must be an array");
    for (const auto& c : doc["curves"]) in.curves.push_back(CurveFromJson(c));
  }
  return in;
}

Json CurveToJson(const Curve& curve) {
  Json points = Json::array();
  for (const Point& p : curve.points) points.push_back({p.x, p.y});
  return {{"id", curve.id},
          {"kind", curve.kind == CurveKind::kOpen ? "open" : "closed"},
          {"points", std::move(points)}};
}

Json ArrangementInputToJson(const ArrangementInput& input) {
  Json curves = Json::array();
  for (const auto& c : input.curves) curves.push_back(CurveToJson(c));
  return {{"frame",
           {{"xmin", input.frame.xmin},
            {"ymin", input.frame.ymin},
            {"xmax", input.frame.xmax},
            {"ymax", input.frame.ymax}}},
          {"curves", std::move(curves)}};
}

Json ReportToJson(const PopularFaceReport& report) {
  Json incidence = Json::array();
  for (const auto& inc : report.incidence) {
    incidence.push_back({{"curve", inc.curve_id},
                         {"count", inc.edges.size()},
                         {"edges", inc.edges}});
  }
  Json curtains = Json::array();
  for (const auto& [a, b] : report.curtains) curtains.push_back({a, b});
  return {{"face", report.face},
          {"incidence", std::move(incidence)},
          {"curtains", std::move(curtains)},
          {"resolvable", report.resolvable}};
}

Json AnalysisToJson(const Arrangement& arr,
                    const std::vector<PopularFaceReport>& reports) {
  std::set<int> popular;
  for (const auto& r : reports) popular.insert(r.face);
  Json edges = Json::array();
  for (int e = 0; e < static_cast<int>(arr.edges().size()); ++e) {
    const int c = arr.CurveId(e);
    edges.push_back({{"id", e},
                     {"curve", c == kFrameCurve ? Json("frame") : Json(c)}});
  }
  Json faces = Json::array();
  for (int f = 0; f < static_cast<int>(arr.faces().size()); ++f) {
    std::set<int> boundary;
    for (int c : arr.faces()[f].cycles) {
      for (int d : arr.CycleDarts(c)) boundary.insert(Arrangement::EdgeOf(d));
    }
    faces.push_back({{"id", f},
                     {"outer", arr.faces()[f].outer},
                     {"holes", arr.faces()[f].outer
                                   ? 0
                                   : arr.faces()[f].cycles.size() - 1},
                     {"edges", Json(std::vector<int>(boundary.begin(),
                                                     boundary.end()))},
                     {"popular", popular.count(f) != 0}});
  }
  Json list = Json::array();
  bool resolvable = true;
  for (const auto& r : reports) {
    list.push_back(ReportToJson(r));
    resolvable = resolvable && r.resolvable;
  }
  return {{"vertices", arr.vertices().size()},
          {"edge_count", arr.edges().size()},
          {"face_count", arr.faces().size()},
          {"components", arr.component_count()},
          {"edges", std::move(edges)},
          {"faces", std::move(faces)},
          {"popular_count", reports.size()},
          {"resolvable", resolvable},
          {"popular_faces", std::move(list)}};
}

}  // namespace unpop
