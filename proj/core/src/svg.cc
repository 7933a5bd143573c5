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

#include "unpop/svg.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace unpop {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string PathData(const std::vector<Point>& pts, bool close) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 ? "M" : " L") + Num(pts[i].x) + " " + Num(pts[i].y);
  }
  if (close) d += " Z";
  return d;
}

Point EdgeMiddle(const Arrangement& arr, int edge) {
  return PointAlong(arr.edges()[edge].polyline, 0.5);
}

}  // namespace

std::string RenderSvg(const Arrangement& arr,
                      const std::vector<PopularFaceReport>& reports,
                      const Curve* inserted) {
  const Frame& f = arr.frame();
  const double w = f.xmax - f.xmin;
  const double h = f.ymax - f.ymin;
  const double pad = 0.03 * std::max(w, h);
  const double stroke = 0.004 * std::max(w, h);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << Num(f.xmin - pad) << " " << Num(-f.ymax - pad) << " "
      << Num(w + 2 * pad) << " " << Num(h + 2 * pad)
      << "\" width=\"600\" height=\"" << Num(600 * (h + 2 * pad) / (w + 2 * pad))
      << "\">\n"
      << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n";

  for (const auto& r : reports) {
    std::string d;
    for (int c : arr.faces()[r.face].cycles) {
      d += PathData(arr.CycleRing(c), true) + " ";
    }
    out << "<path class=\"popular\" d=\"" << d
        << "\" fill=\"#f6c7c7\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
  }
  out << "<rect x=\"" << Num(f.xmin) << "\" y=\"" << Num(f.ymin)
      << "\" width=\"" << Num(w) << "\" height=\"" << Num(h)
      << "\" stroke=\"black\" stroke-width=\"" << Num(2 * stroke) << "\"/>\n";
  for (std::size_t i = 0; i < arr.curves().size(); ++i) {
    const Curve& c = arr.curves()[i];
    out << "<path class=\"curve\" data-id=\"" << c.id << "\" d=\""
        << PathData(c.points, false) << "\" stroke=\"" << kPalette[i % 8]
        << "\" stroke-width=\"" << Num(stroke) << "\"/>\n";
  }
  for (const auto& r : reports) {
    for (const auto& [d1, d2] : r.curtains) {
      const Point a = EdgeMiddle(arr, d1);
      const Point b = EdgeMiddle(arr, d2);
      out << "<line class=\"curtain\" x1=\"" << Num(a.x) << "\" y1=\""
          << Num(a.y) << "\" x2=\"" << Num(b.x) << "\" y2=\"" << Num(b.y)
          << "\" stroke=\"red\" stroke-dasharray=\"" << Num(4 * stroke)
          << "\" stroke-width=\"" << Num(stroke) << "\"/>\n";
    }
  }
  if (inserted != nullptr) {
    out << "<path class=\"inserted\" d=\"" << PathData(inserted->points, false)
        << "\" stroke=\"#2ca02c\" stroke-width=\"" << Num(2 * stroke)
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace unpop
