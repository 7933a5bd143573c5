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

#ifndef UNPOP_ARRANGEMENT_IO_H_
#define UNPOP_ARRANGEMENT_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unpop/arrangement.h"

namespace unpop {

// Contents of an arrangement file:
//   { "frame": {"xmin","ymin","xmax","ymax"},
//     "curves": [ {"id", "kind": "open"|"closed", "points": [[x,y],...]} ] }
struct ArrangementInput {
  Frame frame;
  std::vector<Curve> curves;
};

// Parses JSON text; syntax errors become ParseError naming line and column.
nlohmann::ordered_json ParseJsonText(const std::string& text);

ArrangementInput ArrangementInputFromJson(const nlohmann::ordered_json& doc);
nlohmann::ordered_json ArrangementInputToJson(const ArrangementInput& input);
nlohmann::ordered_json CurveToJson(const Curve& curve);
Curve CurveFromJson(const nlohmann::ordered_json& doc);

nlohmann::ordered_json ReportToJson(const PopularFaceReport& report);
// Face listing plus the popular-face reports.
nlohmann::ordered_json AnalysisToJson(const Arrangement& arr,
                                      const std::vector<PopularFaceReport>&
                                          reports);

}  // namespace unpop

#endif  // UNPOP_ARRANGEMENT_IO_H_
