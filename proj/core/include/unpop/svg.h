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

#ifndef UNPOP_SVG_H_
#define UNPOP_SVG_H_

#include <string>
#include <vector>

#include "unpop/arrangement.h"

namespace unpop {

// SVG 1.1 drawing of an arrangement: curves as colored paths, popular faces
// shaded, each curtain as a red chord between its two edges, and an
// optional inserted curve in green.
std::string RenderSvg(const Arrangement& arr,
                      const std::vector<PopularFaceReport>& reports,
                      const Curve* inserted = nullptr);

}  // namespace unpop

#endif  // UNPOP_SVG_H_
