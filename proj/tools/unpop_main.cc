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

// Command-line front end: analyze, resolve, solve-cycle and gen-euler.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unpop/arrangement.h"
#include "unpop/arrangement_io.h"
#include "unpop/constrained_graph.h"
#include "unpop/errors.h"
#include "unpop/gadgets.h"
#include "unpop/pipeline.h"
#include "unpop/solver.h"
#include "unpop/svg.h"

namespace {

using Json = nlohmann::ordered_json;
using namespace unpop;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kInternal = 3 };

struct Flags {
  std::string input;
  std::string svg;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int field_bits = 32;
  int repeats = 3;
  std::string variant = "compact";
  bool poly_space = false;
  bool frame_endpoints = true;
  bool allow_self_intersecting = false;
  bool timings = false;
  double scale = 16;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::uint64_t Seed(const Flags& f) {
  if (f.seed_given) return f.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Arrangement LoadArrangement(const Flags& f) {
  const auto input = ArrangementInputFromJson(ParseJsonText(ReadFile(f.input)));
  ArrangementOptions options;
  options.allow_self_intersecting = f.allow_self_intersecting;
  return Arrangement::Build(input.curves, input.frame, options);
}

void Emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int Analyze(const Flags& f) {
  const Arrangement arr = LoadArrangement(f);
  const auto reports = PopularFaces(arr);
  Emit(AnalysisToJson(arr, reports));
  if (!f.svg.empty()) WriteFile(f.svg, RenderSvg(arr, reports));
  return kOk;
}

int Resolve(const Flags& f) {
  const Arrangement arr = LoadArrangement(f);
  ResolveOptions options;
  options.variant =
      f.variant == "full" ? DualVariant::kFull : DualVariant::kCompact;
  options.frame_endpoints = f.frame_endpoints;
  options.poly_space = f.poly_space;
  options.field_bits = f.field_bits;
  options.repetitions = f.repeats;
  options.seed = Seed(f);
  const RunResult r = unpop::Resolve(arr, options);

  Json doc;
  doc["status"] = RunStatusName(r.status);
  if (!r.message.empty()) doc["message"] = r.message;
  if (r.face >= 0) doc["face"] = r.face;
  doc["popular_before"] = r.popular_before;
  doc["popular_after"] = r.popular_after;
  doc["crossings"] = r.crossings;
  doc["dual"] = {{"nodes", r.dual_nodes}, {"edges", r.dual_edges}};
  doc["seed"] = r.seed;
  doc["field_bits"] = r.field_bits;
  doc["repetitions_used"] = r.repetitions_used;
  if (r.curve) doc["curve"] = CurveToJson(*r.curve);
  if (f.timings) {
    Json t = Json::object();
    for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
    doc["timings_ms"] = std::move(t);
  }
  Emit(doc);

  if (r.status == RunStatus::kResolved) {
    if (!f.out.empty()) {
      ArrangementInput augmented{arr.frame(), arr.curves()};
      augmented.curves.push_back(*r.curve);
      WriteFile(f.out, ArrangementInputToJson(augmented).dump(2) + "\n");
    }
    if (!f.svg.empty()) {
      WriteFile(f.svg, RenderSvg(arr, PopularFaces(arr), &*r.curve));
    }
  } else if (!f.svg.empty()) {
    WriteFile(f.svg, RenderSvg(arr, PopularFaces(arr)));
  }
  switch (r.status) {
    case RunStatus::kResolved: return kOk;
    case RunStatus::kInfeasible:
    case RunStatus::kUnresolvableFace: return kNegative;
    case RunStatus::kError: return kInternal;
  }
  return kInternal;
}

int SolveCycle(const Flags& f) {
  const ConstrainedGraph g = GraphFromJson(ParseJsonText(ReadFile(f.input)));
  SolverConfig config;
  config.field_bits = f.field_bits;
  config.repetitions = f.repeats;
  config.seed = Seed(f);
  config.restricted = g.has_marks();
  config.variant =
      f.poly_space ? SolverVariant::kPolySpace : SolverVariant::kStandard;
  ValidateGraph(g, config.restricted);
  const SolveResult r = unpop::Solve(g, config);

  Json doc;
  doc["feasible"] = r.detection.feasible;
  doc["length"] = r.detection.feasible ? r.detection.length : 0;
  Json cycle = Json::array();
  Json chosen = Json::object();
  if (r.solution) {
    for (int e : r.solution->edges) cycle.push_back(e);
    for (std::size_t i = 0; i < r.solution->chosen.size(); ++i) {
      chosen[std::to_string(i)] = r.solution->chosen[i];
    }
  }
  doc["cycle"] = std::move(cycle);
  doc["chosen"] = std::move(chosen);
  doc["seed"] = config.seed;
  doc["repetitions_used"] = r.detection.repetitions_used;
  Emit(doc);
  return r.detection.feasible ? kOk : kNegative;
}

int GenEuler(const Flags& f) {
  const PlaneGraph g = PlaneGraphFromJson(ParseJsonText(ReadFile(f.input)));
  const ReductionInstance inst = GenReduction(g, f.scale);
  const Json arrangement = ArrangementInputToJson(inst.arrangement);
  if (f.out.empty()) {
    Emit(arrangement);
  } else {
    WriteFile(f.out, arrangement.dump(2) + "\n");
    Json doc;
    doc["curves"] = inst.arrangement.curves.size();
    doc["edge_curves"] = inst.edge_curves;
    Emit(doc);
  }
  if (!f.svg.empty()) {
    const auto arr =
        Arrangement::Build(inst.arrangement.curves, inst.arrangement.frame);
    WriteFile(f.svg, RenderSvg(arr, PopularFaces(arr)));
  }
  return kOk;
}

void AddSolverFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--field-bits", f.field_bits, "GF(2^s) size")
      ->check(CLI::IsMember({8, 16, 32}));
  cmd->add_option_function<std::uint64_t>(
      "--seed",
      [&f](std::uint64_t s) {
        f.seed = s;
        f.seed_given = true;
      },
      "Random seed (default: from entropy; always echoed)");
  cmd->add_option("--repeats", f.repeats, "Weight draws W per detection")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--poly-space", f.poly_space, "Polynomial-space solver");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remove popular faces from a curve arrangement with one curve"};
  app.require_subcommand(1);
  Flags f;

  auto* analyze = app.add_subcommand("analyze", "List faces and popular faces");
  analyze->add_option("file", f.input, "Arrangement JSON")->required();
  analyze->add_option("--svg", f.svg, "Write an SVG drawing");
  analyze->add_flag("--allow-self-intersecting", f.allow_self_intersecting);

  auto* resolve = app.add_subcommand("resolve", "Insert one curve if possible");
  resolve->add_option("file", f.input, "Arrangement JSON")->required();
  resolve->add_option("--svg", f.svg, "Write an SVG drawing");
  resolve->add_option("--out", f.out, "Write the augmented arrangement");
  resolve->add_option("--variant", f.variant, "Dual construction")
      ->check(CLI::IsMember({"compact", "full"}));
  resolve->add_flag("--frame-endpoints,!--no-frame-endpoints",
                    f.frame_endpoints,
                    "Insert an open curve (default) or a closed one");
  resolve->add_flag("--allow-self-intersecting", f.allow_self_intersecting);
  resolve->add_flag("--timings", f.timings, "Report per-stage timings");
  AddSolverFlags(resolve, f);

  auto* solve = app.add_subcommand("solve-cycle",
                                   "Edge-set constrained shortest cycle");
  solve->add_option("file", f.input, "ConstrainedGraph JSON")->required();
  AddSolverFlags(solve, f);

  auto* gen = app.add_subcommand("gen-euler",
                                 "Arrangement for a 4-regular plane graph");
  gen->add_option("file", f.input, "PlaneGraph JSON")->required();
  gen->add_option("--out", f.out, "Write the arrangement here");
  gen->add_option("--svg", f.svg, "Write an SVG drawing");
  gen->add_option("--scale", f.scale, "Plane units per grid unit")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return Analyze(f);
    if (*resolve) return Resolve(f);
    if (*solve) return SolveCycle(f);
    if (*gen) return GenEuler(f);
  } catch (const RetryExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const EmbedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
