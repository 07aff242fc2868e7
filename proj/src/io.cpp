// Copyright 2026 The mdmin Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdmin/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mdmin {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

double number_field(const Json& j, const char* key, const std::string& where) {
  return number(field(j, key, where), where + "." + key);
}

double number_or(const Json& j, const char* key, double fallback, const std::string& where) {
  return j.contains(key) ? number(j.at(key), where + "." + key) : fallback;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

Point point_at_path(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
  return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

std::vector<Point> points_at_path(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_at_path(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json points_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (Point p : pts) a.push_back(to_json(p));
  return a;
}

std::vector<double> numbers_at_path(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Json to_json(Point p) { return Json::array({p.x, p.y}); }

Json to_json(const Network& n) {
  Json edges = Json::array();
  for (const Edge& e : n.edges()) edges.push_back(Json::array({e.first, e.second}));
  return Json{{"vertices", points_json(n.vertices())}, {"edges", edges}};
}

Json to_json(const CompactSetModel& m) {
  Json j{{"type", kind_name(m.kind)}};
  switch (m.kind) {
    case ModelKind::kPoints:
      j["points"] = points_json(m.points);
      break;
    case ModelKind::kCircle:
      j["center"] = to_json(m.center);
      j["radius"] = m.radius;
      break;
    case ModelKind::kRectangle:
      j["corner"] = to_json(m.corner);
      j["width"] = m.width;
      j["height"] = m.height;
      break;
    case ModelKind::kStadium:
      j["center"] = to_json(m.center);
      j["radius"] = m.radius;
      j["core_length"] = m.core_length;
      break;
    case ModelKind::kPolyline:
      j["points"] = points_json(m.points);
      j["closed"] = m.closed;
      break;
  }
  return j;
}

Json to_json(const EnergyReport& e) {
  return Json{{"value", e.value}, {"argmax", e.argmax}, {"nearest", points_json(e.nearest)}, {"mesh", e.mesh}};
}

Json to_json(const CheckReport& c) {
  Json items = Json::array();
  for (const auto& it : c.items) {
    items.push_back(Json{{"name", it.name},
                         {"passed", it.passed},
                         {"measured", it.measured},
                         {"threshold", it.threshold},
                         {"tolerance", it.tolerance},
                         {"location", it.location}});
  }
  return Json{{"passed", c.passed()}, {"branch_count", c.branch_count}, {"items", items}};
}

Json to_json(const BoundReport& b) {
  Json inputs = Json::object();
  for (const auto& [k, v] : b.inputs) inputs[k] = v;
  return Json{{"value", b.value}, {"formula", b.formula}, {"inputs", inputs}};
}

Json to_json(const EnergeticClassification& c) {
  Json pts = Json::array();
  for (const auto& e : c.points) {
    pts.push_back(Json{{"x", to_json(e.x)},
                       {"isolated", e.isolated},
                       {"vertex", e.vertex},
                       {"edge", e.edge},
                       {"param", e.param},
                       {"witnesses", points_json(e.witnesses)}});
  }
  return Json{{"points", pts},
              {"steiner_vertex", c.steiner_vertex},
              {"steiner_edge", c.steiner_edge},
              {"r", c.r},
              {"tol", c.tol},
              {"mesh", c.mesh},
              {"isolation_radius", c.isolation_radius}};
}

Json to_json(const SolveReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  Json co = Json::array();
  for (const auto& n : r.co_optimal) co.push_back(to_json(n));
  return Json{{"mode", r.mode},
              {"network", to_json(r.network)},
              {"length", r.length},
              {"r", r.r},
              {"energy", to_json(r.energy)},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"lower_bound_gap", r.lower_bound_gap},
              {"bounds", bounds},
              {"checks", to_json(r.checks)},
              {"seed", r.seed},
              {"schedule", r.schedule},
              {"seed_kind", r.seed_kind},
              {"co_optimal", co},
              {"objective", r.objective}};
}

Json to_json(const ConstructionResult& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = std::isfinite(v) ? Json(v) : Json(nullptr);
  Json j{{"name", c.name},
         {"network", to_json(c.network)},
         {"length", length(c.network)},
         {"params", params},
         {"claimed_r", c.claimed_r},
         {"witnesses", points_json(c.witnesses)}};
  j["m"] = c.m ? to_json(*c.m) : Json(nullptr);
  return j;
}

Json to_json(const SolverOptions& o) {
  Json j{{"schedule", o.schedule},
         {"relative_schedule", o.relative_schedule},
         {"seed", o.seed},
         {"restarts", o.restarts},
         {"oracle_seed", o.oracle_seed},
         {"topology_cap", o.topology_cap},
         {"co_optimal_tol", o.co_optimal_tol},
         {"max_rounds", o.max_rounds},
         {"max_polish_passes", o.max_polish_passes},
         {"rel_tol", o.rel_tol},
         {"refine_factor", o.refine_factor},
         {"refine_tol", o.refine_tol},
         {"max_refinements", o.max_refinements},
         {"split_length", o.split_length}};
  j["filled_volume"] = o.filled_volume ? Json(*o.filled_volume) : Json(nullptr);
  return j;
}

Json to_json(const ProblemFile& p) {
  Json j{{"m", to_json(p.m)}, {"solver", to_json(p.options)}};
  switch (p.mode) {
    case SolveMode::kDual:
      j["mode"] = "dual";
      j["r"] = p.r;
      break;
    case SolveMode::kPrimal:
      j["mode"] = "primal";
      j["l"] = p.l;
      break;
    case SolveMode::kPenalized:
      j["mode"] = "penalized";
      j["lambda"] = p.lambda;
      j["penalty"] = p.penalty.mode == PenaltyMode::kHinge ? "hinge" : "plain";
      if (p.penalty.mode == PenaltyMode::kHinge) j["l"] = p.penalty.l;
      j["eps"] = p.eps;
      break;
  }
  Json out = Json::object();
  if (!p.report_path.empty()) out["report"] = p.report_path;
  if (!p.svg_path.empty()) out["svg"] = p.svg_path;
  if (!out.empty()) j["output"] = out;
  return j;
}

Point point_from_json(const Json& j) { return point_at_path(j, "point"); }

Network network_from_json(const Json& j) {
  const std::string where = "network";
  const auto verts = points_at_path(field(j, "vertices", where), where + ".vertices");
  const Json& ej = field(j, "edges", where);
  if (!ej.is_array()) fail(where + ".edges", "expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string w = where + ".edges[" + std::to_string(i) + "]";
    if (!ej[i].is_array() || ej[i].size() != 2) fail(w, "expected [i, j]");
    const long a = integer(ej[i][0], w), b = integer(ej[i][1], w);
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= verts.size() || static_cast<std::size_t>(b) >= verts.size()) {
      fail(w, "vertex index out of range");
    }
    edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  try {
    return Network(verts, edges);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

namespace {

CompactSetModel build_model(const Json& j, const std::string& where) {
  const std::string type = text(field(j, "type", where), where + ".type");
  if (type == "points") {
    return CompactSetModel::finite(points_at_path(field(j, "points", where), where + ".points"));
  }
  if (type == "circle") {
    return CompactSetModel::circle(point_at_path(field(j, "center", where), where + ".center"),
                                   number_field(j, "radius", where));
  }
  if (type == "rectangle") {
    const Point c = j.contains("corner") ? point_at_path(j.at("corner"), where + ".corner") : Point{0, 0};
    return CompactSetModel::rectangle(c, number_field(j, "width", where), number_field(j, "height", where));
  }
  if (type == "stadium") {
    const Point c = j.contains("center") ? point_at_path(j.at("center"), where + ".center") : Point{0, 0};
    return CompactSetModel::stadium(c, number_field(j, "radius", where), number_field(j, "core_length", where));
  }
  if (type == "polyline") {
    bool closed = false;
    if (j.contains("closed")) {
      if (!j.at("closed").is_boolean()) fail(where + ".closed", "expected a boolean");
      closed = j.at("closed").get<bool>();
    }
    return CompactSetModel::polyline(points_at_path(field(j, "points", where), where + ".points"), closed);
  }
  fail(where + ".type", "unknown model type '" + type + "'");
}

}  // namespace

CompactSetModel model_from_json(const Json& j) {
  const std::string where = "m";
  try {
    CompactSetModel m = build_model(j, where);
    m.validate();
    return m;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

SolverOptions options_from_json(const Json& j) {
  const std::string where = "solver";
  SolverOptions o;
  if (j.is_null()) return o;
  if (!j.is_object()) fail(where, "expected an object");
  static const char* kKnown[] = {"schedule", "relative_schedule", "seed", "restarts", "oracle_seed",
                                 "topology_cap", "co_optimal_tol", "max_rounds", "max_polish_passes",
                                 "rel_tol", "refine_factor", "refine_tol", "max_refinements",
                                 "split_length", "filled_volume"};
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* n : kKnown) known = known || k == n;
    if (!known) fail(where, "unknown option '" + k + "'");
  }
  if (j.contains("schedule")) o.schedule = numbers_at_path(j.at("schedule"), where + ".schedule");
  if (j.contains("relative_schedule")) {
    o.relative_schedule = numbers_at_path(j.at("relative_schedule"), where + ".relative_schedule");
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) fail(where + ".seed", "expected a non-negative integer");
    o.seed = j.at("seed").get<std::uint64_t>();
  }
  auto int_opt = [&](const char* key, int& dst, int lo) {
    if (!j.contains(key)) return;
    const long v = integer(j.at(key), where + "." + key);
    if (v < lo || v > 1000000) fail(where + "." + key, "out of range");
    dst = static_cast<int>(v);
  };
  int_opt("restarts", o.restarts, 1);
  int_opt("topology_cap", o.topology_cap, 1);
  int_opt("max_rounds", o.max_rounds, 1);
  int_opt("max_polish_passes", o.max_polish_passes, 1);
  int_opt("max_refinements", o.max_refinements, 0);
  if (j.contains("oracle_seed")) {
    if (!j.at("oracle_seed").is_boolean()) fail(where + ".oracle_seed", "expected a boolean");
    o.oracle_seed = j.at("oracle_seed").get<bool>();
  }
  o.co_optimal_tol = number_or(j, "co_optimal_tol", o.co_optimal_tol, where);
  o.rel_tol = number_or(j, "rel_tol", o.rel_tol, where);
  o.refine_factor = number_or(j, "refine_factor", o.refine_factor, where);
  o.refine_tol = number_or(j, "refine_tol", o.refine_tol, where);
  o.split_length = number_or(j, "split_length", o.split_length, where);
  if (!(o.split_length > 0.0)) fail(where + ".split_length", "must be positive");
  if (j.contains("filled_volume") && !j.at("filled_volume").is_null()) {
    o.filled_volume = number(j.at("filled_volume"), where + ".filled_volume");
  }
  return o;
}

ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object()) fail("problem", "expected an object");
  ProblemFile p;
  p.m = model_from_json(field(j, "m", "problem"));
  const std::string ms = text(field(j, "mode", "problem"), "problem.mode");
  if (ms == "dual") {
    p.mode = SolveMode::kDual;
    p.r = number_field(j, "r", "problem");
    if (!(p.r >= 0.0)) fail("problem.r", "must be non-negative");
  } else if (ms == "primal") {
    p.mode = SolveMode::kPrimal;
    p.l = number_field(j, "l", "problem");
    if (!(p.l >= 0.0)) fail("problem.l", "must be non-negative");
  } else if (ms == "penalized") {
    p.mode = SolveMode::kPenalized;
    p.lambda = number_field(j, "lambda", "problem");
    if (!(p.lambda > 0.0)) fail("problem.lambda", "must be positive");
    p.eps = number_field(j, "eps", "problem");
    if (!(p.eps > 0.0)) fail("problem.eps", "must be positive");
    const std::string pen = j.contains("penalty") ? text(j.at("penalty"), "problem.penalty") : "plain";
    if (pen == "plain") {
      p.penalty.mode = PenaltyMode::kPlain;
    } else if (pen == "hinge") {
      p.penalty.mode = PenaltyMode::kHinge;
      p.penalty.l = number_field(j, "l", "problem");
      if (!(p.penalty.l >= 0.0)) fail("problem.l", "must be non-negative");
    } else {
      fail("problem.penalty", "expected 'plain' or 'hinge'");
    }
  } else {
    fail("problem.mode", "expected 'dual', 'primal' or 'penalized'");
  }
  p.options = options_from_json(j.contains("solver") ? j.at("solver") : Json(nullptr));
  if (j.contains("output")) {
    const Json& out = j.at("output");
    if (!out.is_object()) fail("problem.output", "expected an object");
    if (out.contains("report")) p.report_path = text(out.at("report"), "problem.output.report");
    if (out.contains("svg")) p.svg_path = text(out.at("svg"), "problem.output.svg");
  }
  return p;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path + "'");
}

}  // namespace mdmin
