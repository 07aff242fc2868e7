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

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdmin/bounds.hpp"
#include "mdmin/constructions.hpp"
#include "mdmin/io.hpp"
#include "mdmin/regularity.hpp"
#include "mdmin/render.hpp"
#include "mdmin/solver.hpp"

namespace {

using namespace mdmin;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotConverged = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    double x, y;
    char tail;
    if (std::sscanf(item.c_str(), " %lf , %lf %c", &x, &y, &tail) != 2) {
      throw InputError("cannot parse point '" + item + "' (expected x,y)");
    }
    out.push_back({x, y});
  }
  return out;
}

struct SolveArgs {
  std::string problem, report, svg;
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;
};

int run_solve(const SolveArgs& a) {
  ProblemFile p = problem_from_json(read_json_file(a.problem));
  if (a.seed) p.options.seed = *a.seed;
  if (a.restarts) p.options.restarts = *a.restarts;
  if (!a.report.empty()) p.report_path = a.report;
  if (!a.svg.empty()) p.svg_path = a.svg;
  SolveReport rep;
  double r_draw = 0.0;
  switch (p.mode) {
    case SolveMode::kDual:
      rep = p.m.kind == ModelKind::kPoints && p.m.points.size() <= static_cast<std::size_t>(p.options.topology_cap) &&
                    p.m.points.size() >= 2
                ? solve_finite(p.m.points, p.r, p.options)
                : solve_dual(p.m, p.r, p.options);
      r_draw = p.r;
      break;
    case SolveMode::kPrimal:
      rep = solve_primal(p.m, p.l, p.options);
      r_draw = rep.r;
      break;
    case SolveMode::kPenalized:
      rep = solve_penalized(p.m, p.lambda, p.penalty, p.eps, p.options);
      r_draw = rep.r;
      break;
  }
  emit(p.report_path, dump(to_json(rep)));
  if (!p.svg_path.empty()) {
    RenderInput in;
    in.network = &rep.network;
    in.m = &p.m;
    in.r = r_draw;
    write_text_file(p.svg_path, render_svg(in));
  }
  return rep.converged ? kExitOk : kExitNotConverged;
}

// Accepts a bare network or any document carrying one under "network"
// (construction results, solve reports).
Network load_network(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.is_object() && !j.contains("vertices") && j.contains("network")) return network_from_json(j["network"]);
  return network_from_json(j);
}

struct ConstructArgs {
  std::string name;
  double R = 1.0, r = 0.2, a = 2.0, b = 1.0, L = 3.0, kappa = 0.0;
  int N = 100, k = 12;
  std::string points, model, out, svg, m_out;
};

int run_construct(const ConstructArgs& a) {
  ConstructionResult res;
  if (a.name == "segment") {
    const auto pts = parse_points(a.points.empty() ? "0,0;4,0" : a.points);
    if (pts.size() != 2) throw InputError("segment needs exactly two --points");
    res = segment_two_balls(pts[0], pts[1], a.r);
  } else if (a.name == "tripod") {
    const auto pts = parse_points(a.points.empty() ? "0,0;1,0;0.5,0.8660254037844386" : a.points);
    if (pts.size() != 3) throw InputError("tripod needs exactly three --points");
    res = tripod(pts[0], pts[1], pts[2], a.r);
  } else if (a.name == "horseshoe") {
    const CompactSetModel m =
        a.model.empty() ? CompactSetModel::circle({0, 0}, a.R) : model_from_json(read_json_file(a.model));
    res = horseshoe(m, a.r);
  } else if (a.name == "stadium-competitor") {
    res = stadium_competitor(a.R, a.r, a.L);
  } else if (a.name == "rectangle") {
    res = rectangle_candidate(a.a, a.b, a.r);
  } else if (a.name == "corner-example") {
    res = corner_example(a.R, a.r, a.N, a.k);
  } else if (a.name == "tube") {
    const CompactSetModel curve = a.model.empty() ? CompactSetModel::polyline({{0, 0}, {a.L, 0}}, false)
                                                  : model_from_json(read_json_file(a.model));
    res = tube_curve(curve, a.r, a.kappa);
  } else {
    throw InputError("unknown construction '" + a.name + "'");
  }
  emit(a.out, dump(to_json(res)));
  if (!a.m_out.empty()) {
    if (!res.m) throw InputError("construction has no model to write");
    write_text_file(a.m_out, dump(to_json(*res.m)));
  }
  if (!a.svg.empty()) {
    RenderInput in;
    in.network = &res.network;
    if (res.m) in.m = &*res.m;
    in.r = res.claimed_r;
    write_text_file(a.svg, render_svg(in));
  }
  return kExitOk;
}

struct CheckArgs {
  std::string network, model, out;
  double r = 0.0;
  double rel_mesh = 1e-3;
};

int run_check(const CheckArgs& a) {
  const Network n = load_network(a.network);
  const CompactSetModel m = model_from_json(read_json_file(a.model));
  if (!(a.r >= 0.0)) throw InputError("--r must be non-negative");
  SuiteOptions opt;
  opt.rel_mesh = a.rel_mesh;
  const CheckReport rep = full_check_suite(n, m, a.r, opt);
  emit(a.out, dump(to_json(rep)));
  return rep.passed() ? kExitOk : kExitNotConverged;
}

struct BoundsArgs {
  std::string model, network, out;
  double r = 0.0;
  std::optional<double> volume;
  bool filled = false;
};

int run_bounds(const BoundsArgs& a) {
  const CompactSetModel m = model_from_json(read_json_file(a.model));
  if (!(a.r > 0.0)) throw InputError("--r must be positive");
  double V = 0.0;
  if (a.volume) {
    V = *a.volume;
  } else if (a.filled) {
    if (!m.is_closed_curve()) throw InputError("--filled needs a closed curve");
    V = area(m);
  }
  Json j = Json::object();
  j["lower_bound_volume"] = to_json(lower_bound_volume(V, a.r, 2));
  j["lower_bound_perimeter"] = is_convex_closed(m) ? to_json(lower_bound_perimeter(perimeter(m), a.r)) : Json(nullptr);
  if (!a.network.empty()) {
    const Network n = load_network(a.network);
    const double len = length(n);
    j["length"] = len;
    j["minkowski_volume_upper"] = to_json(minkowski_volume_upper(len, a.r, 2));
  }
  emit(a.out, dump(j));
  return kExitOk;
}

struct RenderArgs {
  std::string network, model, out;
  std::optional<double> r;
  bool energetic = false;
  double width = 800.0, height = 800.0;
};

int run_render(const RenderArgs& a) {
  const Network n = load_network(a.network);
  std::optional<CompactSetModel> m;
  if (!a.model.empty()) m = model_from_json(read_json_file(a.model));
  RenderSpec spec;
  spec.width = a.width;
  spec.height = a.height;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  RenderInput in;
  in.network = &n;
  if (m) in.m = &*m;
  in.r = a.r;
  std::optional<EnergeticClassification> cls;
  if (a.energetic) {
    if (!m || !a.r) throw InputError("--energetic needs --model and --r");
    const SampleNet s = sample(*m, *a.r > 0.0 ? 1e-3 * *a.r : 1e-3);
    if (!covered(s, n, *a.r)) throw InputError("network does not cover the model at r");
    cls = classify_energetic(n, s, *a.r);
    in.energetic = &*cls;
  }
  emit(a.out, render_svg(in, spec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal distance minimizer toolkit"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve the problem described by a problem file");
  solve->add_option("problem", sa.problem, "Problem JSON file")->required();
  solve->add_option("--report", sa.report, "Report path (default: problem output or stdout)");
  solve->add_option("--svg", sa.svg, "SVG output path");
  solve->add_option("--seed", sa.seed, "Override the solver seed");
  solve->add_option("--restarts", sa.restarts, "Override the number of restarts")->check(CLI::PositiveNumber);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a named construction");
  construct->add_option("name", ca.name, "segment|tripod|horseshoe|stadium-competitor|rectangle|corner-example|tube")
      ->required();
  construct->add_option("--R", ca.R, "Circle or stadium radius");
  construct->add_option("--r", ca.r, "Distance r");
  construct->add_option("--a", ca.a, "Rectangle width");
  construct->add_option("--b", ca.b, "Rectangle height");
  construct->add_option("--L", ca.L, "Core length (stadium) or segment length (tube)");
  construct->add_option("--N", ca.N, "Corner example scale N");
  construct->add_option("--k", ca.k, "Corner example truncation depth");
  construct->add_option("--kappa", ca.kappa, "Tube curvature bound (0 estimates it)");
  construct->add_option("--points", ca.points, "Points as x,y;x,y;...");
  construct->add_option("--model", ca.model, "Model JSON file (horseshoe, tube)");
  construct->add_option("--out", ca.out, "Construction JSON path (default stdout)");
  construct->add_option("--m-out", ca.m_out, "Write the construction's model JSON here");
  construct->add_option("--svg", ca.svg, "SVG output path");

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Run the checker suite on a network");
  check->add_option("network", ka.network, "Network JSON file")->required();
  check->add_option("model", ka.model, "Model JSON file")->required();
  check->add_option("--r", ka.r, "Distance r")->required();
  check->add_option("--rel-mesh", ka.rel_mesh, "Coverage net resolution relative to r")->check(CLI::PositiveNumber);
  check->add_option("--out", ka.out, "Report path (default stdout)");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the length lower bounds");
  bounds->add_option("model", ba.model, "Model JSON file")->required();
  bounds->add_option("--r", ba.r, "Distance r")->required();
  bounds->add_option("--volume", ba.volume, "Area of M for the volume bound");
  bounds->add_flag("--filled", ba.filled, "Use the area enclosed by a closed curve");
  bounds->add_option("--network", ba.network, "Network JSON file to compare against");
  bounds->add_option("--out", ba.out, "Output path (default stdout)");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "Render a network as SVG");
  render->add_option("network", ra.network, "Network JSON file")->required();
  render->add_option("--model", ra.model, "Model JSON file");
  render->add_option("--r", ra.r, "Distance r for the ball layer");
  render->add_flag("--energetic", ra.energetic, "Draw energetic points and correspondences");
  render->add_option("--width", ra.width, "Canvas width");
  render->add_option("--height", ra.height, "Canvas height");
  render->add_option("--out", ra.out, "SVG path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve) return run_solve(sa);
    if (*construct) return run_construct(ca);
    if (*check) return run_check(ka);
    if (*bounds) return run_bounds(ba);
    if (*render) return run_render(ra);
  } catch (const std::exception& e) {
    std::cerr << "mdmin: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
