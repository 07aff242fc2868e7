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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mdmin/bounds.hpp"
#include "mdmin/constructions.hpp"
#include "mdmin/energy.hpp"
#include "mdmin/io.hpp"
#include "mdmin/regularity.hpp"
#include "mdmin/render.hpp"
#include "mdmin/solver.hpp"
#include "mdmin/topology.hpp"

namespace py = pybind11;
using namespace mdmin;

namespace {

std::string point_repr(Point p) {
  std::ostringstream os;
  os.precision(17);
  os << "Point(" << p.x << ", " << p.y << ")";
  return os.str();
}

template <typename T>
std::string json_text(const T& v) {
  return to_json(v).dump();
}

}  // namespace

PYBIND11_MODULE(_mdmin, m) {
  m.doc() = "Maximal distance minimizer toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def(py::init([](const py::sequence& s) {
        if (py::len(s) != 2) throw py::value_error("Point needs two coordinates");
        return Point{s[0].cast<double>(), s[1].cast<double>()};
      }))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__iter__", [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__repr__", &point_repr);
  py::implicitly_convertible<py::tuple, Point>();
  py::implicitly_convertible<py::list, Point>();

  py::class_<Network>(m, "Network")
      .def(py::init<std::vector<Point>, std::vector<Edge>>(), py::arg("vertices"), py::arg("edges"))
      .def_static("build", &Network::build, py::arg("vertices"), py::arg("edges"), py::arg("merge_tol") = kMergeTol)
      .def_static("single", &Network::single, py::arg("p"))
      .def_static("polyline", &Network::polyline, py::arg("points"))
      .def_property_readonly("vertices", &Network::vertices)
      .def_property_readonly("edges", &Network::edges)
      .def("degree", &Network::degree, py::arg("v"))
      .def("length", [](const Network& n) { return length(n); })
      .def("to_json", &json_text<Network>)
      .def_static("from_json", [](const std::string& s) { return network_from_json(parse_json(s)); })
      .def("__eq__", [](const Network& a, const Network& b) { return a == b; });

  py::class_<CompactSetModel>(m, "CompactSetModel")
      .def_static("finite", &CompactSetModel::finite, py::arg("points"))
      .def_static("circle", &CompactSetModel::circle, py::arg("center"), py::arg("radius"))
      .def_static("rectangle", &CompactSetModel::rectangle, py::arg("corner"), py::arg("width"), py::arg("height"))
      .def_static("stadium", &CompactSetModel::stadium, py::arg("center"), py::arg("radius"), py::arg("core_length"))
      .def_static("polyline", &CompactSetModel::polyline, py::arg("points"), py::arg("closed"))
      .def_property_readonly("kind", [](const CompactSetModel& c) { return kind_name(c.kind); })
      .def("to_json", &json_text<CompactSetModel>)
      .def_static("from_json", [](const std::string& s) { return model_from_json(parse_json(s)); })
      .def("__eq__", [](const CompactSetModel& a, const CompactSetModel& b) { return a == b; });

  py::class_<SampleNet>(m, "SampleNet")
      .def(py::init([](std::vector<Point> pts, double mesh) { return SampleNet{std::move(pts), mesh}; }),
           py::arg("points"), py::arg("mesh") = 0.0)
      .def_readonly("points", &SampleNet::points)
      .def_readonly("mesh", &SampleNet::mesh);

  m.def("sample", &sample, py::arg("m"), py::arg("eps"));
  m.def("perimeter", &perimeter, py::arg("m"));
  m.def("area", &area, py::arg("m"));
  m.def("inner_parallel_curve", &inner_parallel_curve, py::arg("m"), py::arg("r"), py::arg("arc_tol") = 1e-6);
  m.def("dist_point_network", &dist_point_network, py::arg("p"), py::arg("n"));
  m.def("hausdorff_distance", &hausdorff_distance, py::arg("a"), py::arg("b"), py::arg("resolution") = 1e-3);
  m.def("is_tree", &is_tree, py::arg("n"));

  py::class_<EnergyReport>(m, "EnergyReport")
      .def_readonly("value", &EnergyReport::value)
      .def_readonly("argmax", &EnergyReport::argmax)
      .def_readonly("nearest", &EnergyReport::nearest)
      .def_readonly("mesh", &EnergyReport::mesh);
  m.def("energy", &energy, py::arg("s"), py::arg("n"), py::arg("tol_argmax") = 1e-7);
  m.def("covered", &covered, py::arg("s"), py::arg("n"), py::arg("r"), py::arg("tol") = kGeomTol);
  m.def("exact_energy", &exact_energy, py::arg("m"), py::arg("n"), py::arg("precision") = 1e-12);

  py::class_<CheckItem>(m, "CheckItem")
      .def_readonly("name", &CheckItem::name)
      .def_readonly("passed", &CheckItem::passed)
      .def_readonly("measured", &CheckItem::measured)
      .def_readonly("threshold", &CheckItem::threshold)
      .def_readonly("tolerance", &CheckItem::tolerance)
      .def_readonly("location", &CheckItem::location);
  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("items", &CheckReport::items)
      .def_readonly("branch_count", &CheckReport::branch_count)
      .def("passed", &CheckReport::passed)
      .def("to_json", &json_text<CheckReport>);
  m.def("check_angles", &check_angles, py::arg("n"), py::arg("tol_angle") = kAngleTol);
  m.def("check_branching", &check_branching, py::arg("n"), py::arg("tol_angle") = kAngleTol);
  m.def("turn", &turn, py::arg("n"), py::arg("path"));
  m.def("ahlfors_density", &ahlfors_density, py::arg("n"), py::arg("x"), py::arg("eps"));
  m.def(
      "full_check_suite",
      [](const Network& n, const CompactSetModel& mm, double r) { return full_check_suite(n, mm, r); },
      py::arg("n"), py::arg("m"), py::arg("r"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("value", &BoundReport::value)
      .def_readonly("formula", &BoundReport::formula)
      .def_readonly("inputs", &BoundReport::inputs);
  m.def("minkowski_volume_upper", &minkowski_volume_upper, py::arg("length"), py::arg("t"), py::arg("d") = 2);
  m.def("lower_bound_volume", &lower_bound_volume, py::arg("V"), py::arg("r"), py::arg("d") = 2);
  m.def("lower_bound_perimeter", &lower_bound_perimeter, py::arg("P"), py::arg("r"));

  py::class_<ConstructionResult>(m, "ConstructionResult")
      .def_readonly("name", &ConstructionResult::name)
      .def_readonly("network", &ConstructionResult::network)
      .def_readonly("m", &ConstructionResult::m)
      .def_readonly("params", &ConstructionResult::params)
      .def_readonly("claimed_r", &ConstructionResult::claimed_r)
      .def_readonly("witnesses", &ConstructionResult::witnesses)
      .def("to_json", &json_text<ConstructionResult>);
  m.def("segment_two_balls", &segment_two_balls, py::arg("p"), py::arg("q"), py::arg("r"));
  m.def("tripod", &tripod, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("r"));
  m.def("horseshoe", [](const CompactSetModel& mm, double r) { return horseshoe(mm, r); }, py::arg("m"), py::arg("r"));
  m.def("stadium_competitor", [](double R, double r, double L) { return stadium_competitor(R, r, L); },
        py::arg("R"), py::arg("r"), py::arg("L"));
  m.def("rectangle_candidate", [](double a, double b, double r) { return rectangle_candidate(a, b, r); },
        py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("corner_example", &corner_example, py::arg("R"), py::arg("r"), py::arg("N"), py::arg("k"));
  m.def("tube_curve", [](const CompactSetModel& c, double r, double kappa) { return tube_curve(c, r, kappa); },
        py::arg("curve"), py::arg("r"), py::arg("kappa") = 0.0);

  m.def("enumerate_topology_count", [](int k) { return enumerate_topologies(k).size(); }, py::arg("k"));

  py::class_<SolverOptions>(m, "SolverOptions")
      .def(py::init<>())
      .def_readwrite("schedule", &SolverOptions::schedule)
      .def_readwrite("relative_schedule", &SolverOptions::relative_schedule)
      .def_readwrite("seed", &SolverOptions::seed)
      .def_readwrite("restarts", &SolverOptions::restarts)
      .def_readwrite("oracle_seed", &SolverOptions::oracle_seed)
      .def_readwrite("max_rounds", &SolverOptions::max_rounds)
      .def_readwrite("rel_tol", &SolverOptions::rel_tol)
      .def_readwrite("filled_volume", &SolverOptions::filled_volume);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("mode", &SolveReport::mode)
      .def_readonly("network", &SolveReport::network)
      .def_readonly("length", &SolveReport::length)
      .def_readonly("r", &SolveReport::r)
      .def_readonly("energy", &SolveReport::energy)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("converged", &SolveReport::converged)
      .def_readonly("lower_bound_gap", &SolveReport::lower_bound_gap)
      .def_readonly("bounds", &SolveReport::bounds)
      .def_readonly("checks", &SolveReport::checks)
      .def_readonly("seed", &SolveReport::seed)
      .def_readonly("schedule", &SolveReport::schedule)
      .def_readonly("seed_kind", &SolveReport::seed_kind)
      .def_readonly("co_optimal", &SolveReport::co_optimal)
      .def_readonly("objective", &SolveReport::objective)
      .def("to_json", &json_text<SolveReport>);

  m.def("solve_finite", &solve_finite, py::arg("points"), py::arg("r"), py::arg("options") = SolverOptions{});
  m.def("solve_dual", &solve_dual, py::arg("m"), py::arg("r"), py::arg("options") = SolverOptions{});
  m.def("solve_primal", &solve_primal, py::arg("m"), py::arg("l"), py::arg("options") = SolverOptions{});
  m.def(
      "solve_penalized",
      [](const CompactSetModel& mm, double lambda, const std::string& mode, double l, double eps,
         const SolverOptions& opt) {
        Penalty p;
        if (mode == "plain") {
          p.mode = PenaltyMode::kPlain;
        } else if (mode == "hinge") {
          p.mode = PenaltyMode::kHinge;
          p.l = l;
        } else {
          throw py::value_error("mode must be 'plain' or 'hinge'");
        }
        return solve_penalized(mm, lambda, p, eps, opt);
      },
      py::arg("m"), py::arg("lam"), py::arg("mode") = "plain", py::arg("l") = 0.0, py::arg("eps") = 0.01,
      py::arg("options") = SolverOptions{});

  m.def(
      "render_svg",
      [](const Network& n, std::optional<CompactSetModel> mm, std::optional<double> r) {
        RenderInput in;
        in.network = &n;
        if (mm) in.m = &*mm;
        in.r = r;
        return render_svg(in);
      },
      py::arg("network"), py::arg("m") = py::none(), py::arg("r") = py::none());
}
