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

#ifndef MDMIN_SOLVER_HPP_
#define MDMIN_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdmin/bounds.hpp"
#include "mdmin/energy.hpp"
#include "mdmin/mset.hpp"
#include "mdmin/network.hpp"
#include "mdmin/optimize.hpp"
#include "mdmin/regularity.hpp"
#include "mdmin/topology.hpp"

namespace mdmin {

struct Ball {
  Point center;
  double radius = 0.0;
};

struct SolverOptions {
  // Absolute net resolutions, strictly decreasing, coarsest <= r; when
  // empty the relative schedule times r is used. solve_primal drops an
  // absolute schedule that is coarser than the r being probed.
  std::vector<double> schedule;
  std::vector<double> relative_schedule{0.1, 0.03, 0.01};
  std::uint64_t seed = 0;
  int restarts = 1;
  // Seed the first restart from a matching construction when available.
  bool oracle_seed = true;
  int topology_cap = kDefaultTopologyCap;
  double co_optimal_tol = 1e-9;
  // Local-search rounds per stage and convex re-assignment passes per round.
  int max_rounds = 12;
  int max_polish_passes = 40;
  // Passes and rounds stop once the relative length decrease drops below.
  double rel_tol = 1e-7;
  // After the last stage, M is re-sampled refine_factor times finer and
  // points missed by more than refine_tol * r join the finest net, for up
  // to max_refinements passes. Disabled when refine_factor <= 1.
  double refine_factor = 32.0;
  double refine_tol = 1e-4;
  int max_refinements = 4;
  // Long edges are split to at most this length, relative to r.
  double split_length = 0.25;
  // Area of the region bounded by M, when covering M is equivalent to
  // covering that region; feeds the volume lower bound (0 otherwise).
  std::optional<double> filled_volume;
  FixedTopologyOptions convex;
};

struct SolveReport {
  std::string mode;
  Network network;
  double length = 0.0;
  // Dual: the problem's r. Primal: the recovered r. Penalized: F_M(T).
  double r = 0.0;
  EnergyReport energy;
  int iterations = 0;
  bool converged = false;
  double lower_bound_gap = 0.0;
  std::vector<BoundReport> bounds;
  CheckReport checks;
  std::uint64_t seed = 0;
  std::vector<double> schedule;
  std::string seed_kind;
  // Distinct networks whose length is within co_optimal_tol of the best.
  std::vector<Network> co_optimal;
  double objective = 0.0;
};

struct TopologyResult {
  Network network;
  double length = 0.0;
  bool converged = false;
};

// Minimises total length over vertex positions of the topology with
// terminal vertex i constrained to the intersection of balls[i].
TopologyResult optimize_fixed_topology(const Topology& t, const std::vector<std::vector<Ball>>& balls,
                                       std::vector<Point> init = {}, const FixedTopologyOptions& opt = {});
TopologyResult optimize_fixed_topology(const Topology& t, const std::vector<Ball>& balls,
                                       std::vector<Point> init = {}, const FixedTopologyOptions& opt = {});

// Greedy clique clustering: a point joins the first cluster whose members
// are all within 2r and whose balls keep a common interior point.
std::vector<std::vector<std::size_t>> cluster_terminals(const std::vector<Point>& pts, double r);

SolveReport solve_finite(const std::vector<Point>& points, double r, const SolverOptions& opt = {});

SolveReport solve_dual(const CompactSetModel& m, double r, const SolverOptions& opt = {});

SolveReport solve_primal(const CompactSetModel& m, double l, const SolverOptions& opt = {});

enum class PenaltyMode { kPlain, kHinge };

struct Penalty {
  PenaltyMode mode = PenaltyMode::kPlain;
  double l = 0.0;
};

double penalized_objective(const Network& n, const SampleNet& s, double lambda, const Penalty& p);

SolveReport solve_penalized(const CompactSetModel& m, double lambda, const Penalty& p, double eps,
                            const SolverOptions& opt = {});

}  // namespace mdmin

#endif  // MDMIN_SOLVER_HPP_
