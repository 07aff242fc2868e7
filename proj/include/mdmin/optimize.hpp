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

#ifndef MDMIN_OPTIMIZE_HPP_
#define MDMIN_OPTIMIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mdmin/geometry.hpp"
#include "mdmin/network.hpp"

namespace mdmin {

// |w0 x[v0] + w1 x[v1] - center| <= radius. A plain vertex ball has w1 = 0.
struct DiskConstraint {
  std::size_t v0 = 0;
  std::size_t v1 = 0;
  double w0 = 1.0;
  double w1 = 0.0;
  Point center;
  double radius = 0.0;

  static DiskConstraint vertex(std::size_t v, Point c, double r) { return {v, v, 1.0, 0.0, c, r}; }
  // Point (1 - lambda) x[i] + lambda x[j] within r of c.
  static DiskConstraint on_edge(std::size_t i, std::size_t j, double lambda, Point c, double r) {
    return {i, j, 1.0 - lambda, lambda, c, r};
  }
  Point eval(const std::vector<Point>& x) const { return w0 * x[v0] + w1 * x[v1]; }
};

enum class Pin : std::uint8_t { kFree, kFixX, kFixY, kFixed };

struct FixedTopologyProblem {
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<DiskConstraint> disks;
  // Empty means every vertex is free.
  std::vector<Pin> pins;
};

struct FixedTopologyOptions {
  // Target duality gap, relative to the problem scale.
  double rel_gap = 1e-12;
  // Length smoothing sqrt(|e|^2 + delta^2), relative to the problem scale.
  double rel_smoothing = 1e-11;
  double mu = 10.0;
  int max_iterations = 4000;
};

struct FixedTopologyResult {
  std::vector<Point> positions;
  double length = 0.0;
  bool converged = false;
  bool feasible = false;
  int iterations = 0;
};

// Moves x into the strict interior of every disk by alternating projections
// onto slightly shrunk disks. Returns false when no strictly feasible point
// was found.
bool make_strictly_feasible(const FixedTopologyProblem& p, std::vector<Point>& x);

// Minimises total edge length over vertex positions subject to the disk
// constraints. The problem is convex; a log-barrier interior-point method
// with damped Newton steps (sparse LDLT) is used.
FixedTopologyResult minimize_length(const FixedTopologyProblem& p, std::vector<Point> init,
                                    const FixedTopologyOptions& opt = {});

double total_length(const std::vector<Edge>& edges, const std::vector<Point>& x);

// Largest violation max(0, |w x - c| - radius) over all disks.
double max_violation(const FixedTopologyProblem& p, const std::vector<Point>& x);

}  // namespace mdmin

#endif  // MDMIN_OPTIMIZE_HPP_
