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

#ifndef MDMIN_ENERGY_HPP_
#define MDMIN_ENERGY_HPP_

#include <cstddef>
#include <vector>

#include "mdmin/mset.hpp"
#include "mdmin/network.hpp"

namespace mdmin {

struct EnergyReport {
  double value = 0.0;
  std::vector<std::size_t> argmax;
  std::vector<Point> nearest;
  double mesh = 0.0;
};

EnergyReport energy(const SampleNet& s, const Network& n, double tol_argmax = 1e-7);

// energy <= r + mesh + tol.
bool covered(const SampleNet& s, const Network& n, double r, double tol = kGeomTol);

struct EnergeticPoint {
  Point x;
  bool isolated = false;
  // Vertex index when x sits on a vertex, else -1.
  long vertex = -1;
  // Edge index and parameter of x when it is interior to an edge, else -1.
  long edge = -1;
  double param = 0.0;
  std::vector<Point> witnesses;
};

struct EnergeticClassification {
  std::vector<EnergeticPoint> points;
  std::vector<bool> steiner_vertex;
  std::vector<bool> steiner_edge;
  double r = 0.0;
  double tol = 0.0;
  double mesh = 0.0;
  double isolation_radius = 0.0;

  std::vector<Point> energetic_non_isolated() const;
  std::vector<Point> energetic_isolated() const;
};

struct ClassifyOptions {
  // Points closer than this are one energetic point.
  double merge_radius = -1.0;
  // Non-positive selects max(10 tol, 4 mesh).
  double isolation_radius = -1.0;
};

// Throws std::invalid_argument when n does not cover s at r.
EnergeticClassification classify_energetic(const Network& n, const SampleNet& s, double r,
                                           double tol = 1e-6, ClassifyOptions opt = {});

// Exact coverage of every point of M (curves included) within r of n.
// Covered parameter sets are computed from analytic piece/capsule crossings.
bool covers_exactly(const CompactSetModel& m, const Network& n, double r);

// max over y in M of dist(y, n), evaluated exactly up to `precision`.
double exact_energy(const CompactSetModel& m, const Network& n, double precision = 1e-12);

}  // namespace mdmin

#endif  // MDMIN_ENERGY_HPP_
