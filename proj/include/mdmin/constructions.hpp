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

#ifndef MDMIN_CONSTRUCTIONS_HPP_
#define MDMIN_CONSTRUCTIONS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdmin/mset.hpp"
#include "mdmin/network.hpp"

namespace mdmin {

struct ConstructionResult {
  std::string name;
  Network network;
  std::optional<CompactSetModel> m;
  std::map<std::string, double> params;
  double claimed_r = 0.0;
  // Points of M that certify the construction (gap witnesses and the like).
  std::vector<Point> witnesses;
};

struct ConstructionOptions {
  // Sagitta bound for polygonised arcs, relative to r.
  double rel_arc_tol = 1e-6;
  // Enforce the curvature regime in which the horseshoe is a minimiser.
  bool require_minimizer_regime = true;
  double search_tol = 1e-10;
};

ConstructionResult segment_two_balls(Point p, Point q, double r);

ConstructionResult tripod(Point a, Point b, Point c, double r);

// Fermat point of a triangle with all angles < 2 pi / 3.
Point fermat_point(Point a, Point b, Point c);

ConstructionResult horseshoe(const CompactSetModel& m, double r, const ConstructionOptions& opt = {});

// Horseshoe with a prescribed gap (centre at arc-length u on the inner
// parallel curve, half-width g) and tips just long enough to reach the gap
// witness. Returns a non-finite length when the gap cannot be closed.
ConstructionResult horseshoe_with_gap(const CompactSetModel& m, double r, double u, double g,
                                      const ConstructionOptions& opt = {});

struct StadiumBlock {
  double width = 0.0;
  double height = 0.0;
  double length = 0.0;
  // A, K1, P, K2, B (spine), S (stem top), T1, T2 in block coordinates with
  // the bottom side on y = 0 and the top side on y = 2R.
  std::vector<Point> vertices;
};

// Optimal periodic block of the stadium competitor for a given width.
StadiumBlock stadium_block(double R, double r, double width);

ConstructionResult stadium_competitor(double R, double r, double L, const ConstructionOptions& opt = {});

ConstructionResult rectangle_candidate(double a, double b, double r, const ConstructionOptions& opt = {});

ConstructionResult corner_example(double R, double r, int N, int k);

// kappa <= 0 estimates the curvature bound from the polyline itself.
ConstructionResult tube_curve(const CompactSetModel& curve, double r, double kappa = 0.0,
                              const ConstructionOptions& opt = {});

}  // namespace mdmin

#endif  // MDMIN_CONSTRUCTIONS_HPP_
