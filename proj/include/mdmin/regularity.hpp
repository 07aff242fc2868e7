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

#ifndef MDMIN_REGULARITY_HPP_
#define MDMIN_REGULARITY_HPP_

#include <string>
#include <vector>

#include "mdmin/energy.hpp"
#include "mdmin/mset.hpp"
#include "mdmin/network.hpp"

namespace mdmin {

inline constexpr double kAngleTol = 1e-6;

struct CheckItem {
  std::string name;
  bool passed = true;
  double measured = 0.0;
  double threshold = 0.0;
  double tolerance = 0.0;
  std::string location;
};

struct CheckReport {
  std::vector<CheckItem> items;
  // Number of degree-3 vertices, filled by check_branching.
  long branch_count = -1;

  bool passed() const;
  void add(CheckItem item) { items.push_back(std::move(item)); }
  void append(const CheckReport& other);
  // Items that failed.
  std::vector<CheckItem> failures() const;
};

CheckReport check_angles(const Network& n, double tol_angle = kAngleTol);

CheckReport check_branching(const Network& n, double tol_angle = kAngleTol);

CheckReport check_tree(const Network& n);

// Sum of signed turns between consecutive edge directions along the path.
double turn(const Network& n, const PathTrace& path);

// H(n intersected with the closed eps-disk about x) / eps.
double ahlfors_density(const Network& n, Point x, double eps);

struct EnergeticAngleOptions {
  double tol = kAngleTol;
  // Also audit non-isolated energetic vertices.
  bool include_non_isolated = false;
};

CheckReport check_energetic_angles(const Network& n, const EnergeticClassification& cls,
                                   EnergeticAngleOptions opt = {});

struct StationarityCase {
  int tag = 1;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double branch_angle = kPi;
};

// Derivative of the local length when the witness moves along M.
double stationarity_residual(const StationarityCase& c);

// Local case data of an energetic point x for the moving witness y.
struct LocalDerivative {
  StationarityCase c;
  double value = 0.0;
  Point x;
  int side = 0;
};

// Audits the equal-derivative condition at witness y: the two energetic
// points on the circle of radius r about y must lie on opposite sides of
// the inward normal line at y and have opposite signed derivatives (equal
// magnitudes) for a common direction of motion of y along M. Throws
// std::domain_error when the local geometry matches none of the four cases
// (for instance at a corner of M).
CheckReport check_equal_derivatives(const Network& n, const EnergeticClassification& cls,
                                    Point y, const CompactSetModel& m, double tol = 1e-6,
                                    std::vector<LocalDerivative>* detail = nullptr);

struct SuiteOptions {
  // Net resolution relative to r for the coverage audit (absolute 1e-3 when
  // r is 0).
  double rel_mesh = 1e-3;
  double tol_angle = kAngleTol;
  double classify_tol = 1e-6;
};

// Tree, angle, branching, coverage and energetic-angle checks in one report.
CheckReport full_check_suite(const Network& n, const CompactSetModel& m, double r, SuiteOptions opt = {});

// Unit tangent of M at y (counterclockwise for closed curves) and the inward
// normal. Throws std::domain_error at corners of M.
void model_frame_at(const CompactSetModel& m, Point y, Point& tangent, Point& inward,
                    double tol = 1e-7);

}  // namespace mdmin

#endif  // MDMIN_REGULARITY_HPP_
