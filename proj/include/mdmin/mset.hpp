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

#ifndef MDMIN_MSET_HPP_
#define MDMIN_MSET_HPP_

#include <string>
#include <vector>

#include "mdmin/geometry.hpp"
#include "mdmin/network.hpp"

namespace mdmin {

enum class ModelKind { kPoints, kCircle, kRectangle, kStadium, kPolyline };

// The compact set M. Only the fields of the active variant are meaningful.
//  - kPoints:    points
//  - kCircle:    center, radius
//  - kRectangle: corner (lower left), width, height
//  - kStadium:   center, radius, core_length (core is horizontal)
//  - kPolyline:  points, closed
struct CompactSetModel {
  ModelKind kind = ModelKind::kPoints;
  std::vector<Point> points;
  bool closed = false;
  Point center;
  double radius = 0.0;
  Point corner;
  double width = 0.0;
  double height = 0.0;
  double core_length = 0.0;

  static CompactSetModel finite(std::vector<Point> pts);
  static CompactSetModel circle(Point c, double R);
  static CompactSetModel rectangle(Point corner, double a, double b);
  static CompactSetModel stadium(Point c, double R, double core);
  static CompactSetModel polyline(std::vector<Point> pts, bool closed);

  // Throws std::invalid_argument when the variant invariants fail.
  void validate() const;
  bool is_closed_curve() const;

  friend bool operator==(const CompactSetModel&, const CompactSetModel&) = default;
};

std::string kind_name(ModelKind k);

// A boundary piece: a segment a->b, or an arc of radius rad about c starting
// at polar angle theta0 and sweeping `sweep` (signed) radians.
struct Piece {
  bool is_arc = false;
  Point a, b;
  Point c;
  double rad = 0.0;
  double theta0 = 0.0;
  double sweep = 0.0;

  double length() const;
  // Point at arc-length s from the start, s in [0, length()].
  Point at(double s) const;
  // Unit tangent in the direction of travel at arc-length s.
  Point tangent(double s) const;
  Point start() const { return at(0.0); }
  Point end() const { return at(length()); }
};

// Pieces in traversal order (counterclockwise for the closed shapes).
// Empty for kPoints.
std::vector<Piece> pieces(const CompactSetModel& m);

struct SampleNet {
  std::vector<Point> points;
  double mesh = 0.0;
};

SampleNet sample(const CompactSetModel& m, double eps);

double perimeter(const CompactSetModel& m);
double area(const CompactSetModel& m);

// Total length of the curve (perimeter for closed variants); 0 for points.
double curve_length(const CompactSetModel& m);

// Point at arc-length u along the curve (wraps for closed variants); for
// kPoints returns points[u mod count].
Point point_at(const CompactSetModel& m, double u);

// Bounding box diameter of M.
double diameter_scale(const CompactSetModel& m);

// Smallest radius of curvature along the curve; 0 at polygon corners of a
// rectangle, estimated from turning per unit length for polylines.
double min_curvature_radius(const CompactSetModel& m);

bool is_convex_closed(const CompactSetModel& m);

// Closed polyline at distance r inside M. Arcs are sampled with vertices on
// the exact curve and sagitta <= arc_tol.
CompactSetModel inner_parallel_curve(const CompactSetModel& m, double r,
                                     double arc_tol = 1e-6);

// M itself as a network (polygonised with sagitta <= arc_tol).
Network model_network(const CompactSetModel& m, double arc_tol = 1e-6);

// Distance from p to M, exact for every variant.
double dist_to_model(Point p, const CompactSetModel& m);

// Number of chords so an arc of radius rad and |sweep| has sagitta <= tol.
int arc_segments(double rad, double sweep, double tol);

}  // namespace mdmin

#endif  // MDMIN_MSET_HPP_
