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

#ifndef MDMIN_GEOMETRY_HPP_
#define MDMIN_GEOMETRY_HPP_

#include <cmath>
#include <numbers>
#include <vector>

namespace mdmin {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPiOverThree = 2.0 * std::numbers::pi / 3.0;

// Default absolute tolerance for geometric predicates, in length units.
inline constexpr double kGeomTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  Point& operator+=(Point o) { x += o.x; y += o.y; return *this; }
  Point& operator-=(Point o) { x -= o.x; y -= o.y; return *this; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

struct Ray {
  Point base;
  Point dir;  // unit length
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double norm2(Point a) { return a.x * a.x + a.y * a.y; }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point lerp(Point a, Point b, double t) { return a + t * (b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Unit vector along a; throws std::domain_error for the zero vector.
Point unit(Point a);

// Unit vector at polar angle theta.
inline Point polar(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Rotates a counterclockwise by theta.
Point rotate(Point a, double theta);

// Makes a ray from base pointing towards target.
Ray ray_towards(Point base, Point target);

// Parameter in [0,1] of the point of [ab] nearest to p (0 when a == b).
double project_param(Point p, Point a, Point b);

double dist_point_segment(Point p, Point a, Point b);

// Unsigned angle in [0, pi] between the ray directions.
double angle_between(const Ray& r1, const Ray& r2);
double angle_between(Point d1, Point d2);

// Signed angle from r1 to r2 in (-pi, pi], counterclockwise positive.
double signed_turn(const Ray& r1, const Ray& r2);
double signed_turn(Point d1, Point d2);

// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

// Intersection parameters t (ascending) of the line a + t (b - a) with the
// circle |x - c| = rad. Returns the count (0, 1 or 2).
int line_circle_params(Point a, Point b, Point c, double rad, double t[2]);

struct Disk {
  Point center;
  double radius = 0.0;
};

// Smallest enclosing disk (Welzl, deterministic order); throws for an
// empty input.
Disk min_enclosing_disk(std::vector<Point> pts);

}  // namespace mdmin

#endif  // MDMIN_GEOMETRY_HPP_
