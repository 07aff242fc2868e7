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

#include "mdmin/geometry.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mdmin {

Point unit(Point a) {
  const double n = norm(a);
  if (!(n > 0.0)) throw std::domain_error("unit: zero vector");
  return a / n;
}

Point rotate(Point a, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

Ray ray_towards(Point base, Point target) { return {base, unit(target - base)}; }

double project_param(Point p, Point a, Point b) {
  const Point d = b - a;
  const double dd = norm2(d);
  if (dd == 0.0) return 0.0;
  return std::clamp(dot(p - a, d) / dd, 0.0, 1.0);
}

double dist_point_segment(Point p, Point a, Point b) {
  return dist(p, lerp(a, b, project_param(p, a, b)));
}

double angle_between(Point d1, Point d2) {
  return std::atan2(std::abs(cross(d1, d2)), dot(d1, d2));
}

double angle_between(const Ray& r1, const Ray& r2) { return angle_between(r1.dir, r2.dir); }

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

double signed_turn(Point d1, Point d2) {
  const double c = cross(d1, d2);
  const double a = std::atan2(c, dot(d1, d2));
  // atan2 yields -pi for a reversed direction with c == -0.0.
  if (a == -kPi) return kPi;
  return a;
}

double signed_turn(const Ray& r1, const Ray& r2) { return signed_turn(r1.dir, r2.dir); }

int line_circle_params(Point a, Point b, Point c, double rad, double t[2]) {
  const Point d = b - a;
  const Point f = a - c;
  const double A = dot(d, d);
  if (A == 0.0) return 0;
  const double B = dot(f, d);
  const double C = dot(f, f) - rad * rad;
  const double disc = B * B - A * C;
  if (disc < 0.0) return 0;
  if (disc == 0.0) {
    t[0] = -B / A;
    return 1;
  }
  const double s = std::sqrt(disc);
  // Numerically stable roots.
  const double q = (B >= 0.0) ? -(B + s) : -(B - s);
  double t0 = q / A;
  double t1 = (q != 0.0) ? C / q : -t0;
  if (t0 > t1) std::swap(t0, t1);
  t[0] = t0;
  t[1] = t1;
  return 2;
}

namespace {

Disk disk_from(Point a, Point b) { return {lerp(a, b, 0.5), 0.5 * dist(a, b)}; }

Disk disk_from(Point a, Point b, Point c) {
  const Point ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) < 1e-300) {
    Disk best = disk_from(a, b);
    for (const Disk& k : {disk_from(a, c), disk_from(b, c)}) {
      if (k.radius > best.radius) best = k;
    }
    return best;
  }
  const Point o{(ac.y * norm2(ab) - ab.y * norm2(ac)) / d, (ab.x * norm2(ac) - ac.x * norm2(ab)) / d};
  return {a + o, norm(o)};
}

bool inside(const Disk& k, Point p) { return dist(k.center, p) <= k.radius * (1.0 + 1e-12) + 1e-300; }

}  // namespace

Disk min_enclosing_disk(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("min_enclosing_disk: empty input");
  std::mt19937_64 rng(0x5eed);
  std::shuffle(pts.begin(), pts.end(), rng);
  Disk d{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (inside(d, pts[i])) continue;
    d = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(d, pts[j])) continue;
      d = disk_from(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!inside(d, pts[k])) d = disk_from(pts[i], pts[j], pts[k]);
      }
    }
  }
  return d;
}

}  // namespace mdmin
