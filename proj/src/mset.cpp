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

#include "mdmin/mset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mdmin {

CompactSetModel CompactSetModel::finite(std::vector<Point> pts) {
  CompactSetModel m;
  m.kind = ModelKind::kPoints;
  m.points = std::move(pts);
  m.validate();
  return m;
}

CompactSetModel CompactSetModel::circle(Point c, double R) {
  CompactSetModel m;
  m.kind = ModelKind::kCircle;
  m.center = c;
  m.radius = R;
  m.validate();
  return m;
}

CompactSetModel CompactSetModel::rectangle(Point corner, double a, double b) {
  CompactSetModel m;
  m.kind = ModelKind::kRectangle;
  m.corner = corner;
  m.width = a;
  m.height = b;
  m.validate();
  return m;
}

CompactSetModel CompactSetModel::stadium(Point c, double R, double core) {
  CompactSetModel m;
  m.kind = ModelKind::kStadium;
  m.center = c;
  m.radius = R;
  m.core_length = core;
  m.validate();
  return m;
}

CompactSetModel CompactSetModel::polyline(std::vector<Point> pts, bool closed) {
  CompactSetModel m;
  m.kind = ModelKind::kPolyline;
  m.points = std::move(pts);
  m.closed = closed;
  m.validate();
  return m;
}

void CompactSetModel::validate() const {
  switch (kind) {
    case ModelKind::kPoints:
      if (points.empty()) throw std::invalid_argument("points model: no points");
      for (Point p : points) {
        if (!is_finite(p)) throw std::invalid_argument("points model: non-finite point");
      }
      break;
    case ModelKind::kCircle:
      if (!(radius > 0.0) || !std::isfinite(radius) || !is_finite(center)) {
        throw std::invalid_argument("circle model: radius must be positive");
      }
      break;
    case ModelKind::kRectangle:
      if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height) ||
          !is_finite(corner)) {
        throw std::invalid_argument("rectangle model: sides must be positive");
      }
      break;
    case ModelKind::kStadium:
      if (!(radius > 0.0) || !(core_length >= 0.0) || !std::isfinite(radius) ||
          !std::isfinite(core_length) || !is_finite(center)) {
        throw std::invalid_argument("stadium model: radius must be positive, core non-negative");
      }
      break;
    case ModelKind::kPolyline:
      if (points.size() < 2) throw std::invalid_argument("polyline model: needs >= 2 points");
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (!is_finite(points[i])) throw std::invalid_argument("polyline model: non-finite point");
        if (i > 0 && points[i] == points[i - 1]) {
          throw std::invalid_argument("polyline model: repeated consecutive point");
        }
      }
      if (closed && points.size() < 3) {
        throw std::invalid_argument("polyline model: closed polyline needs >= 3 points");
      }
      if (closed && points.front() == points.back()) {
        throw std::invalid_argument("polyline model: closed polyline must not repeat its start");
      }
      break;
  }
}

bool CompactSetModel::is_closed_curve() const {
  return kind == ModelKind::kCircle || kind == ModelKind::kRectangle ||
         kind == ModelKind::kStadium || (kind == ModelKind::kPolyline && closed);
}

std::string kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::kPoints: return "points";
    case ModelKind::kCircle: return "circle";
    case ModelKind::kRectangle: return "rectangle";
    case ModelKind::kStadium: return "stadium";
    case ModelKind::kPolyline: return "polyline";
  }
  return "unknown";
}

double Piece::length() const { return is_arc ? rad * std::abs(sweep) : dist(a, b); }

Point Piece::at(double s) const {
  if (!is_arc) {
    const double len = length();
    return len > 0.0 ? lerp(a, b, s / len) : a;
  }
  const double th = theta0 + std::copysign(s / rad, sweep);
  return c + rad * polar(th);
}

Point Piece::tangent(double s) const {
  if (!is_arc) return unit(b - a);
  const double th = theta0 + std::copysign(s / rad, sweep);
  const Point t = perp(polar(th));
  return sweep >= 0.0 ? t : -t;
}

namespace {

Piece seg(Point a, Point b) {
  Piece p;
  p.a = a;
  p.b = b;
  return p;
}

Piece arc(Point c, double rad, double theta0, double sweep) {
  Piece p;
  p.is_arc = true;
  p.c = c;
  p.rad = rad;
  p.theta0 = theta0;
  p.sweep = sweep;
  p.a = p.at(0.0);
  p.b = p.at(p.length());
  return p;
}

std::vector<Point> rectangle_corners(const CompactSetModel& m) {
  const Point c = m.corner;
  return {c, c + Point{m.width, 0}, c + Point{m.width, m.height}, c + Point{0, m.height}};
}

double signed_area(const std::vector<Point>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += cross(p[i], p[(i + 1) % p.size()]);
  return 0.5 * s;
}

double dist_point_arc(Point p, const Piece& pc) {
  const Point d = p - pc.c;
  const double r = norm(d);
  if (r == 0.0) return pc.rad;
  double t = std::atan2(d.y, d.x) - pc.theta0;
  if (pc.sweep < 0) t = -t;
  t = std::fmod(t, 2.0 * kPi);
  if (t < 0) t += 2.0 * kPi;
  if (t <= std::abs(pc.sweep)) return std::abs(r - pc.rad);
  return std::min(dist(p, pc.a), dist(p, pc.b));
}

}  // namespace

std::vector<Piece> pieces(const CompactSetModel& m) {
  std::vector<Piece> out;
  switch (m.kind) {
    case ModelKind::kPoints:
      break;
    case ModelKind::kCircle:
      out.push_back(arc(m.center, m.radius, 0.0, 2.0 * kPi));
      break;
    case ModelKind::kRectangle: {
      const auto c = rectangle_corners(m);
      for (int i = 0; i < 4; ++i) out.push_back(seg(c[i], c[(i + 1) % 4]));
      break;
    }
    case ModelKind::kStadium: {
      const double h = 0.5 * m.core_length, R = m.radius;
      const Point cl = m.center - Point{h, 0}, cr = m.center + Point{h, 0};
      if (h > 0) out.push_back(seg(cl + Point{0, -R}, cr + Point{0, -R}));
      out.push_back(arc(cr, R, -0.5 * kPi, kPi));
      if (h > 0) out.push_back(seg(cr + Point{0, R}, cl + Point{0, R}));
      out.push_back(arc(cl, R, 0.5 * kPi, kPi));
      break;
    }
    case ModelKind::kPolyline: {
      const std::size_t n = m.points.size();
      for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(seg(m.points[i], m.points[i + 1]));
      if (m.closed) out.push_back(seg(m.points[n - 1], m.points[0]));
      break;
    }
  }
  return out;
}

SampleNet sample(const CompactSetModel& m, double eps) {
  SampleNet net;
  if (m.kind == ModelKind::kPoints) {
    net.points = m.points;
    net.mesh = 0.0;
    return net;
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("sample: eps must be positive");
  const auto ps = pieces(m);
  for (const Piece& pc : ps) {
    const double len = pc.length();
    const int k = std::max(1, static_cast<int>(std::ceil(len / (2.0 * eps))));
    for (int i = 0; i < k; ++i) net.points.push_back(pc.at(len * i / k));
    net.mesh = std::max(net.mesh, 0.5 * len / k);
  }
  if (!m.is_closed_curve()) net.points.push_back(ps.back().end());
  return net;
}

double curve_length(const CompactSetModel& m) {
  double s = 0.0;
  for (const Piece& p : pieces(m)) s += p.length();
  return s;
}

double perimeter(const CompactSetModel& m) {
  if (!m.is_closed_curve()) throw std::invalid_argument("perimeter: model is not a closed curve");
  return curve_length(m);
}

double area(const CompactSetModel& m) {
  switch (m.kind) {
    case ModelKind::kCircle: return kPi * m.radius * m.radius;
    case ModelKind::kRectangle: return m.width * m.height;
    case ModelKind::kStadium: return 2.0 * m.radius * m.core_length + kPi * m.radius * m.radius;
    case ModelKind::kPolyline:
      if (m.closed) return std::abs(signed_area(m.points));
      break;
    default:
      break;
  }
  throw std::invalid_argument("area: model is not a closed curve");
}

Point point_at(const CompactSetModel& m, double u) {
  if (m.kind == ModelKind::kPoints) {
    const auto n = static_cast<long>(m.points.size());
    long i = static_cast<long>(std::floor(u)) % n;
    if (i < 0) i += n;
    return m.points[static_cast<std::size_t>(i)];
  }
  const auto ps = pieces(m);
  const double total = curve_length(m);
  if (m.is_closed_curve()) {
    u = std::fmod(u, total);
    if (u < 0) u += total;
  } else {
    u = std::clamp(u, 0.0, total);
  }
  for (const Piece& p : ps) {
    const double len = p.length();
    if (u <= len) return p.at(u);
    u -= len;
  }
  return ps.back().end();
}

double diameter_scale(const CompactSetModel& m) {
  switch (m.kind) {
    case ModelKind::kCircle: return 2.0 * m.radius;
    case ModelKind::kRectangle: return std::hypot(m.width, m.height);
    case ModelKind::kStadium: return m.core_length + 2.0 * m.radius;
    default: {
      double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
      for (Point p : m.points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
      }
      return std::hypot(xmax - xmin, ymax - ymin);
    }
  }
}

double min_curvature_radius(const CompactSetModel& m) {
  switch (m.kind) {
    case ModelKind::kCircle:
    case ModelKind::kStadium:
      return m.radius;
    case ModelKind::kRectangle:
      return 0.0;
    case ModelKind::kPolyline: {
      const auto& p = m.points;
      const std::size_t n = p.size();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        if (!m.closed && (i == 0 || i + 1 == n)) continue;
        const Point a = p[(i + n - 1) % n], b = p[i], c = p[(i + 1) % n];
        const double th = std::abs(signed_turn(b - a, c - b));
        if (th <= 0.0) continue;
        best = std::min(best, 0.5 * (dist(a, b) + dist(b, c)) / th);
      }
      return best;
    }
    case ModelKind::kPoints:
      break;
  }
  return 0.0;
}

bool is_convex_closed(const CompactSetModel& m) {
  switch (m.kind) {
    case ModelKind::kCircle:
    case ModelKind::kRectangle:
    case ModelKind::kStadium:
      return true;
    case ModelKind::kPolyline: {
      if (!m.closed) return false;
      const auto& p = m.points;
      const std::size_t n = p.size();
      int sign = 0;
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const Point a = p[i], b = p[(i + 1) % n], c = p[(i + 2) % n];
        const double t = signed_turn(b - a, c - b);
        total += t;
        if (std::abs(t) < 1e-12) continue;
        const int s = t > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
      }
      return std::abs(std::abs(total) - 2.0 * kPi) < 1e-6;
    }
    default:
      return false;
  }
}

int arc_segments(double rad, double sweep, double tol) {
  // Sagitta of a chord subtending angle d is rad (1 - cos(d/2)).
  const double s = std::abs(sweep);
  if (!(tol > 0.0)) throw std::invalid_argument("arc_segments: tolerance must be positive");
  if (tol >= rad) return std::max(1, static_cast<int>(std::ceil(s / (kPi / 2))));
  const double d = 2.0 * std::acos(1.0 - tol / rad);
  return std::max(1, static_cast<int>(std::ceil(s / d)));
}

namespace {

std::vector<Point> polygonize(const std::vector<Piece>& ps, double arc_tol) {
  std::vector<Point> out;
  for (const Piece& p : ps) {
    if (!p.is_arc) {
      out.push_back(p.a);
      continue;
    }
    const int k = arc_segments(p.rad, p.sweep, arc_tol);
    for (int i = 0; i < k; ++i) out.push_back(p.c + p.rad * polar(p.theta0 + p.sweep * i / k));
  }
  return out;
}

std::vector<Point> offset_convex_polygon(std::vector<Point> p, double r) {
  if (signed_area(p) < 0) std::reverse(p.begin(), p.end());
  const std::size_t n = p.size();
  std::vector<Point> dirs(n), normals(n);
  for (std::size_t i = 0; i < n; ++i) {
    dirs[i] = unit(p[(i + 1) % n] - p[i]);
    normals[i] = perp(dirs[i]);
  }
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + n - 1) % n;
    const Point pi = p[i] + r * normals[i];
    const Point pj = p[i] + r * normals[j];
    const double den = cross(dirs[j], dirs[i]);
    if (std::abs(den) < 1e-14) {
      out[i] = pi;
    } else {
      const double t = cross(pi - pj, dirs[i]) / den;
      out[i] = pj + t * dirs[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point d = out[(i + 1) % n] - out[i];
    if (dot(d, dirs[i]) <= 0.0) {
      throw std::domain_error("inner_parallel_curve: offset degenerates at this distance");
    }
  }
  return out;
}

}  // namespace

CompactSetModel inner_parallel_curve(const CompactSetModel& m, double r, double arc_tol) {
  if (!(r > 0.0)) throw std::invalid_argument("inner_parallel_curve: r must be positive");
  switch (m.kind) {
    case ModelKind::kCircle:
      if (r >= m.radius) throw std::domain_error("inner_parallel_curve: r >= curvature radius");
      return CompactSetModel::polyline(
          polygonize(pieces(CompactSetModel::circle(m.center, m.radius - r)), arc_tol), true);
    case ModelKind::kStadium:
      if (r >= m.radius) throw std::domain_error("inner_parallel_curve: r >= curvature radius");
      return CompactSetModel::polyline(
          polygonize(pieces(CompactSetModel::stadium(m.center, m.radius - r, m.core_length)),
                     arc_tol),
          true);
    case ModelKind::kRectangle:
      if (2.0 * r >= std::min(m.width, m.height)) {
        throw std::domain_error("inner_parallel_curve: offset degenerates at this distance");
      }
      return CompactSetModel::polyline(offset_convex_polygon(rectangle_corners(m), r), true);
    case ModelKind::kPolyline:
      if (!is_convex_closed(m)) throw std::invalid_argument("inner_parallel_curve: needs a convex closed curve");
      return CompactSetModel::polyline(offset_convex_polygon(m.points, r), true);
    default:
      break;
  }
  throw std::invalid_argument("inner_parallel_curve: needs a convex closed curve");
}

Network model_network(const CompactSetModel& m, double arc_tol) {
  if (m.kind == ModelKind::kPoints) {
    throw std::invalid_argument("model_network: finite point sets are not connected curves");
  }
  std::vector<Point> pts = polygonize(pieces(m), arc_tol);
  if (!m.is_closed_curve()) pts.push_back(pieces(m).back().end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) edges.push_back({i, i + 1});
  if (m.is_closed_curve()) edges.push_back({pts.size() - 1, 0});
  return Network::build(pts, edges);
}

double dist_to_model(Point p, const CompactSetModel& m) {
  double best = std::numeric_limits<double>::infinity();
  if (m.kind == ModelKind::kPoints) {
    for (Point q : m.points) best = std::min(best, dist(p, q));
    return best;
  }
  for (const Piece& pc : pieces(m)) {
    best = std::min(best, pc.is_arc ? dist_point_arc(p, pc) : dist_point_segment(p, pc.a, pc.b));
  }
  return best;
}

}  // namespace mdmin
