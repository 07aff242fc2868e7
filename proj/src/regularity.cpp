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

#include "mdmin/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mdmin {

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

void CheckReport::append(const CheckReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
  if (other.branch_count >= 0) branch_count = other.branch_count;
}

std::vector<CheckItem> CheckReport::failures() const {
  std::vector<CheckItem> out;
  for (const auto& i : items) {
    if (!i.passed) out.push_back(i);
  }
  return out;
}

namespace {

std::string vertex_loc(std::size_t v) { return "vertex " + std::to_string(v); }

double min_pairwise_angle(const std::vector<Ray>& rays) {
  double m = kPi;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) m = std::min(m, angle_between(rays[i], rays[j]));
  }
  return m;
}

}  // namespace

CheckReport check_angles(const Network& n, double tol_angle) {
  CheckReport rep;
  double worst = kPi;
  std::size_t worst_v = 0;
  for (std::size_t v = 0; v < n.num_vertices(); ++v) {
    if (n.degree(v) < 2) continue;
    const double a = min_pairwise_angle(tangent_rays_at(n, v));
    if (a < worst) {
      worst = a;
      worst_v = v;
    }
    if (a < kTwoPiOverThree - tol_angle) {
      rep.add({"angle", false, a, kTwoPiOverThree, tol_angle, vertex_loc(v)});
    }
  }
  rep.add({"min_angle", worst >= kTwoPiOverThree - tol_angle, worst, kTwoPiOverThree, tol_angle,
           vertex_loc(worst_v)});
  const std::size_t md = n.max_degree();
  rep.add({"max_degree", md <= 3, static_cast<double>(md), 3.0, 0.0, "network"});
  return rep;
}

CheckReport check_branching(const Network& n, double tol_angle) {
  CheckReport rep;
  long count = 0;
  double worst = 0.0;
  std::size_t worst_v = 0;
  for (std::size_t v = 0; v < n.num_vertices(); ++v) {
    const std::size_t d = n.degree(v);
    if (d > 3) {
      rep.add({"degree", false, static_cast<double>(d), 3.0, 0.0, vertex_loc(v)});
      continue;
    }
    if (d != 3) continue;
    ++count;
    const auto rays = tangent_rays_at(n, v);
    double dev = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        dev = std::max(dev, std::abs(angle_between(rays[i], rays[j]) - kTwoPiOverThree));
      }
    }
    if (dev > worst) {
      worst = dev;
      worst_v = v;
    }
    if (dev > tol_angle) rep.add({"branch_angle", false, dev, 0.0, tol_angle, vertex_loc(v)});
  }
  rep.add({"max_branch_deviation", worst <= tol_angle, worst, 0.0, tol_angle, vertex_loc(worst_v)});
  rep.branch_count = count;
  return rep;
}

CheckReport check_tree(const Network& n) {
  CheckReport rep;
  const double excess = static_cast<double>(n.num_edges()) + 1.0 - static_cast<double>(n.num_vertices());
  rep.add({"tree", is_tree(n), excess, 0.0, 0.0, "network"});
  return rep;
}

double turn(const Network& n, const PathTrace& path) {
  if (!is_valid_path(n, path)) throw std::invalid_argument("turn: invalid path");
  double t = 0.0;
  for (std::size_t i = 0; i + 2 < path.size(); ++i) {
    const Point d1 = n.vertex(path[i + 1]) - n.vertex(path[i]);
    const Point d2 = n.vertex(path[i + 2]) - n.vertex(path[i + 1]);
    t += signed_turn(d1, d2);
  }
  return t;
}

double ahlfors_density(const Network& n, Point x, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("ahlfors_density: eps must be positive");
  double h = 0.0;
  for (std::size_t e = 0; e < n.num_edges(); ++e) {
    const Point a = n.vertex(n.edges()[e].first), b = n.vertex(n.edges()[e].second);
    double t[2];
    if (line_circle_params(a, b, x, eps, t) != 2) continue;
    const double lo = std::max(0.0, t[0]), hi = std::min(1.0, t[1]);
    if (hi > lo) h += (hi - lo) * dist(a, b);
  }
  return h / eps;
}

namespace {

// Groups witnesses into clusters of mutually chained points.
std::vector<std::vector<Point>> cluster_points(const std::vector<Point>& pts, double radius) {
  std::vector<int> label(pts.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (label[j] < 0 && dist(pts[a], pts[j]) <= radius) {
          label[j] = next;
          stack.push_back(j);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<Point>> out(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < pts.size(); ++i) out[static_cast<std::size_t>(label[i])].push_back(pts[i]);
  return out;
}

// Witness whose distance to the network is largest.
Point representative(const Network& n, const std::vector<Point>& ws) {
  Point best = ws.front();
  double bd = -1.0;
  for (Point w : ws) {
    const double d = nearest_on_network(w, n).distance;
    if (d > bd) {
      bd = d;
      best = w;
    }
  }
  return best;
}

double witness_cluster_radius(const EnergeticClassification& cls) {
  return 2.0 * cls.mesh + 2.0 * cls.tol + 1e-12;
}

}  // namespace

CheckReport check_energetic_angles(const Network& n, const EnergeticClassification& cls,
                                   EnergeticAngleOptions opt) {
  CheckReport rep;
  const double tol = opt.tol + (cls.r > 0 ? 2.0 * cls.mesh / cls.r : 0.0);
  double worst = 0.0;
  for (const auto& e : cls.points) {
    if (e.vertex < 0 || (!e.isolated && !opt.include_non_isolated)) continue;
    const auto v = static_cast<std::size_t>(e.vertex);
    const std::size_t d = n.degree(v);
    if (d != 1 && d != 2) continue;
    const auto clusters = cluster_points(e.witnesses, witness_cluster_radius(cls));
    if (clusters.size() != 1) continue;
    const Point y = representative(n, clusters.front());
    const Point x = n.vertex(v);
    double res;
    std::string name;
    if (d == 1) {
      const Point z = n.vertex(n.neighbors(v)[0]);
      res = kPi - angle_between(y - x, z - x);
      name = "leaf_collinearity";
    } else {
      const Point z1 = n.vertex(n.neighbors(v)[0]), z2 = n.vertex(n.neighbors(v)[1]);
      res = std::abs(angle_between(z1 - x, y - x) - angle_between(y - x, z2 - x));
      name = "bisector";
    }
    worst = std::max(worst, res);
    rep.add({name, res <= tol, res, 0.0, tol, vertex_loc(v)});
  }
  rep.add({"energetic_angle_worst", worst <= tol, worst, 0.0, tol, "network"});
  return rep;
}

double stationarity_residual(const StationarityCase& c) {
  switch (c.tag) {
    case 1:
      return std::cos(c.alpha);
    case 2:
      return 2.0 * std::cos(c.alpha) * std::cos(0.5 * c.branch_angle);
    case 3:
    case 4: {
      const double s2 = std::sin(2.0 * c.alpha);
      if (std::abs(s2) < 1e-12) throw std::domain_error("stationarity_residual: sin(2 alpha) = 0");
      const double f = std::cos(c.alpha + c.delta) / s2;
      if (c.tag == 3) return f * std::sin(c.alpha + c.beta);
      return f * (std::sin(c.alpha + c.beta) + std::sin(c.alpha + c.gamma));
    }
    default:
      throw std::invalid_argument("stationarity_residual: case tag must be 1..4");
  }
}

void model_frame_at(const CompactSetModel& m, Point y, Point& tangent, Point& inward, double tol) {
  const auto ps = pieces(m);
  if (ps.empty()) throw std::domain_error("model_frame_at: finite M has no tangent");
  double orient = 1.0;
  if (m.kind == ModelKind::kPolyline && m.closed) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.points.size(); ++i) {
      s += cross(m.points[i], m.points[(i + 1) % m.points.size()]);
    }
    if (s < 0) orient = -1.0;
  }
  double best = std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  double bs = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Piece& pc = ps[i];
    double s;
    if (pc.is_arc) {
      double t = std::atan2(y.y - pc.c.y, y.x - pc.c.x) - pc.theta0;
      if (pc.sweep < 0) t = -t;
      t = std::fmod(t, 2.0 * kPi);
      if (t < 0) t += 2.0 * kPi;
      s = std::min(t * pc.rad, pc.length());
    } else {
      s = project_param(y, pc.a, pc.b) * pc.length();
    }
    const double d = dist(pc.at(s), y);
    if (d < best) {
      best = d;
      bi = i;
      bs = s;
    }
  }
  if (best > tol) throw std::domain_error("model_frame_at: point is not on M");
  const Piece& pc = ps[bi];
  const bool closed = m.is_closed_curve();
  auto check_corner = [&](Point t_here, std::size_t other, bool at_start) {
    const Point t_other = at_start ? ps[other].tangent(ps[other].length()) : ps[other].tangent(0.0);
    if (angle_between(t_here, t_other) > 1e-9) {
      throw std::domain_error("model_frame_at: case unknown at a corner of M");
    }
  };
  if (bs <= tol) {
    if (bi > 0 || closed) check_corner(pc.tangent(0.0), (bi + ps.size() - 1) % ps.size(), true);
  }
  if (bs >= pc.length() - tol) {
    if (bi + 1 < ps.size() || closed) check_corner(pc.tangent(pc.length()), (bi + 1) % ps.size(), false);
  }
  tangent = orient * pc.tangent(bs);
  inward = perp(tangent);
}

CheckReport check_equal_derivatives(const Network& n, const EnergeticClassification& cls,
                                    Point y, const CompactSetModel& m, double tol,
                                    std::vector<LocalDerivative>* detail) {
  Point l, nin;
  model_frame_at(m, y, l, nin, std::max(1e-7, cls.mesh));
  const double band = cls.tol + cls.mesh;
  std::vector<const EnergeticPoint*> on_circle;
  for (const auto& e : cls.points) {
    if (std::abs(dist(e.x, y) - cls.r) <= band) on_circle.push_back(&e);
  }
  if (on_circle.size() < 2) {
    throw std::invalid_argument("check_equal_derivatives: fewer than two energetic points on the circle");
  }
  // Keep one point on each side of the normal line, closest to the circle.
  const EnergeticPoint* pick[2] = {nullptr, nullptr};
  for (const auto* e : on_circle) {
    const int s = cross(nin, e->x - y) >= 0 ? 0 : 1;
    if (!pick[s] || std::abs(dist(e->x, y) - cls.r) < std::abs(dist(pick[s]->x, y) - cls.r)) pick[s] = e;
  }
  CheckReport rep;
  const bool opposite = pick[0] && pick[1];
  rep.add({"opposite_sides", opposite, opposite ? 1.0 : 0.0, 1.0, 0.0, "witness"});
  if (!opposite) return rep;

  double d[2];
  for (int k = 0; k < 2; ++k) {
    const EnergeticPoint& e = *pick[k];
    const Point x = e.x;
    std::vector<Point> zs;
    if (e.vertex >= 0) {
      for (std::size_t w : n.neighbors(static_cast<std::size_t>(e.vertex))) zs.push_back(n.vertex(w));
    } else {
      const Edge ed = n.edges()[static_cast<std::size_t>(e.edge)];
      zs = {n.vertex(ed.first), n.vertex(ed.second)};
    }
    if (zs.empty() || zs.size() > 2) {
      throw std::domain_error("check_equal_derivatives: case unknown (degree " +
                              std::to_string(zs.size()) + ")");
    }
    // Other correspondences: witnesses away from y.
    std::vector<Point> others;
    for (Point w : e.witnesses) {
      if (dist(w, y) > witness_cluster_radius(cls)) others.push_back(w);
    }
    const auto clusters = cluster_points(others, witness_cluster_radius(cls));
    if (clusters.size() > 1) throw std::domain_error("check_equal_derivatives: case unknown (3+ witnesses)");
    LocalDerivative ld;
    ld.x = x;
    ld.side = k == 0 ? 1 : -1;
    if (clusters.empty()) {
      ld.c.tag = zs.size() == 1 ? 1 : 2;
      ld.c.alpha = angle_between(y - x, l);
      if (zs.size() == 2) ld.c.branch_angle = angle_between(zs[0] - x, zs[1] - x);
    } else {
      const Point y2 = representative(n, clusters.front());
      const Point e1 = unit(y2 - y);
      Point e2 = perp(e1);
      if (dot(e2, x - y) < 0) e2 = -e2;
      ld.c.tag = zs.size() == 1 ? 3 : 4;
      ld.c.alpha = angle_between(x - y, y2 - y);
      ld.c.delta = -std::atan2(dot(l, e2), dot(l, e1));
      auto frame_angle = [&](Point z) {
        const Point u = x - z;
        return std::atan2(dot(u, e2), dot(u, e1));
      };
      ld.c.beta = frame_angle(zs[0]);
      if (zs.size() == 2) ld.c.gamma = frame_angle(zs[1]);
    }
    ld.value = stationarity_residual(ld.c);
    d[k] = ld.value;
    if (detail) detail->push_back(ld);
  }
  const double res = std::abs(d[0] + d[1]);
  rep.add({"equal_derivatives", res <= tol, res, 0.0, tol, "witness"});
  return rep;
}

namespace {

double piece_param(const Piece& pc, Point y) {
  if (!pc.is_arc) {
    const double len = pc.length();
    return std::clamp(dot(y - pc.a, pc.b - pc.a) / len, 0.0, len);
  }
  double t = std::atan2(y.y - pc.c.y, y.x - pc.c.x) - pc.theta0;
  if (pc.sweep < 0) t = -t;
  t = std::fmod(t, 2.0 * kPi);
  if (t < 0) t += 2.0 * kPi;
  return std::min(t * pc.rad, pc.length());
}

// Moves each witness along M to the nearby local maximum of dist(., n), which
// is where the true farthest point sits; sampled witnesses can be off by more
// than the net spacing when the circle about x meets M at a shallow angle.
void refine_witnesses(EnergeticClassification& cls, const Network& n, const CompactSetModel& m) {
  const auto ps = pieces(m);
  if (ps.empty()) return;
  const double h = 4.0 * (cls.mesh + cls.tol);
  auto f = [&](const Piece& pc, double s) { return nearest_on_network(pc.at(s), n).distance; };
  for (auto& e : cls.points) {
    for (Point& w : e.witnesses) {
      std::size_t bi = 0;
      double bd = std::numeric_limits<double>::infinity(), bs = 0.0;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const double s = piece_param(ps[i], w);
        const double d = dist(ps[i].at(s), w);
        if (d < bd) bd = d, bi = i, bs = s;
      }
      const Piece& pc = ps[bi];
      double lo = std::max(0.0, bs - h), hi = std::min(pc.length(), bs + h);
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
        if (f(pc, a) < f(pc, b)) lo = a; else hi = b;
      }
      const double s = 0.5 * (lo + hi);
      if (std::abs(f(pc, s) - cls.r) <= cls.tol + cls.mesh) w = pc.at(s);
    }
  }
}

}  // namespace

CheckReport full_check_suite(const Network& n, const CompactSetModel& m, double r, SuiteOptions opt) {
  CheckReport rep;
  rep.append(check_tree(n));
  rep.append(check_angles(n, opt.tol_angle));
  rep.append(check_branching(n, opt.tol_angle));
  const SampleNet s = sample(m, r > 0.0 ? opt.rel_mesh * r : opt.rel_mesh);
  const EnergyReport e = energy(s, n);
  const bool cov = covered(s, n, r);
  rep.add({"covered", cov, e.value, r + s.mesh, kGeomTol, "network"});
  if (cov && r > 0.0) {
    auto cls = classify_energetic(n, s, r, opt.classify_tol);
    refine_witnesses(cls, n, m);
    EnergeticAngleOptions eo;
    eo.tol = opt.tol_angle;
    rep.append(check_energetic_angles(n, cls, eo));
  }
  return rep;
}

}  // namespace mdmin
