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

#include "mdmin/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mdmin {

EnergyReport energy(const SampleNet& s, const Network& n, double tol_argmax) {
  if (s.points.empty() || n.empty()) throw std::invalid_argument("energy: empty input");
  EnergyReport rep;
  rep.mesh = s.mesh;
  std::vector<NearestOnNetwork> near(s.points.size());
  const EdgeIndex index(n);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    near[i] = index.nearest(s.points[i]);
    rep.value = std::max(rep.value, near[i].distance);
  }
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    if (near[i].distance >= rep.value - tol_argmax) {
      rep.argmax.push_back(i);
      rep.nearest.push_back(near[i].nearest);
    }
  }
  return rep;
}

bool covered(const SampleNet& s, const Network& n, double r, double tol) {
  return energy(s, n).value <= r + s.mesh + tol;
}

std::vector<Point> EnergeticClassification::energetic_non_isolated() const {
  std::vector<Point> out;
  for (const auto& p : points) {
    if (!p.isolated) out.push_back(p.x);
  }
  return out;
}

std::vector<Point> EnergeticClassification::energetic_isolated() const {
  std::vector<Point> out;
  for (const auto& p : points) {
    if (p.isolated) out.push_back(p.x);
  }
  return out;
}

EnergeticClassification classify_energetic(const Network& n, const SampleNet& s, double r,
                                           double tol, ClassifyOptions opt) {
  if (!covered(s, n, r, tol)) throw std::invalid_argument("classify_energetic: network does not cover M");
  EnergeticClassification cls;
  cls.r = r;
  cls.tol = tol;
  cls.mesh = s.mesh;
  const double merge = opt.merge_radius > 0 ? opt.merge_radius : tol;
  cls.isolation_radius = opt.isolation_radius > 0 ? opt.isolation_radius
                                                  : std::max(10.0 * tol, 4.0 * s.mesh);
  const EdgeIndex index(n);
  std::vector<std::pair<Point, double>> band;
  for (const Point& y : s.points) {
    const NearestOnNetwork nn = index.nearest(y);
    if (nn.distance >= r - tol - s.mesh && nn.distance <= r + s.mesh + tol) band.emplace_back(y, nn.distance);
    if (nn.distance < r - tol || nn.distance > r + s.mesh + tol) continue;
    EnergeticPoint* hit = nullptr;
    for (auto& e : cls.points) {
      if (dist(e.x, nn.nearest) <= merge) {
        hit = &e;
        break;
      }
    }
    if (!hit) {
      EnergeticPoint e;
      e.x = nn.nearest;
      if (nn.edge >= 0) {
        const Edge ed = n.edges()[static_cast<std::size_t>(nn.edge)];
        if (dist(nn.nearest, n.vertex(ed.first)) <= merge) {
          e.vertex = static_cast<long>(ed.first);
        } else if (dist(nn.nearest, n.vertex(ed.second)) <= merge) {
          e.vertex = static_cast<long>(ed.second);
        } else {
          e.edge = nn.edge;
          e.param = nn.param;
        }
      } else {
        e.vertex = 0;
      }
      if (e.vertex >= 0) e.x = n.vertex(static_cast<std::size_t>(e.vertex));
      cls.points.push_back(e);
      hit = &cls.points.back();
    }
    hit->witnesses.push_back(y);
  }
  // A leaf tip may be a near-tie nearest point for samples assigned
  // elsewhere or sitting up to one mesh inside its ball; those samples are
  // correspondences of the tip as well.
  for (auto& e : cls.points) {
    if (e.vertex < 0 || n.degree(static_cast<std::size_t>(e.vertex)) != 1) continue;
    for (const auto& [y, d] : band) {
      if (dist(e.x, y) > d + tol + s.mesh) continue;
      if (std::find(e.witnesses.begin(), e.witnesses.end(), y) == e.witnesses.end()) e.witnesses.push_back(y);
    }
  }
  for (std::size_t i = 0; i < cls.points.size(); ++i) {
    bool alone = true;
    for (std::size_t j = 0; j < cls.points.size() && alone; ++j) {
      if (i != j && dist(cls.points[i].x, cls.points[j].x) <= cls.isolation_radius) alone = false;
    }
    cls.points[i].isolated = alone;
  }
  cls.steiner_vertex.assign(n.num_vertices(), true);
  cls.steiner_edge.assign(n.num_edges(), true);
  for (const auto& e : cls.points) {
    if (e.vertex >= 0) cls.steiner_vertex[static_cast<std::size_t>(e.vertex)] = false;
    if (e.edge >= 0) cls.steiner_edge[static_cast<std::size_t>(e.edge)] = false;
  }
  return cls;
}

namespace {

struct Interval {
  double lo, hi;
};

// Parameter interval of the line p0 + t u (|u| = 1) inside the capsule of
// radius r around [ab]; empty when lo > hi.
Interval line_capsule(Point p0, Point u, Point a, Point b, double r) {
  Interval out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  auto disk = [&](Point c) {
    double t[2];
    const int k = line_circle_params(p0, p0 + u, c, r, t);
    if (k == 2) {
      out.lo = std::min(out.lo, t[0]);
      out.hi = std::max(out.hi, t[1]);
    } else if (k == 1) {
      out.lo = std::min(out.lo, t[0]);
      out.hi = std::max(out.hi, t[0]);
    }
  };
  disk(a);
  disk(b);
  const Point d = b - a;
  const double len = norm(d);
  if (len > 0) {
    const Point e = d / len;
    // Constraints: 0 <= dot(p - a, e) <= len and |cross(e, p - a)| <= r.
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    auto clip = [&](double c0, double c1, double lb, double ub) {
      // lb <= c0 + c1 t <= ub
      if (c1 == 0.0) {
        if (c0 < lb || c0 > ub) { lo = 1; hi = 0; }
        return;
      }
      double t1 = (lb - c0) / c1, t2 = (ub - c0) / c1;
      if (t1 > t2) std::swap(t1, t2);
      lo = std::max(lo, t1);
      hi = std::min(hi, t2);
    };
    clip(dot(p0 - a, e), dot(u, e), 0.0, len);
    clip(cross(e, p0 - a), cross(e, u), -r, r);
    if (lo <= hi) {
      out.lo = std::min(out.lo, lo);
      out.hi = std::max(out.hi, hi);
    }
  }
  return out;
}

// Arc-length parameters where the arc piece meets the circle (c, rad).
void arc_circle_params(const Piece& pc, Point c, double rad, std::vector<double>& out) {
  const Point d = c - pc.c;
  const double D = norm(d);
  if (D == 0.0) return;
  const double a = (pc.rad * pc.rad - rad * rad + D * D) / (2.0 * D);
  const double h2 = pc.rad * pc.rad - a * a;
  if (h2 < 0.0) return;
  const double h = std::sqrt(h2);
  const Point base = pc.c + (a / D) * d;
  const Point off = (h / D) * perp(d);
  for (Point q : {base + off, base - off}) {
    double t = std::atan2(q.y - pc.c.y, q.x - pc.c.x) - pc.theta0;
    if (pc.sweep < 0) t = -t;
    t = std::fmod(t, 2.0 * kPi);
    if (t < 0) t += 2.0 * kPi;
    out.push_back(t * pc.rad);
  }
}

void arc_line_params(const Piece& pc, Point p, Point q, std::vector<double>& out) {
  double t[2];
  const int k = line_circle_params(p, q, pc.c, pc.rad, t);
  for (int i = 0; i < k; ++i) {
    const Point x = lerp(p, q, t[i]);
    double a = std::atan2(x.y - pc.c.y, x.x - pc.c.x) - pc.theta0;
    if (pc.sweep < 0) a = -a;
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0) a += 2.0 * kPi;
    out.push_back(a * pc.rad);
  }
}

bool piece_covered(const Piece& pc, const Network& n, double r) {
  const double len = pc.length();
  std::vector<Interval> iv;
  for (std::size_t e = 0; e < n.num_edges() || (e == 0 && n.num_edges() == 0); ++e) {
    const Point a = n.num_edges() ? n.vertex(n.edges()[e].first) : n.vertex(0);
    const Point b = n.num_edges() ? n.vertex(n.edges()[e].second) : n.vertex(0);
    if (!pc.is_arc) {
      const Interval t = line_capsule(pc.a, unit(pc.b - pc.a), a, b, r);
      if (t.lo <= t.hi && t.hi >= 0.0 && t.lo <= len) iv.push_back({std::max(0.0, t.lo), std::min(len, t.hi)});
      continue;
    }
    std::vector<double> cuts{0.0, len};
    arc_circle_params(pc, a, r, cuts);
    arc_circle_params(pc, b, r, cuts);
    if (dist(a, b) > 0) {
      const Point nrm = r * perp(unit(b - a));
      arc_line_params(pc, a + nrm, b + nrm, cuts);
      arc_line_params(pc, a - nrm, b - nrm, cuts);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i], hi = std::min(cuts[i + 1], len);
      if (lo > len || hi < lo) continue;
      if (dist_point_segment(pc.at(0.5 * (lo + hi)), a, b) <= r) iv.push_back({lo, hi});
    }
    if (n.num_edges() == 0) break;
  }
  std::sort(iv.begin(), iv.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  const double gap_tol = 1e-12 * std::max(1.0, len);
  double reach = 0.0;
  for (const Interval& t : iv) {
    if (t.lo > reach + gap_tol) return false;
    reach = std::max(reach, t.hi);
  }
  return reach >= len - gap_tol;
}

}  // namespace

bool covers_exactly(const CompactSetModel& m, const Network& n, double r) {
  if (n.empty()) throw std::invalid_argument("covers_exactly: empty network");
  if (m.kind == ModelKind::kPoints) {
    for (Point p : m.points) {
      if (nearest_on_network(p, n).distance > r) return false;
    }
    return true;
  }
  for (const Piece& pc : pieces(m)) {
    if (!piece_covered(pc, n, r)) return false;
  }
  return true;
}

double exact_energy(const CompactSetModel& m, const Network& n, double precision) {
  if (m.kind == ModelKind::kPoints) return energy(sample(m, 1.0), n).value;
  const double eps = 1e-3 * std::max(diameter_scale(m), 1e-300);
  const SampleNet s = sample(m, eps);
  double lo = energy(s, n).value;
  double hi = lo + s.mesh;
  while (!covers_exactly(m, n, hi)) hi += s.mesh;
  while (hi - lo > precision) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (covers_exactly(m, n, mid)) hi = mid; else lo = mid;
  }
  return hi;
}

}  // namespace mdmin
