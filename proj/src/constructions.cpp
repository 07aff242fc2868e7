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

#include "mdmin/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "mdmin/energy.hpp"
#include "mdmin/optimize.hpp"

namespace mdmin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimises a unimodal f on [lo, hi]; returns the argmin.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

// Appends the corners and the end point of a polygon circumscribed about
// the arc (c, rho, th0, sweep); the start point is not appended.
void append_circumscribed_arc(std::vector<Point>& pts, Point c, double rho, double th0, double sweep,
                              double tol) {
  const double d_max = 2.0 * std::acos(1.0 / (1.0 + tol / rho));
  const int k = std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / d_max)));
  const double d = sweep / k;
  const double rc = rho / std::cos(0.5 * d);
  for (int i = 0; i < k; ++i) pts.push_back(c + rc * polar(th0 + (i + 0.5) * d));
  pts.push_back(c + rho * polar(th0 + sweep));
}

Network path_network(const std::vector<Point>& pts) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) e.push_back({i, i + 1});
  return Network::build(pts, e);
}

// Pieces of the inner parallel curve at distance r, counterclockwise.
std::vector<Piece> inner_pieces(const CompactSetModel& m, double r) {
  switch (m.kind) {
    case ModelKind::kCircle:
      return pieces(CompactSetModel::circle(m.center, m.radius - r));
    case ModelKind::kStadium:
      return pieces(CompactSetModel::stadium(m.center, m.radius - r, m.core_length));
    case ModelKind::kRectangle:
    case ModelKind::kPolyline:
      return pieces(inner_parallel_curve(m, r));
    default:
      throw std::invalid_argument("horseshoe: M must be a convex closed curve");
  }
}

struct PieceCursor {
  const std::vector<Piece>& ps;
  std::vector<double> start;
  double total = 0.0;
  explicit PieceCursor(const std::vector<Piece>& p) : ps(p) {
    for (const auto& q : ps) {
      start.push_back(total);
      total += q.length();
    }
  }
  // Piece index and local arc-length for global arc-length u (wrapped).
  std::pair<std::size_t, double> locate(double u) const {
    u = std::fmod(u, total);
    if (u < 0) u += total;
    const auto it = std::upper_bound(start.begin(), start.end(), u);
    const std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - start.begin() - 1));
    return {i, std::min(u - start[i], ps[i].length())};
  }
  Point at(double u) const {
    auto [i, s] = locate(u);
    return ps[i].at(s);
  }
  Point tangent(double u) const {
    auto [i, s] = locate(u);
    return ps[i].tangent(s);
  }
};

// Smallest s >= 0 with |e + s dir - y| <= r, or infinity.
double reach_length(Point e, Point dir, Point y, double r) {
  const Point w = e - y;
  if (norm(w) <= r) return 0.0;
  const double b = dot(w, dir);
  const double disc = b * b - norm2(w) + r * r;
  if (disc < 0.0) return kInf;
  const double s = -b - std::sqrt(disc);
  return s >= 0.0 ? s : kInf;
}

}  // namespace

ConstructionResult segment_two_balls(Point p, Point q, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("segment_two_balls: r must be positive");
  ConstructionResult res;
  res.name = "segment";
  res.claimed_r = r;
  res.m = CompactSetModel::finite({p, q});
  const double d = dist(p, q);
  if (d <= 2.0 * r) {
    res.network = Network::single(lerp(p, q, 0.5));
  } else {
    const Point u = (q - p) / d;
    res.network = Network({p + r * u, q - r * u}, {{0, 1}});
  }
  res.params = {{"length", length(res.network)}};
  return res;
}

Point fermat_point(Point a, Point b, Point c) {
  // Apex of the equilateral triangle erected outward on side bc, then on ca.
  auto apex = [](Point p, Point q, Point away) {
    const Point m1 = p + rotate(q - p, kPi / 3), m2 = p + rotate(q - p, -kPi / 3);
    return dist(m1, away) > dist(m2, away) ? m1 : m2;
  };
  const Point a2 = apex(b, c, a), b2 = apex(c, a, b);
  const Point d1 = a2 - a, d2 = b2 - b;
  const double den = cross(d1, d2);
  if (std::abs(den) < 1e-300) throw std::domain_error("fermat_point: degenerate triangle");
  const double t = cross(b - a, d2) / den;
  return a + t * d1;
}

ConstructionResult tripod(Point a, Point b, Point c, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("tripod: r must be non-negative");
  ConstructionResult res;
  res.name = "tripod";
  res.claimed_r = r;
  res.m = CompactSetModel::finite({a, b, c});
  const std::array<Point, 3> v{a, b, c};
  bool obtuse = false;
  for (int i = 0; i < 3; ++i) {
    const Point p = v[i], q = v[(i + 1) % 3], s = v[(i + 2) % 3];
    if (dist(p, q) == 0.0 || dist(p, s) == 0.0) throw std::invalid_argument("tripod: repeated points");
    obtuse = obtuse || angle_between(q - p, s - p) >= kTwoPiOverThree;
  }
  double best = std::numeric_limits<double>::infinity();
  if (!obtuse) {
    const Point f = fermat_point(a, b, c);
    bool legs_ok = true;
    for (Point p : v) legs_ok = legs_ok && dist(f, p) > r;
    if (legs_ok) {
      std::vector<Point> verts{f};
      for (Point p : v) verts.push_back(p + r * unit(f - p));
      res.network = Network(verts, {{0, 1}, {0, 2}, {0, 3}});
      best = length(res.network);
      res.params = {{"steiner_length", dist(f, a) + dist(f, b) + dist(f, c)}, {"fermat_x", f.x}, {"fermat_y", f.y}};
    }
  }
  // With r > 0 a path bending inside the middle ball can beat the star.
  for (int mid = 0; mid < 3; ++mid) {
    const int i1 = (mid + 1) % 3, i2 = (mid + 2) % 3;
    FixedTopologyProblem p;
    p.num_vertices = 3;
    p.edges = {{0, 1}, {1, 2}};
    p.disks = {DiskConstraint::vertex(0, v[i1], r), DiskConstraint::vertex(1, v[mid], r),
               DiskConstraint::vertex(2, v[i2], r)};
    const auto sol = r > 0.0 ? minimize_length(p, {v[i1], v[mid], v[i2]})
                             : FixedTopologyResult{{v[i1], v[mid], v[i2]}, 0.0, true, true, 0};
    const Network net = Network::build(sol.positions, p.edges);
    const double len = length(net);
    if (len < best - 1e-12) {
      best = len;
      res.network = net;
      res.params.clear();
    }
  }
  res.params["length"] = best;
  return res;
}

ConstructionResult horseshoe_with_gap(const CompactSetModel& m, double r, double u, double g,
                                      const ConstructionOptions& opt) {
  const auto ps = inner_pieces(m, r);
  PieceCursor cur(ps);
  const double P = cur.total;
  ConstructionResult res;
  res.name = "horseshoe";
  res.claimed_r = r;
  res.m = m;
  const Point mid = cur.at(u);
  const Point tmid = cur.tangent(u);
  const Point y0 = mid + r * Point{tmid.y, -tmid.x};
  const Point e1 = cur.at(u + g), t1 = cur.tangent(u + g);
  const Point e2 = cur.at(u - g), t2 = cur.tangent(u - g);
  const double s1 = reach_length(e1, -t1, y0, r);
  const double s2 = reach_length(e2, t2, y0, r);
  res.witnesses = {y0};
  res.params = {{"gap_center", u}, {"gap_half", g}, {"tip1", s1}, {"tip2", s2}, {"inner_length", P}};
  if (!std::isfinite(s1) || !std::isfinite(s2)) {
    res.params["length"] = kInf;
    return res;
  }
  const double tol = opt.rel_arc_tol * r;
  std::vector<Point> pts;
  if (s1 > 0) pts.push_back(e1 - s1 * t1);
  pts.push_back(e1);
  // Walk the inner curve from u + g to u - g + P.
  double pos = u + g;
  const double stop = u - g + P;
  while (pos < stop - 1e-15 * P) {
    auto [i, s] = cur.locate(pos);
    const Piece& pc = ps[i];
    double len = pc.length();
    if (s >= len - 1e-15 * P) {
      // At a piece end: move to the next piece start.
      i = (i + 1) % ps.size();
      s = 0.0;
      len = ps[i].length();
    }
    const Piece& q = ps[i];
    const double take = std::min(len - s, stop - pos);
    if (q.is_arc) {
      const double th0 = q.theta0 + std::copysign(s / q.rad, q.sweep);
      append_circumscribed_arc(pts, q.c, q.rad, th0, std::copysign(take / q.rad, q.sweep), tol);
    } else {
      pts.push_back(q.at(s + take));
    }
    pos += take;
  }
  if (s2 > 0) pts.push_back(e2 + s2 * t2);
  res.network = path_network(pts);
  res.params["length"] = length(res.network);
  return res;
}

ConstructionResult horseshoe(const CompactSetModel& m, double r, const ConstructionOptions& opt) {
  m.validate();
  if (!(r > 0.0)) throw std::invalid_argument("horseshoe: r must be positive");
  if (!is_convex_closed(m)) throw std::invalid_argument("horseshoe: M must be a convex closed curve");
  const double rho_min = min_curvature_radius(m);
  if (opt.require_minimizer_regime) {
    const bool ok = m.kind == ModelKind::kCircle ? m.radius > 4.98 * r : rho_min >= 5.0 * r;
    if (!ok) throw std::domain_error("horseshoe: curvature radius too small for the minimiser regime");
  } else if (m.kind != ModelKind::kRectangle && m.kind != ModelKind::kPolyline && !(rho_min > r)) {
    throw std::domain_error("horseshoe: r must be below the curvature radius");
  }
  const auto ps = inner_pieces(m, r);
  const PieceCursor cur(ps);
  const double P = cur.total;
  const double tol = opt.search_tol * std::max(1.0, P);

  auto length_at = [&](double u, double g) {
    const Point mid = cur.at(u), tm = cur.tangent(u);
    const Point y0 = mid + r * Point{tm.y, -tm.x};
    const double s1 = reach_length(cur.at(u + g), -cur.tangent(u + g), y0, r);
    const double s2 = reach_length(cur.at(u - g), cur.tangent(u - g), y0, r);
    return P - 2.0 * g + s1 + s2;
  };
  // Gap half-widths on a grid of spacing at most r / 4, refined by golden
  // section around the best grid point.
  const int ng = std::max(32, static_cast<int>(std::ceil(2.0 * P / r)));
  auto best_gap = [&](double u) {
    const double hi = 0.5 * P * (1.0 - 1e-9);
    int ib = 0;
    double lb = kInf;
    for (int i = 0; i <= ng; ++i) {
      const double l = length_at(u, hi * i / ng);
      if (l < lb) {
        lb = l;
        ib = i;
      }
    }
    const double g = golden_min([&](double x) { return length_at(u, x); }, hi * std::max(0, ib - 1) / ng,
                                hi * std::min(ng, ib + 1) / ng, tol);
    const double l = length_at(u, g);
    return l <= lb ? std::make_pair(g, l) : std::make_pair(hi * ib / ng, lb);
  };

  double u_best = 0.0;
  if (m.kind != ModelKind::kCircle) {
    const int n = std::min(4096, std::max(64, static_cast<int>(std::ceil(4.0 * P / r))));
    std::vector<std::pair<double, int>> scan;
    for (int i = 0; i < n; ++i) scan.push_back({best_gap(P * i / n).second, i});
    std::sort(scan.begin(), scan.end());
    double lbest = kInf;
    for (std::size_t c = 0; c < std::min<std::size_t>(3, scan.size()); ++c) {
      const int i = scan[c].second;
      const double u = golden_min([&](double x) { return best_gap(x).second; }, P * (i - 1) / n,
                                  P * (i + 1) / n, tol);
      for (auto [cand, l] : {std::pair{u, best_gap(u).second}, {P * i / n, scan[c].first}}) {
        if (l < lbest) {
          lbest = l;
          u_best = cand;
        }
      }
    }
  }
  const double g = best_gap(u_best).first;
  ConstructionResult res = horseshoe_with_gap(m, r, u_best, g, opt);
  if (!covers_exactly(m, res.network, r * (1.0 + 1e-9))) {
    throw std::runtime_error("horseshoe: constructed network does not cover M");
  }
  return res;
}

StadiumBlock stadium_block(double R, double r, double w) {
  const double top = 2.0 * R;
  auto solve = [&](double h, std::vector<Point>* out) {
    FixedTopologyProblem p;
    p.num_vertices = 8;
    // 0 A, 1 K1, 2 P, 3 K2, 4 B, 5 S, 6 T1, 7 T2
    p.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}, {5, 7}};
    p.pins = {Pin::kFixed, Pin::kFree, Pin::kFree, Pin::kFree, Pin::kFixed, Pin::kFree, Pin::kFree, Pin::kFree};
    const Point bottom{0.5 * w, 0.0};
    p.disks = {DiskConstraint::vertex(1, bottom, r), DiskConstraint::vertex(3, bottom, r),
               DiskConstraint::vertex(5, {0.5 * w, top}, r), DiskConstraint::vertex(6, {0.0, top}, r),
               DiskConstraint::vertex(7, {w, top}, r)};
    const std::vector<Point> init{{0, h},
                                  {0.5 * w - 0.3 * r, 0.8 * r},
                                  {0.5 * w, 0.9 * r},
                                  {0.5 * w + 0.3 * r, 0.8 * r},
                                  {w, h},
                                  {0.5 * w, top - 0.5 * r},
                                  {0.3 * r, top - 0.5 * r},
                                  {w - 0.3 * r, top - 0.5 * r}};
    const auto sol = minimize_length(p, init);
    if (out) *out = sol.positions;
    return sol.feasible ? sol.length : kInf;
  };
  StadiumBlock blk;
  blk.width = w;
  blk.height = golden_min([&](double h) { return solve(h, nullptr); }, 0.0, r, 1e-9 * r);
  blk.length = solve(blk.height, &blk.vertices);
  return blk;
}

ConstructionResult stadium_competitor(double R, double r, double L, const ConstructionOptions& opt) {
  if (!(r > 0.0) || !(R > r) || !(R < 1.75 * r)) {
    throw std::domain_error("stadium_competitor: requires r < R < 1.75 r");
  }
  if (!(L >= 4.0 * r)) throw std::domain_error("stadium_competitor: core too short for two blocks");
  auto alpha = [&](double w) { return stadium_block(R, r, w).length / w; };
  const double w_lo = 0.25 * r, w_hi = std::min(0.5 * L, 40.0 * r);
  const int n = 40;
  double best = kInf;
  int ib = 0;
  std::vector<double> ws(n + 1);
  for (int i = 0; i <= n; ++i) {
    ws[i] = w_lo * std::pow(w_hi / w_lo, static_cast<double>(i) / n);
    const double a = alpha(ws[i]);
    if (a < best) {
      best = a;
      ib = i;
    }
  }
  const double w_star = golden_min(alpha, ws[std::max(0, ib - 1)], ws[std::min(n, ib + 1)], 1e-7 * r);
  const int blocks = std::max(2, static_cast<int>(std::lround(L / w_star)));
  const double w = L / blocks;
  const StadiumBlock blk = stadium_block(R, r, w);

  const CompactSetModel m = CompactSetModel::stadium({0, 0}, R, L);
  std::vector<Point> verts;
  std::vector<Edge> edges;
  auto add = [&](Point p) {
    verts.push_back(p);
    return verts.size() - 1;
  };
  const Point base0{-0.5 * L, -R};
  std::size_t prev = add(base0 + blk.vertices[0]);
  const std::size_t first_spine = prev;
  for (int i = 0; i < blocks; ++i) {
    const Point o = base0 + Point{i * w, 0.0};
    std::array<std::size_t, 8> id{};
    id[0] = prev;
    for (std::size_t k = 1; k < 8; ++k) id[k] = add(o + blk.vertices[k]);
    for (auto [x, y] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}, {5, 7}}) {
      edges.push_back({id[x], id[y]});
    }
    prev = id[4];
  }
  const std::size_t last_spine = prev;
  const double rho = R - r;
  const double tol = opt.rel_arc_tol * r;
  // Each spine end joins its cap arc along a tangent to the arc.
  auto cap = [&](std::size_t spine, Point c, double side) {
    const double d = dist(verts[spine], c);
    const double beta = std::acos(std::min(1.0, rho / d));
    const double th0 = side < 0 ? 1.5 * kPi - beta : -0.5 * kPi + beta;
    const double sweep = side < 0 ? -(kPi - beta) : kPi - beta;
    std::vector<Point> pts{c + rho * polar(th0)};
    append_circumscribed_arc(pts, c, rho, th0, sweep, tol);
    std::size_t last = spine;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == 0 && dist(pts[0], verts[spine]) <= 1e-12) continue;
      const std::size_t id = add(pts[i]);
      edges.push_back({last, id});
      last = id;
    }
  };
  cap(first_spine, {-0.5 * L, 0.0}, -1.0);
  cap(last_spine, {0.5 * L, 0.0}, 1.0);

  ConstructionResult res;
  res.name = "stadium-competitor";
  res.claimed_r = r;
  res.m = m;
  res.network = Network::build(verts, edges);
  res.params = {{"alpha", blk.length / w},
                {"alpha_optimal", best < kInf ? alpha(w_star) : kInf},
                {"block_width", w},
                {"block_width_optimal", w_star},
                {"block_length", blk.length},
                {"block_height", blk.height},
                {"blocks", static_cast<double>(blocks)},
                {"length", length(res.network)}};
  return res;
}

ConstructionResult rectangle_candidate(double a, double b, double r, const ConstructionOptions& opt) {
  (void)opt;
  if (!(a > 0.0) || !(b > 0.0) || !(r > 0.0)) throw std::invalid_argument("rectangle_candidate: bad input");
  if (!(r < std::min(a, b) / 20.0)) throw std::domain_error("rectangle_candidate: r outside the supported regime");
  const CompactSetModel m = CompactSetModel::rectangle({0, 0}, a, b);
  const std::array<Point, 4> C{Point{0, 0}, Point{a, 0}, Point{a, b}, Point{0, b}};
  // Gap on the longer side: side 0 (bottom) or side 1 (right).
  const int gap_side = a >= b ? 0 : 1;

  // Per corner i: Q1, Q2, V, B1 (on side i), B2 (on side i-1) -> 5i..5i+4.
  // Gap ends E1, E2 -> 20, 21. Witnesses (not in the network): w1_i on
  // side i -> 22 + 2i, w2_i on side i-1 -> 23 + 2i, gap witness -> 30.
  FixedTopologyProblem p;
  p.num_vertices = 31;
  p.pins.assign(p.num_vertices, Pin::kFree);
  std::vector<Point> init(p.num_vertices);
  const double p1 = 1.41445 * r, p2 = 1.41525 * r;
  const std::array<Point, 5> pattern{Point{0.70722, 0.70699}, Point{0.72371, 0.72515}, Point{1.1081, 1.1089},
                                     Point{1.5454, 0.9914}, Point{0.9914, 1.5454}};
  auto side_pin = [](int side) { return side % 2 == 0 ? Pin::kFixY : Pin::kFixX; };
  for (int i = 0; i < 4; ++i) {
    const Point e1 = unit(C[(i + 1) % 4] - C[i]);
    const Point e2 = unit(C[(i + 3) % 4] - C[i]);
    const std::size_t q1 = 5 * i, q2 = q1 + 1, v = q1 + 2, b1 = q1 + 3, b2 = q1 + 4;
    const std::size_t w1 = 22 + 2 * i, w2 = 23 + 2 * i;
    for (int k = 0; k < 5; ++k) init[q1 + k] = C[i] + r * (pattern[k].x * e1 + pattern[k].y * e2);
    init[w1] = C[i] + p1 * e1;
    init[w2] = C[i] + p2 * e2;
    p.pins[w1] = side_pin(i);
    p.pins[w2] = side_pin(i + 3);
    p.edges.insert(p.edges.end(), {{q1, q2}, {q2, v}, {v, b1}, {v, b2}});
    p.disks.push_back(DiskConstraint::vertex(q1, C[i], r));
    for (auto [x, w] : {std::pair{q1, w1}, {q2, w2}, {b1, w1}, {b2, w2}}) {
      p.disks.push_back({x, w, 1.0, -1.0, {0, 0}, r});
    }
  }
  for (int i = 0; i < 4; ++i) {
    const std::size_t b1 = 5 * i + 3, b2_next = 5 * ((i + 1) % 4) + 4;
    if (i != gap_side) {
      p.edges.push_back({b1, b2_next});
      continue;
    }
    const Point mid = lerp(C[i], C[(i + 1) % 4], 0.5);
    const Point e = unit(C[(i + 1) % 4] - C[i]);
    const Point in = perp(e);
    init[30] = mid;
    p.pins[30] = side_pin(i);
    init[20] = mid + r * (-0.9 * e + 0.3 * in);
    init[21] = mid + r * (0.9 * e + 0.3 * in);
    p.edges.insert(p.edges.end(), {{b1, 20}, {21, b2_next}});
    p.disks.push_back({20, 30, 1.0, -1.0, {0, 0}, r});
    p.disks.push_back({21, 30, 1.0, -1.0, {0, 0}, r});
  }
  const auto sol = minimize_length(p, init);
  if (!sol.feasible) throw std::runtime_error("rectangle_candidate: no feasible start");
  std::vector<Point> verts(sol.positions.begin(), sol.positions.begin() + 22);
  ConstructionResult res;
  res.name = "rectangle";
  res.claimed_r = r;
  res.m = m;
  res.network = Network(verts, p.edges);
  const double L = length(res.network);
  res.params = {{"length", L},
                {"coefficient", (2.0 * (a + b) - L) / r},
                {"converged", sol.converged ? 1.0 : 0.0},
                {"gap_side", gap_side},
                {"gap_position", dist(sol.positions[30], C[gap_side])}};
  for (int i = 0; i < 4; ++i) {
    res.params["p1_" + std::to_string(i)] = dist(sol.positions[22 + 2 * i], C[i]);
    res.params["p2_" + std::to_string(i)] = dist(sol.positions[23 + 2 * i], C[i]);
  }
  for (std::size_t k = 22; k < 31; ++k) res.witnesses.push_back(sol.positions[k]);
  for (Point c : C) res.witnesses.push_back(c);
  return res;
}

ConstructionResult corner_example(double R, double r, int N, int k) {
  if (!(R > 0.0) || !(r > 0.0)) throw std::invalid_argument("corner_example: R, r must be positive");
  if (N < 1 || k < 3) throw std::invalid_argument("corner_example: need N >= 1 and k >= 3");
  // Chords c_i = |A_i A_{i+1}|, i = 1..k-1.
  std::vector<double> chord(static_cast<std::size_t>(k));
  std::vector<double> delta(static_cast<std::size_t>(k));
  double total = 0.0;
  for (int i = 1; i < k; ++i) {
    chord[i] = (r / N) / std::pow(2.0, i - 1);
    if (chord[i] >= 2.0 * R) throw std::domain_error("corner_example: chord exceeds the circle diameter");
    delta[i] = 2.0 * std::asin(chord[i] / (2.0 * R));
    total += delta[i];
  }
  if (total >= kPi) throw std::domain_error("corner_example: chain leaves the admissible arc");
  // Coordinates relative to A_k, which sits on top of the circle; angles
  // are measured from the centre O = A_k - (0, R).
  const double th_k = 0.5 * kPi;
  std::vector<Point> A(static_cast<std::size_t>(k) + 1);
  double diff = 0.0;  // th_i - th_k, negative
  A[k] = {0.0, 0.0};
  for (int i = k - 1; i >= 1; --i) {
    diff -= delta[i];
    const double s = std::sin(0.5 * diff), mean = th_k + 0.5 * diff;
    A[i] = {-2.0 * R * std::sin(mean) * s, 2.0 * R * std::cos(mean) * s};
  }
  const Point O{0.0, -R};
  std::vector<Point> V(static_cast<std::size_t>(k) + 1);
  V[0] = A[1] + r * unit(A[1] - A[2]);
  {
    Point n = perp(unit(A[2] - A[1]));
    if (dot(n, A[1] - O) < 0) n = -n;
    V[1] = A[1] + r * n;
  }
  for (int i = 2; i < k; ++i) {
    V[i] = A[i] - r * unit(unit(A[i - 1] - A[i]) + unit(A[i + 1] - A[i]));
  }
  V[k] = A[k] + r * unit(A[k] - A[k - 1]);

  ConstructionResult res;
  res.name = "corner-example";
  res.claimed_r = r;
  res.m = CompactSetModel::finite(V);
  res.network = Network::polyline(std::vector<Point>(A.begin() + 1, A.end()));
  res.params = {{"R", R}, {"N", N}, {"k", k}, {"center_x", O.x}, {"center_y", O.y},
                {"length", length(res.network)}};
  return res;
}

namespace {

bool segments_cross(Point a, Point b, Point c, Point d) {
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

// One side of the tube boundary, traversed along the curve; sign = +1 for
// the left side, -1 for the right side.
std::vector<Point> tube_side(const std::vector<Point>& P, double r, double sign, double tol) {
  std::vector<Point> out;
  const std::size_t n = P.size();
  std::vector<Point> nrm(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) nrm[i] = sign * perp(unit(P[i + 1] - P[i]));
  out.push_back(P[0] + r * nrm[0]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double t = signed_turn(P[i] - P[i - 1], P[i + 1] - P[i]) * sign;
    if (t > 0) {
      out.push_back(P[i] + (r / (1.0 + dot(nrm[i - 1], nrm[i]))) * (nrm[i - 1] + nrm[i]));
    } else if (t < 0) {
      const double th0 = std::atan2(nrm[i - 1].y, nrm[i - 1].x);
      const double sweep = signed_turn(nrm[i - 1], nrm[i]);
      const int k = arc_segments(r, sweep, tol);
      for (int j = 0; j <= k; ++j) out.push_back(P[i] + r * polar(th0 + sweep * j / k));
    } else {
      out.push_back(P[i] + r * nrm[i]);
    }
  }
  out.push_back(P[n - 1] + r * nrm[n - 2]);
  return out;
}

}  // namespace

ConstructionResult tube_curve(const CompactSetModel& curve, double r, double kappa,
                              const ConstructionOptions& opt) {
  if (curve.kind != ModelKind::kPolyline || curve.closed) {
    throw std::invalid_argument("tube_curve: curve must be an open polyline");
  }
  curve.validate();
  if (!(r > 0.0)) throw std::invalid_argument("tube_curve: r must be positive");
  const auto& P = curve.points;
  const std::size_t n = P.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 2; j + 1 < n; ++j) {
      if (segments_cross(P[i], P[i + 1], P[j], P[j + 1])) throw std::domain_error("tube_curve: curve is not simple");
    }
  }
  if (kappa <= 0.0) {
    const double rho = min_curvature_radius(curve);
    kappa = std::isfinite(rho) && rho > 0 ? 1.0 / rho : 0.0;
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double t = std::abs(signed_turn(P[i] - P[i - 1], P[i + 1] - P[i]));
      if (t > kappa * 0.5 * (dist(P[i - 1], P[i]) + dist(P[i], P[i + 1])) * (1.0 + 1e-9)) {
        throw std::domain_error("tube_curve: turning exceeds the curvature bound");
      }
    }
  }
  if (kappa > 0.0 && !(r < 0.5 / kappa)) throw std::domain_error("tube_curve: r too large for the curvature");
  const double tol = opt.rel_arc_tol * r;
  ConstructionResult res;
  res.name = "tube";
  res.claimed_r = r;
  res.network = Network::polyline(P);
  if (n == 2 && P[0].y == P[1].y) {
    res.m = CompactSetModel::stadium(lerp(P[0], P[1], 0.5), r, dist(P[0], P[1]));
  } else {
    std::vector<Point> left = tube_side(P, r, 1.0, tol);
    std::vector<Point> right = tube_side(P, r, -1.0, tol);
    std::vector<Point> loop = left;
    const Point dn = unit(P[n - 1] - P[n - 2]);
    const Point d0 = unit(P[1] - P[0]);
    const double th_end = std::atan2(perp(dn).y, perp(dn).x);
    const int ke = arc_segments(r, kPi, tol);
    for (int j = 1; j < ke; ++j) loop.push_back(P[n - 1] + r * polar(th_end - kPi * j / ke));
    loop.insert(loop.end(), right.rbegin(), right.rend());
    const double th_start = std::atan2(-perp(d0).y, -perp(d0).x);
    for (int j = 1; j < ke; ++j) loop.push_back(P[0] + r * polar(th_start - kPi * j / ke));
    std::vector<Point> clean;
    for (Point q : loop) {
      if (clean.empty() || dist(clean.back(), q) > 1e-12) clean.push_back(q);
    }
    while (clean.size() > 1 && dist(clean.front(), clean.back()) <= 1e-12) clean.pop_back();
    res.m = CompactSetModel::polyline(clean, true);
  }
  res.params = {{"length", length(res.network)}, {"kappa", kappa}, {"area", area(*res.m)}};
  return res;
}

}  // namespace mdmin
