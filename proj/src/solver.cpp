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

#include "mdmin/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mdmin/constructions.hpp"

namespace mdmin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double points_scale(const std::vector<Point>& pts) {
  if (pts.empty()) return 1.0;
  Point lo = pts[0], hi = pts[0];
  for (Point p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return std::max(1.0, std::max(hi.x - lo.x, hi.y - lo.y));
}

CheckReport network_checks(const Network& n) {
  CheckReport rep = check_tree(n);
  rep.append(check_angles(n));
  return rep;
}

// Fills energy, checks and bounds of a report from its network.
void finish_report(SolveReport& rep, const CompactSetModel* m, const SampleNet& s, double r,
                   const SolverOptions& opt) {
  rep.length = length(rep.network);
  rep.energy = energy(s, rep.network);
  rep.checks = network_checks(rep.network);
  rep.seed = opt.seed;
  const double r_eff = r + s.mesh;
  rep.bounds.clear();
  if (r_eff > 0.0) {
    rep.bounds.push_back(lower_bound_volume(opt.filled_volume.value_or(0.0), r_eff, 2));
    if (m && is_convex_closed(*m)) rep.bounds.push_back(lower_bound_perimeter(perimeter(*m), r_eff));
  }
  double best = 0.0;
  for (const auto& b : rep.bounds) best = std::max(best, b.value);
  rep.lower_bound_gap = rep.length - best;
}

std::vector<double> effective_schedule(const SolverOptions& opt, double r) {
  std::vector<double> s;
  if (!opt.schedule.empty()) {
    s = opt.schedule;
  } else {
    for (double f : opt.relative_schedule) s.push_back(f * r);
  }
  if (s.empty()) throw std::invalid_argument("solver: empty schedule");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] > 0.0)) throw std::invalid_argument("solver: schedule entries must be positive");
    if (i > 0 && !(s[i] < s[i - 1])) throw std::invalid_argument("solver: schedule must be strictly decreasing");
  }
  if (s.front() > r) throw std::invalid_argument("solver: coarsest schedule entry exceeds r");
  return s;
}

SolveReport single_point_report(Point c, const std::string& mode) {
  SolveReport rep;
  rep.mode = mode;
  rep.network = Network::single(c);
  rep.converged = true;
  rep.co_optimal = {rep.network};
  return rep;
}

// Mutable straight-edge tree used by the local search.
struct Work {
  std::vector<Point> v;
  std::vector<Edge> e;

  static Work from(const Network& n) { return {n.vertices(), n.edges()}; }
  Network network() const { return Network::build(v, e); }
  double length() const {
    double s = 0.0;
    for (auto [a, b] : e) s += dist(v[a], v[b]);
    return s;
  }
};

Work split_long_edges(const Work& w, double h) {
  Work out{w.v, {}};
  for (auto [a, b] : w.e) {
    const int k = static_cast<int>(std::ceil(dist(w.v[a], w.v[b]) / h));
    std::size_t prev = a;
    for (int i = 1; i < k; ++i) {
      out.v.push_back(lerp(w.v[a], w.v[b], static_cast<double>(i) / k));
      out.e.push_back({prev, out.v.size() - 1});
      prev = out.v.size() - 1;
    }
    out.e.push_back({prev, b});
  }
  return out;
}

Work cleanup(const Work& w, double scale) {
  Network n = contract_short_edges(w.network(), 1e-7 * scale);
  n = remove_collinear_vertices(n, 1e-10);
  return Work::from(n);
}

// Grows leaves from the nearest network points towards samples farther than
// r, worst first, ending strictly inside the r-disk of the sample. Each
// pass attaches at most one leaf per edge and skips samples already served
// by a leaf of the same pass.
Work repair_coverage(Work w, const std::vector<Point>& samples, double r) {
  const double target = (1.0 - 1e-3) * r;
  for (std::size_t guard = 0; guard <= samples.size(); ++guard) {
    const Network n = w.network();
    const EdgeIndex index(n);
    std::vector<std::pair<double, std::size_t>> bad;
    std::vector<NearestOnNetwork> near(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      near[i] = index.nearest(samples[i]);
      if (near[i].distance > r) bad.push_back({-near[i].distance, i});
    }
    if (bad.empty()) break;
    std::sort(bad.begin(), bad.end());
    w = Work::from(n);
    std::vector<bool> edge_used(n.num_edges(), false);
    std::vector<Point> tips;
    for (auto [negd, i] : bad) {
      const Point y = samples[i];
      const NearestOnNetwork& nw = near[i];
      bool served = false;
      for (Point t : tips) served = served || dist(t, y) <= target;
      if (served) continue;
      std::size_t base;
      if (nw.edge < 0) {
        base = 0;
      } else {
        if (edge_used[nw.edge]) continue;
        edge_used[nw.edge] = true;
        const auto [a, b] = n.edges()[nw.edge];
        if (nw.param <= 1e-9) {
          base = a;
        } else if (nw.param >= 1.0 - 1e-9) {
          base = b;
        } else {
          w.v.push_back(nw.nearest);
          base = w.v.size() - 1;
          w.e[nw.edge] = {a, base};
          w.e.push_back({base, b});
        }
      }
      const Point tip = y + (target / -negd) * (nw.nearest - y);
      w.v.push_back(tip);
      w.e.push_back({base, w.v.size() - 1});
      tips.push_back(tip);
      if (nw.edge < 0) break;
    }
  }
  return w;
}

// One convex solve per pass with every sample bound to its current nearest
// point of the network (vertex, or edge point at a fixed parameter).
struct PolishResult {
  Work work;
  int passes = 0;
  bool converged = false;
};

PolishResult polish(Work w, const std::vector<Point>& samples, double r, const SolverOptions& opt) {
  PolishResult res;
  double L = w.length();
  for (int pass = 0; pass < opt.max_polish_passes; ++pass) {
    const Network n = w.network();
    const EdgeIndex index(n);
    FixedTopologyProblem p;
    p.num_vertices = n.num_vertices();
    p.edges = n.edges();
    for (Point y : samples) {
      const NearestOnNetwork nn = index.nearest(y);
      if (nn.edge < 0) {
        p.disks.push_back(DiskConstraint::vertex(0, y, r));
        continue;
      }
      const auto [a, b] = n.edges()[nn.edge];
      if (nn.param <= 1e-12) {
        p.disks.push_back(DiskConstraint::vertex(a, y, r));
      } else if (nn.param >= 1.0 - 1e-12) {
        p.disks.push_back(DiskConstraint::vertex(b, y, r));
      } else {
        p.disks.push_back(DiskConstraint::on_edge(a, b, nn.param, y, r));
      }
    }
    const auto sol = minimize_length(p, n.vertices(), opt.convex);
    ++res.passes;
    if (!sol.feasible) break;
    const double Ln = sol.length;
    // The input may be infeasible, so the first pass is always taken.
    if (pass > 0 && Ln >= L) {
      res.converged = true;
      break;
    }
    w = Work{sol.positions, n.edges()};
    const bool small = L - Ln <= opt.rel_tol * std::max(1.0, L);
    L = Ln;
    if (small) {
      res.converged = true;
      break;
    }
  }
  res.work = std::move(w);
  return res;
}

// Inserts a Steiner vertex at every vertex whose sharpest pair of edges
// meets at less than 2pi/3. Returns the number of insertions.
int insert_steiner_points(Work& w) {
  const Network n = w.network();
  w = Work::from(n);
  int count = 0;
  for (std::size_t v = 0; v < n.num_vertices(); ++v) {
    const auto& nb = n.neighbors(v);
    if (nb.size() < 2) continue;
    double best = kInf;
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const double ang = angle_between(n.vertex(nb[i]) - n.vertex(v), n.vertex(nb[j]) - n.vertex(v));
        if (ang < best) {
          best = ang;
          ia = nb[i];
          ib = nb[j];
        }
      }
    }
    if (best >= kTwoPiOverThree - 1e-3) continue;
    const Point pv = n.vertex(v);
    const double h = 0.25 * std::min(dist(pv, n.vertex(ia)), dist(pv, n.vertex(ib)));
    const Point dir = unit(unit(n.vertex(ia) - pv) + unit(n.vertex(ib) - pv));
    w.v.push_back(pv + h * dir);
    const std::size_t s = w.v.size() - 1;
    for (auto& [a, b] : w.e) {
      if ((a == v && (b == ia || b == ib))) a = s;
      else if (b == v && (a == ia || a == ib)) b = s;
    }
    w.e.push_back({v, s});
    ++count;
  }
  return count;
}

// Appends the dense samples farther than r + tol from n, worst first,
// skipping those within `spacing` of one already taken.
void add_violators(const Network& n, const SampleNet& dense, double r, double tol, double spacing,
                   std::vector<Point>& out) {
  const EdgeIndex index(n);
  std::vector<std::pair<double, Point>> bad;
  for (Point y : dense.points) {
    const double d = index.nearest(y).distance;
    if (d > r + tol) bad.push_back({-d, y});
  }
  std::sort(bad.begin(), bad.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Point> taken;
  for (const auto& [negd, y] : bad) {
    bool near = false;
    for (Point t : taken) near = near || dist(t, y) < spacing;
    if (near) continue;
    taken.push_back(y);
    out.push_back(y);
  }
}

struct StageResult {
  Work work;
  int iterations = 0;
  bool converged = false;
};

StageResult local_search(Work w, const std::vector<Point>& samples, double r, double scale,
                         const SolverOptions& opt) {
  StageResult res;
  const double h = opt.split_length * r;
  double L = kInf;
  for (int round = 0; round < opt.max_rounds; ++round) {
    auto pr = polish(repair_coverage(split_long_edges(w, h), samples, r), samples, r, opt);
    res.iterations += pr.passes;
    Work cand = pr.work;
    Work trial = cand;
    if (insert_steiner_points(trial) > 0) {
      auto ps = polish(trial, samples, r, opt);
      res.iterations += ps.passes;
      if (ps.work.length() < cand.length() - opt.rel_tol * std::max(1.0, cand.length())) {
        cand = ps.work;
        pr.converged = ps.converged;
      }
    }
    cand = cleanup(cand, scale);
    const double Ln = cand.length();
    const bool small = L - Ln <= opt.rel_tol * std::max(1.0, Ln);
    if (Ln <= L) {
      w = std::move(cand);
      L = Ln;
    }
    res.converged = pr.converged;
    if (small) break;
  }
  res.work = std::move(w);
  return res;
}

std::vector<std::size_t> prim_order_edges(const std::vector<Point>& pts, std::vector<Edge>& edges) {
  const std::size_t n = pts.size();
  std::vector<double> best(n, kInf);
  std::vector<std::size_t> from(n, 0);
  std::vector<bool> in(n, false);
  std::vector<std::size_t> order;
  best[0] = 0.0;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in[i] && (u == n || best[i] < best[u])) u = i;
    }
    in[u] = true;
    order.push_back(u);
    if (it > 0) edges.push_back({from[u], u});
    for (std::size_t i = 0; i < n; ++i) {
      const double d = dist(pts[u], pts[i]);
      if (!in[i] && d < best[i]) {
        best[i] = d;
        from[i] = u;
      }
    }
  }
  return order;
}

// Spanning seed: a polyline along M (closed curves cut open at a seeded
// position) or a Euclidean spanning tree of a finite M.
Work generic_seed(const CompactSetModel& m, double r, std::mt19937_64& rng) {
  if (m.kind == ModelKind::kPoints) {
    std::vector<Edge> edges;
    prim_order_edges(m.points, edges);
    return Work::from(Network::build(m.points, edges));
  }
  const SampleNet s = sample(m, 0.125 * r);
  std::vector<Point> pts = s.points;
  if (m.is_closed_curve() && pts.size() > 2) {
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(pick(rng)), pts.end());
  }
  return Work::from(Network::polyline(pts));
}

std::optional<std::pair<Work, std::string>> oracle_seed(const CompactSetModel& m, double r) {
  ConstructionOptions co;
  co.rel_arc_tol = 1e-3;
  co.require_minimizer_regime = false;
  std::vector<ConstructionResult> cands;
  auto attempt = [&](const std::function<ConstructionResult()>& f) {
    try {
      cands.push_back(f());
    } catch (const std::exception&) {
    }
  };
  switch (m.kind) {
    case ModelKind::kCircle:
      if (m.radius > 2.0 * r) attempt([&] { return horseshoe(m, r, co); });
      break;
    case ModelKind::kStadium:
      if (m.radius > 2.0 * r) attempt([&] { return horseshoe(m, r, co); });
      if (m.radius < 1.75 * r && m.radius > r) {
        attempt([&] {
          auto c = stadium_competitor(m.radius, r, m.core_length, co);
          const auto& v = c.network.vertices();
          std::vector<Point> moved;
          for (Point p : v) moved.push_back(p + m.center);
          c.network = Network(moved, c.network.edges());
          return c;
        });
      }
      break;
    case ModelKind::kRectangle:
      attempt([&] {
        auto c = rectangle_candidate(m.width, m.height, r, co);
        std::vector<Point> moved;
        for (Point p : c.network.vertices()) moved.push_back(p + m.corner);
        c.network = Network(moved, c.network.edges());
        return c;
      });
      break;
    default:
      break;
  }
  if (cands.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (length(cands[i].network) < length(cands[best].network)) best = i;
  }
  return std::make_pair(Work::from(cands[best].network), "oracle:" + cands[best].name);
}

}  // namespace

TopologyResult optimize_fixed_topology(const Topology& t, const std::vector<std::vector<Ball>>& balls,
                                       std::vector<Point> init, const FixedTopologyOptions& opt) {
  if (balls.size() != t.terminals) throw std::invalid_argument("optimize_fixed_topology: ball count mismatch");
  FixedTopologyProblem p;
  p.num_vertices = t.num_vertices();
  p.edges = t.edges;
  p.pins.assign(p.num_vertices, Pin::kFree);
  std::vector<Point> centers;
  std::vector<Point> anchor(t.terminals);
  for (std::size_t i = 0; i < t.terminals; ++i) {
    if (balls[i].empty()) throw std::invalid_argument("optimize_fixed_topology: terminal without ball");
    std::vector<Point> cs;
    bool pinned = false;
    for (const Ball& b : balls[i]) {
      if (!(b.radius >= 0.0)) throw std::invalid_argument("optimize_fixed_topology: negative radius");
      cs.push_back(b.center);
      centers.push_back(b.center);
      if (b.radius == 0.0) {
        if (pinned && !(anchor[i] == b.center)) {
          throw std::invalid_argument("optimize_fixed_topology: empty ball intersection");
        }
        pinned = true;
        anchor[i] = b.center;
        p.pins[i] = Pin::kFixed;
      } else {
        p.disks.push_back(DiskConstraint::vertex(i, b.center, b.radius));
      }
    }
    if (!pinned) anchor[i] = min_enclosing_disk(cs).center;
  }
  const double scale = points_scale(centers);
  if (init.size() != p.num_vertices) {
    init.assign(p.num_vertices, Point{});
    Point mean{0, 0};
    for (Point a : anchor) mean += a;
    mean = mean / static_cast<double>(t.terminals);
    for (std::size_t i = 0; i < t.terminals; ++i) init[i] = anchor[i];
    for (std::size_t s = t.terminals; s < p.num_vertices; ++s) {
      init[s] = mean + 1e-3 * scale * polar(2.399963 * static_cast<double>(s));
    }
    // Steiner vertices relax towards the mean of their neighbours.
    std::vector<std::vector<std::size_t>> adj(p.num_vertices);
    for (auto [a, b] : t.edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (int it = 0; it < 50; ++it) {
      for (std::size_t s = t.terminals; s < p.num_vertices; ++s) {
        Point acc{0, 0};
        for (std::size_t w : adj[s]) acc += init[w];
        if (!adj[s].empty()) {
          init[s] = 0.5 * init[s] + 0.5 * acc / static_cast<double>(adj[s].size());
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < t.terminals; ++i) {
      if (p.pins[i] == Pin::kFixed) init[i] = anchor[i];
    }
  }
  const auto sol = minimize_length(p, init, opt);
  TopologyResult res;
  res.converged = sol.converged && sol.feasible;
  res.network = contract_short_edges(Network::build(sol.positions, t.edges, 1e-10 * scale), 1e-8 * scale);
  res.length = length(res.network);
  return res;
}

TopologyResult optimize_fixed_topology(const Topology& t, const std::vector<Ball>& balls,
                                       std::vector<Point> init, const FixedTopologyOptions& opt) {
  std::vector<std::vector<Ball>> b;
  for (const Ball& x : balls) b.push_back({x});
  return optimize_fixed_topology(t, b, std::move(init), opt);
}

std::vector<std::vector<std::size_t>> cluster_terminals(const std::vector<Point>& pts, double r) {
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool placed = false;
    for (auto& c : clusters) {
      bool clique = true;
      std::vector<Point> members{pts[i]};
      for (std::size_t j : c) {
        clique = clique && dist(pts[i], pts[j]) <= 2.0 * r;
        members.push_back(pts[j]);
      }
      if (!clique) continue;
      const double rad = min_enclosing_disk(members).radius;
      if (rad == 0.0 || rad < r * (1.0 - 1e-9)) {
        c.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({i});
  }
  return clusters;
}

SolveReport solve_finite(const std::vector<Point>& points, double r, const SolverOptions& opt) {
  if (points.empty()) throw std::invalid_argument("solve_finite: no points");
  if (!(r >= 0.0)) throw std::invalid_argument("solve_finite: r must be non-negative");
  for (Point p : points) {
    if (!is_finite(p)) throw std::invalid_argument("solve_finite: non-finite point");
  }
  const SampleNet s{points, 0.0};
  const auto clusters = cluster_terminals(points, r);
  SolveReport rep;
  if (clusters.size() == 1) {
    rep = single_point_report(min_enclosing_disk(points).center, "finite");
    rep.r = r;
    rep.seed_kind = "finite-exact";
    finish_report(rep, nullptr, s, r, opt);
    return rep;
  }
  const int k = static_cast<int>(clusters.size());
  const auto tops = enumerate_topologies(k, opt.topology_cap);
  std::vector<std::vector<Ball>> balls;
  for (const auto& c : clusters) {
    std::vector<Ball> b;
    for (std::size_t i : c) b.push_back({points[i], r});
    balls.push_back(std::move(b));
  }
  std::vector<TopologyResult> results;
  for (const auto& t : tops) results.push_back(optimize_fixed_topology(t, balls, {}, opt.convex));
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].length < results[best].length) best = i;
  }
  const double scale = points_scale(points);
  rep.mode = "finite";
  rep.r = r;
  rep.network = results[best].network;
  rep.converged = results[best].converged;
  rep.iterations = static_cast<int>(tops.size());
  rep.seed_kind = "finite-exact";
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].length > results[best].length + opt.co_optimal_tol) continue;
    bool dup = false;
    for (const auto& c : rep.co_optimal) {
      dup = dup || hausdorff_distance(c, results[i].network, 1e-3 * scale) <= 1e-6 * scale;
    }
    if (!dup) rep.co_optimal.push_back(results[i].network);
  }
  finish_report(rep, nullptr, s, r, opt);
  return rep;
}

SolveReport solve_dual(const CompactSetModel& m, double r, const SolverOptions& opt) {
  m.validate();
  if (!(r > 0.0)) throw std::invalid_argument("solve_dual: r must be positive");
  if (m.kind == ModelKind::kPoints &&
      static_cast<int>(cluster_terminals(m.points, r).size()) <= opt.topology_cap) {
    SolveReport rep = solve_finite(m.points, r, opt);
    rep.mode = "dual";
    return rep;
  }
  const std::vector<double> schedule = effective_schedule(opt, r);
  const SampleNet finest = sample(m, schedule.back());
  const double scale = points_scale(finest.points);
  const Disk meb = min_enclosing_disk(finest.points);
  if (meb.radius <= r) {
    SolveReport rep = single_point_report(meb.center, "dual");
    rep.r = r;
    rep.schedule = schedule;
    rep.seed_kind = "single-point";
    finish_report(rep, &m, finest, r, opt);
    return rep;
  }
  std::vector<SampleNet> nets;
  for (double e : schedule) nets.push_back(e == schedule.back() ? finest : sample(m, e));

  std::optional<SampleNet> dense;
  double dense_h = 0.0;
  if (m.kind != ModelKind::kPoints && opt.refine_factor > 1.0) {
    dense_h = std::max(schedule.back() / opt.refine_factor, curve_length(m) / 2e5);
    if (dense_h < schedule.back()) dense = sample(m, dense_h);
  }

  SolveReport best;
  bool have = false;
  for (int k = 0; k < std::max(1, opt.restarts); ++k) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(k);
    std::mt19937_64 rng(seed);
    Work w;
    std::string kind = "spanning-polyline";
    std::optional<std::pair<Work, std::string>> oracle;
    if (k == 0 && opt.oracle_seed) oracle = oracle_seed(m, r);
    if (oracle) {
      w = oracle->first;
      kind = oracle->second;
    } else {
      w = generic_seed(m, r, rng);
    }
    int iterations = 0;
    bool converged = false;
    for (const auto& net : nets) {
      auto st = local_search(w, net.points, r, scale, opt);
      w = std::move(st.work);
      iterations += st.iterations;
      converged = st.converged;
    }
    if (dense) {
      std::vector<Point> pts = finest.points;
      for (int pass = 0; pass < opt.max_refinements; ++pass) {
        const std::size_t before = pts.size();
        add_violators(w.network(), *dense, r, opt.refine_tol * r, 2.0 * dense_h, pts);
        if (pts.size() == before) break;
        auto st = local_search(w, pts, r, scale, opt);
        w = std::move(st.work);
        iterations += st.iterations;
        converged = st.converged;
      }
    }
    SolveReport rep;
    rep.mode = "dual";
    rep.r = r;
    rep.network = w.network();
    rep.iterations = iterations;
    rep.converged = converged;
    rep.schedule = schedule;
    rep.seed_kind = kind;
    finish_report(rep, &m, finest, r, opt);
    rep.seed = seed;
    if (!covered(finest, rep.network, r)) continue;
    if (!have || rep.length < best.length) {
      best = std::move(rep);
      have = true;
    }
  }
  if (!have) throw std::runtime_error("solve_dual: no restart produced a covering network");
  best.co_optimal = {best.network};
  return best;
}

SolveReport solve_primal(const CompactSetModel& m, double l, const SolverOptions& opt) {
  m.validate();
  if (!(l >= 0.0)) throw std::invalid_argument("solve_primal: l must be non-negative");
  const double diam = diameter_scale(m);
  const SampleNet probe = sample(m, 1e-3 * std::max(diam, 1e-300));
  const Disk meb = min_enclosing_disk(probe.points);
  if (l == 0.0 || meb.radius == 0.0) {
    SolveReport rep = single_point_report(meb.center, "primal");
    rep.r = meb.radius;
    finish_report(rep, &m, probe, meb.radius, opt);
    return rep;
  }
  double lo = 0.0, hi = meb.radius;
  SolveReport best = single_point_report(meb.center, "primal");
  finish_report(best, &m, probe, hi, opt);
  const double tol = 1e-6 * diam;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    SolverOptions dual = opt;
    if (!dual.schedule.empty() && dual.schedule.front() > mid) dual.schedule.clear();
    SolveReport rep = solve_dual(m, mid, dual);
    if (rep.length <= l) {
      hi = mid;
      best = std::move(rep);
    } else {
      lo = mid;
    }
  }
  best.mode = "primal";
  best.r = hi;
  return best;
}

double penalized_objective(const Network& n, const SampleNet& s, double lambda, const Penalty& p) {
  if (!(lambda > 0.0)) throw std::invalid_argument("penalized_objective: lambda must be positive");
  const double F = energy(s, n).value;
  const double L = length(n);
  if (p.mode == PenaltyMode::kPlain) return F + lambda * L;
  if (!(p.l >= 0.0)) throw std::invalid_argument("penalized_objective: hinge needs l >= 0");
  return F + lambda * std::max(0.0, L - p.l);
}

SolveReport solve_penalized(const CompactSetModel& m, double lambda, const Penalty& p, double eps,
                            const SolverOptions& opt) {
  m.validate();
  if (!(lambda > 0.0)) throw std::invalid_argument("solve_penalized: lambda must be positive");
  if (!(eps > 0.0)) throw std::invalid_argument("solve_penalized: eps must be positive");
  const SampleNet s = sample(m, eps);
  const Disk meb = min_enclosing_disk(s.points);
  SolverOptions dual = opt;
  dual.schedule = {eps};
  dual.refine_factor = 1.0;
  // Each candidate r is solved as a dual problem; the objective is then
  // evaluated on the measured energy.
  auto run = [&](double r) {
    SolveReport rep = r >= meb.radius ? single_point_report(meb.center, "penalized") : solve_dual(m, r, dual);
    if (r >= meb.radius) finish_report(rep, &m, s, meb.radius, opt);
    rep.objective = penalized_objective(rep.network, s, lambda, p);
    return rep;
  };
  const double lo = std::min(eps, meb.radius), hi = meb.radius;
  const int n = 8;
  std::vector<double> grid;
  for (int i = 0; i <= n; ++i) grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / n));
  SolveReport best;
  int ib = -1;
  for (int i = 0; i <= n; ++i) {
    SolveReport rep = run(grid[i]);
    if (ib < 0 || rep.objective < best.objective) {
      best = std::move(rep);
      ib = i;
    }
  }
  double a = grid[std::max(0, ib - 1)], b = grid[std::min(n, ib + 1)];
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  SolveReport rc = run(c), rd = run(d);
  for (int it = 0; it < 10; ++it) {
    if (rc.objective <= rd.objective) {
      b = d;
      d = c;
      rd = std::move(rc);
      c = b - g * (b - a);
      rc = run(c);
    } else {
      a = c;
      c = d;
      rc = std::move(rd);
      d = a + g * (b - a);
      rd = run(d);
    }
  }
  for (SolveReport* cand : {&rc, &rd}) {
    if (cand->objective < best.objective) best = std::move(*cand);
  }
  best.mode = "penalized";
  best.r = best.energy.value;
  return best;
}

}  // namespace mdmin
