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

#include "mdmin/optimize.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace mdmin {

double total_length(const std::vector<Edge>& edges, const std::vector<Point>& x) {
  double s = 0.0;
  for (auto [i, j] : edges) s += dist(x[i], x[j]);
  return s;
}

double max_violation(const FixedTopologyProblem& p, const std::vector<Point>& x) {
  double v = 0.0;
  for (const auto& d : p.disks) v = std::max(v, dist(d.eval(x), d.center) - d.radius);
  return v;
}

namespace {

bool frees(const FixedTopologyProblem& p, std::size_t v, int c) {
  if (p.pins.empty()) return true;
  const Pin pin = p.pins[v];
  if (pin == Pin::kFixed) return false;
  if (pin == Pin::kFixX) return c == 1;
  if (pin == Pin::kFixY) return c == 0;
  return true;
}

double problem_scale(const FixedTopologyProblem& p, const std::vector<Point>& x) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300, rmax = 0.0;
  auto take = [&](Point q) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  };
  for (Point q : x) take(q);
  for (const auto& d : p.disks) {
    take(d.center);
    rmax = std::max(rmax, d.radius);
  }
  const double s = std::max(std::hypot(xmax - xmin, ymax - ymin), rmax);
  return s > 0 ? s : 1.0;
}

struct Barrier {
  const FixedTopologyProblem& p;
  std::vector<std::array<int, 2>> var;
  int nvar = 0;
  double t = 1.0;
  double delta = 0.0;

  explicit Barrier(const FixedTopologyProblem& prob) : p(prob) {
    var.assign(p.num_vertices, {-1, -1});
    for (std::size_t v = 0; v < p.num_vertices; ++v) {
      for (int c = 0; c < 2; ++c) {
        if (frees(p, v, c)) var[v][c] = nvar++;
      }
    }
  }

  double value(const std::vector<Point>& x) const {
    double f = 0.0;
    for (auto [i, j] : p.edges) f += std::sqrt(norm2(x[i] - x[j]) + delta * delta);
    f *= t;
    for (const auto& d : p.disks) {
      const double g = d.radius * d.radius - norm2(d.eval(x) - d.center);
      if (!(g > 0.0)) return std::numeric_limits<double>::infinity();
      f -= std::log(g);
    }
    return f;
  }

  void add_block(std::vector<Eigen::Triplet<double>>& trip, std::size_t a, std::size_t b,
                 const double m[2][2], double s) const {
    for (int r = 0; r < 2; ++r) {
      const int ir = var[a][r];
      if (ir < 0) continue;
      for (int c = 0; c < 2; ++c) {
        const int ic = var[b][c];
        if (ic < 0) continue;
        trip.emplace_back(ir, ic, s * m[r][c]);
      }
    }
  }

  void add_grad(Eigen::VectorXd& g, std::size_t a, Point v, double s) const {
    if (var[a][0] >= 0) g[var[a][0]] += s * v.x;
    if (var[a][1] >= 0) g[var[a][1]] += s * v.y;
  }

  void assemble(const std::vector<Point>& x, Eigen::VectorXd& g,
                std::vector<Eigen::Triplet<double>>& trip) const {
    g.setZero(nvar);
    trip.clear();
    for (auto [i, j] : p.edges) {
      const Point d = x[i] - x[j];
      const double f = std::sqrt(norm2(d) + delta * delta);
      const Point gd = d / f;
      const double h[2][2] = {{(1.0 - d.x * d.x / (f * f)) / f, -d.x * d.y / (f * f * f)},
                              {-d.x * d.y / (f * f * f), (1.0 - d.y * d.y / (f * f)) / f}};
      add_grad(g, i, gd, t);
      add_grad(g, j, gd, -t);
      add_block(trip, i, i, h, t);
      add_block(trip, j, j, h, t);
      add_block(trip, i, j, h, -t);
      add_block(trip, j, i, h, -t);
    }
    for (const auto& dk : p.disks) {
      const Point s = dk.eval(x) - dk.center;
      const double gv = dk.radius * dk.radius - norm2(s);
      const Point gs = (2.0 / gv) * s;
      const double h[2][2] = {{2.0 / gv + 4.0 * s.x * s.x / (gv * gv), 4.0 * s.x * s.y / (gv * gv)},
                              {4.0 * s.x * s.y / (gv * gv), 2.0 / gv + 4.0 * s.y * s.y / (gv * gv)}};
      const std::size_t vs[2] = {dk.v0, dk.v1};
      const double ws[2] = {dk.w0, dk.w1};
      for (int a = 0; a < 2; ++a) {
        if (ws[a] == 0.0) continue;
        add_grad(g, vs[a], gs, ws[a]);
        for (int b = 0; b < 2; ++b) {
          if (ws[b] == 0.0) continue;
          add_block(trip, vs[a], vs[b], h, ws[a] * ws[b]);
        }
      }
    }
  }

  void step(std::vector<Point>& x, const Eigen::VectorXd& dx, double alpha) const {
    for (std::size_t v = 0; v < p.num_vertices; ++v) {
      if (var[v][0] >= 0) x[v].x += alpha * dx[var[v][0]];
      if (var[v][1] >= 0) x[v].y += alpha * dx[var[v][1]];
    }
  }
};

}  // namespace

bool make_strictly_feasible(const FixedTopologyProblem& p, std::vector<Point>& x) {
  auto strict = [&](double frac) {
    for (const auto& d : p.disks) {
      if (!(dist(d.eval(x), d.center) < d.radius * (1.0 - frac))) return false;
    }
    return true;
  };
  if (strict(1e-9)) return true;
  for (double eta : {1e-3, 1e-5, 1e-7, 1e-9}) {
    for (int sweep = 0; sweep < 2000; ++sweep) {
      bool moved = false;
      for (const auto& d : p.disks) {
        const double target = d.radius * (1.0 - eta);
        const Point s = d.eval(x) - d.center;
        const double ns = norm(s);
        if (ns <= target) continue;
        moved = true;
        const Point corr = ((ns - target) / ns) * s;
        double wsum = 0.0;
        const std::size_t vs[2] = {d.v0, d.v1};
        const double ws[2] = {d.w0, d.w1};
        for (int a = 0; a < 2; ++a) {
          if (ws[a] != 0.0 && !(a == 1 && vs[1] == vs[0])) wsum += ws[a] * ws[a];
        }
        for (int a = 0; a < 2; ++a) {
          if (ws[a] == 0.0 || (a == 1 && vs[1] == vs[0])) continue;
          const double w = (vs[0] == vs[1]) ? 1.0 / (ws[0] + ws[1]) : ws[a] / wsum;
          if (frees(p, vs[a], 0)) x[vs[a]].x -= w * corr.x;
          if (frees(p, vs[a], 1)) x[vs[a]].y -= w * corr.y;
        }
      }
      if (!moved) break;
    }
    if (strict(0.5 * eta)) return true;
  }
  return strict(0.0);
}

FixedTopologyResult minimize_length(const FixedTopologyProblem& p, std::vector<Point> init,
                                    const FixedTopologyOptions& opt) {
  FixedTopologyResult res;
  if (init.size() != p.num_vertices) init.resize(p.num_vertices);
  res.feasible = make_strictly_feasible(p, init);
  res.positions = init;
  res.length = total_length(p.edges, init);
  if (!res.feasible) return res;

  Barrier B(p);
  if (B.nvar == 0) {
    res.converged = true;
    return res;
  }
  const double scale = problem_scale(p, init);
  const double m = static_cast<double>(p.disks.size());
  const double gap_target = opt.rel_gap * scale;
  const double delta_final = opt.rel_smoothing * scale;
  const double ne = std::max<double>(1.0, static_cast<double>(p.edges.size()));
  const double L0 = std::max(res.length, 1e-6 * scale);
  B.t = m > 0 ? std::max(m, 1.0) / (0.1 * L0) : 1.0 / scale;

  std::vector<Point> x = init;
  Eigen::VectorXd g;
  std::vector<Eigen::Triplet<double>> trip;
  Eigen::SparseMatrix<double> H(B.nvar, B.nvar);
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  bool pattern = false;
  int it = 0;
  bool done = false;
  while (!done && it < opt.max_iterations) {
    const double gap = m > 0 ? m / B.t : 0.0;
    B.delta = std::max(delta_final, std::min(1e-3 * scale, gap / ne));
    const double inner_tol = m > 0 ? 1e-7 * m : 1e-16;
    bool inner_ok = false;
    double F = B.value(x);
    while (it < opt.max_iterations) {
      ++it;
      B.assemble(x, g, trip);
      double dmax = 0.0;
      for (const auto& tr : trip) {
        if (tr.row() == tr.col()) dmax = std::max(dmax, std::abs(tr.value()));
      }
      Eigen::VectorXd dx;
      double ridge = 1e-13 * std::max(dmax, 1e-300);
      bool solved = false;
      for (int attempt = 0; attempt < 8 && !solved; ++attempt, ridge *= 100.0) {
        auto t2 = trip;
        for (int k = 0; k < B.nvar; ++k) t2.emplace_back(k, k, ridge);
        H.setFromTriplets(t2.begin(), t2.end());
        if (!pattern) {
          ldlt.analyzePattern(H);
          pattern = true;
        }
        ldlt.factorize(H);
        if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() <= 0.0) continue;
        dx = ldlt.solve(-g);
        solved = dx.allFinite();
      }
      if (!solved) break;
      const double lam2 = -g.dot(dx);
      // lam2 / (2 t) bounds the length suboptimality of the barrier stage.
      if (!(lam2 > 2.0 * std::max(inner_tol, 1e-12 * std::abs(F)))) {
        inner_ok = true;
        break;
      }
      double alpha = 1.0;
      std::vector<Point> xn;
      double Fn = F;
      bool accepted = false;
      while (alpha > 1e-16) {
        xn = x;
        B.step(xn, dx, alpha);
        Fn = B.value(xn);
        // Inside the quadratic convergence region a feasible full step is
        // taken even when F is below rounding resolution.
        const bool quadratic = alpha == 1.0 && lam2 < 0.25 && std::isfinite(Fn) &&
                               Fn <= F + 1e-12 * std::abs(F);
        if (quadratic || Fn <= F - 0.25 * alpha * lam2) {
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted) {
        inner_ok = true;
        break;
      }
      x.swap(xn);
      F = Fn;
    }
    if (!inner_ok) break;
    if (gap <= gap_target && B.delta <= delta_final) {
      done = true;
      break;
    }
    if (m == 0 && B.delta <= delta_final) {
      done = true;
      break;
    }
    if (m > 0) B.t *= opt.mu;
  }
  res.positions = x;
  res.length = total_length(p.edges, x);
  res.iterations = it;
  res.converged = done;
  return res;
}

}  // namespace mdmin
