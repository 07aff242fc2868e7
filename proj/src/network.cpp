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

#include "mdmin/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace mdmin {

namespace {

struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) parent[b] = a; else parent[a] = b;
    return true;
  }
};

}  // namespace

Network::Network(std::vector<Point> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  index_and_validate();
}

void Network::index_and_validate() {
  const std::size_t nv = vertices_.size();
  if (nv == 0) {
    if (!edges_.empty()) throw std::invalid_argument("network: edges without vertices");
    return;
  }
  for (const Point& p : vertices_) {
    if (!is_finite(p)) throw std::invalid_argument("network: non-finite vertex");
  }
  adj_.assign(nv, {});
  inc_.assign(nv, {});
  std::set<Edge> seen;
  DisjointSet ds(nv);
  std::size_t components = nv;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [i, j] = edges_[e];
    if (i >= nv || j >= nv) throw std::invalid_argument("network: edge index out of range");
    if (i == j) throw std::invalid_argument("network: self-loop edge " + std::to_string(e));
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
      throw std::invalid_argument("network: duplicate edge " + std::to_string(e));
    }
    if (dist(vertices_[i], vertices_[j]) <= kMergeTol) {
      throw std::invalid_argument("network: zero-length edge " + std::to_string(e));
    }
    adj_[i].push_back(j);
    adj_[j].push_back(i);
    inc_[i].push_back(e);
    inc_[j].push_back(e);
    if (ds.unite(i, j)) --components;
  }
  if (components != 1) throw std::invalid_argument("network: not connected");
}

Network Network::build(const std::vector<Point>& vertices, const std::vector<Edge>& edges,
                       double merge_tol) {
  std::vector<std::size_t> map(vertices.size());
  std::vector<Point> kept;
  // Kept vertices bucketed on a grid of cell merge_tol, so only the 3x3
  // neighbouring cells are searched; the lowest kept index wins.
  const bool exact = !(merge_tol > 0.0);
  std::map<std::pair<double, double>, std::vector<std::size_t>> grid;
  auto key = [&](Point p) {
    return exact ? std::pair{p.x, p.y} : std::pair{std::floor(p.x / merge_tol), std::floor(p.y / merge_tol)};
  };
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point v = vertices[i];
    const auto [kx, ky] = key(v);
    std::size_t found = kept.size();
    const int reach = exact ? 0 : 1;
    for (int dx = -reach; dx <= reach; ++dx) {
      for (int dy = -reach; dy <= reach; ++dy) {
        auto it = grid.find({kx + dx, ky + dy});
        if (it == grid.end()) continue;
        for (std::size_t k : it->second) {
          if (k < found && dist(kept[k], v) <= merge_tol) found = k;
        }
      }
    }
    if (found == kept.size()) {
      kept.push_back(v);
      grid[{kx, ky}].push_back(found);
    }
    map[i] = found;
  }
  std::vector<Edge> out;
  std::set<Edge> seen;
  for (auto [i, j] : edges) {
    if (i >= vertices.size() || j >= vertices.size()) {
      throw std::invalid_argument("network: edge index out of range");
    }
    std::size_t a = map[i], b = map[j];
    if (a == b) continue;
    if (seen.insert({std::min(a, b), std::max(a, b)}).second) out.push_back({a, b});
  }
  return Network(std::move(kept), std::move(out));
}

Network Network::single(Point p) { return Network({p}, {}); }

Network Network::polyline(const std::vector<Point>& pts) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) e.push_back({i, i + 1});
  return build(pts, e);
}

double Network::edge_length(std::size_t e) const {
  return dist(vertices_[edges_[e].first], vertices_[edges_[e].second]);
}

std::size_t Network::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

double length(const Network& n) {
  double s = 0.0;
  for (std::size_t e = 0; e < n.num_edges(); ++e) s += n.edge_length(e);
  return s;
}

NearestOnNetwork nearest_on_network(Point p, const Network& n) {
  NearestOnNetwork best;
  if (n.num_edges() == 0) {
    if (n.empty()) throw std::invalid_argument("nearest_on_network: empty network");
    best.nearest = n.vertex(0);
    best.distance = dist(p, best.nearest);
    return best;
  }
  best.distance = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < n.num_edges(); ++e) {
    const Point a = n.vertex(n.edges()[e].first);
    const Point b = n.vertex(n.edges()[e].second);
    const double t = project_param(p, a, b);
    const Point q = lerp(a, b, t);
    const double d = dist(p, q);
    if (d < best.distance) {
      best = {d, q, static_cast<long>(e), t};
    }
  }
  return best;
}

EdgeIndex::EdgeIndex(const Network& n) : net_(&n) {
  if (n.empty()) throw std::invalid_argument("EdgeIndex: empty network");
  Point hi = n.vertex(0);
  lo_ = hi;
  for (const Point& v : n.vertices()) {
    lo_ = {std::min(lo_.x, v.x), std::min(lo_.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  const double w = hi.x - lo_.x, h = hi.y - lo_.y;
  const double ne = static_cast<double>(std::max<std::size_t>(1, n.num_edges()));
  cell_ = std::max({std::sqrt(w * h / ne), std::max(w, h) / ne, 1e-12 * (1.0 + std::max(w, h))});
  nx_ = static_cast<long>(w / cell_) + 1;
  ny_ = static_cast<long>(h / cell_) + 1;
  cells_.resize(static_cast<std::size_t>(nx_ * ny_));
  for (std::size_t e = 0; e < n.num_edges(); ++e) {
    const Point a = n.vertex(n.edges()[e].first), b = n.vertex(n.edges()[e].second);
    const long steps = static_cast<long>(std::ceil(2.0 * dist(a, b) / cell_)) + 1;
    long last = -1;
    for (long k = 0; k <= steps; ++k) {
      const Point q = lerp(a, b, static_cast<double>(k) / steps);
      const long cx = std::clamp(static_cast<long>((q.x - lo_.x) / cell_), 0L, nx_ - 1);
      const long cy = std::clamp(static_cast<long>((q.y - lo_.y) / cell_), 0L, ny_ - 1);
      const long id = cy * nx_ + cx;
      if (id != last && (cells_[id].empty() || cells_[id].back() != e)) cells_[id].push_back(e);
      last = id;
    }
  }
}

NearestOnNetwork EdgeIndex::nearest(Point p) const {
  const Network& n = *net_;
  if (n.num_edges() == 0) return nearest_on_network(p, n);
  NearestOnNetwork best;
  best.distance = std::numeric_limits<double>::infinity();
  const long cx = std::clamp(static_cast<long>(std::floor((p.x - lo_.x) / cell_)), 0L, nx_ - 1);
  const long cy = std::clamp(static_cast<long>(std::floor((p.y - lo_.y) / cell_)), 0L, ny_ - 1);
  auto visit = [&](long x, long y) {
    for (std::size_t e : cells_[y * nx_ + x]) {
      const Point a = n.vertex(n.edges()[e].first);
      const Point b = n.vertex(n.edges()[e].second);
      const double t = project_param(p, a, b);
      const Point q = lerp(a, b, t);
      const double d = dist(p, q);
      if (d < best.distance || (d == best.distance && static_cast<long>(e) < best.edge)) {
        best = {d, q, static_cast<long>(e), t};
      }
    }
  };
  for (long k = 0;; ++k) {
    const long x0 = cx - k, x1 = cx + k, y0 = cy - k, y1 = cy + k;
    for (long x = std::max(x0, 0L); x <= std::min(x1, nx_ - 1); ++x) {
      if (y0 >= 0) visit(x, y0);
      if (y1 < ny_ && k > 0) visit(x, y1);
    }
    for (long y = std::max(y0 + 1, 0L); y <= std::min(y1 - 1, ny_ - 1); ++y) {
      if (x0 >= 0) visit(x0, y);
      if (x1 < nx_ && k > 0) visit(x1, y);
    }
    // Lower bound on the distance from p to any cell outside the square.
    double bound = std::numeric_limits<double>::infinity();
    bool all = true;
    if (x0 > 0) bound = std::min(bound, std::max(0.0, p.x - (lo_.x + x0 * cell_))), all = false;
    if (x1 < nx_ - 1) bound = std::min(bound, std::max(0.0, lo_.x + (x1 + 1) * cell_ - p.x)), all = false;
    if (y0 > 0) bound = std::min(bound, std::max(0.0, p.y - (lo_.y + y0 * cell_))), all = false;
    if (y1 < ny_ - 1) bound = std::min(bound, std::max(0.0, lo_.y + (y1 + 1) * cell_ - p.y)), all = false;
    // Edges are registered at samples spaced cell/2 apart.
    if (all || best.distance < bound - 0.5 * cell_) break;
  }
  return best;
}

std::pair<double, Point> dist_point_network(Point p, const Network& n) {
  const NearestOnNetwork r = nearest_on_network(p, n);
  return {r.distance, r.nearest};
}

bool is_tree(const Network& n) {
  return !n.empty() && n.num_edges() + 1 == n.num_vertices();
}

std::vector<Ray> tangent_rays_at(const Network& n, std::size_t v) {
  if (v >= n.num_vertices()) throw std::out_of_range("tangent_rays_at: vertex");
  std::vector<Ray> rays;
  for (std::size_t w : n.neighbors(v)) rays.push_back(ray_towards(n.vertex(v), n.vertex(w)));
  return rays;
}

bool is_valid_path(const Network& n, const PathTrace& path) {
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= n.num_vertices() || !used.insert(path[i]).second) return false;
    if (i > 0) {
      const auto& nb = n.neighbors(path[i - 1]);
      if (std::find(nb.begin(), nb.end(), path[i]) == nb.end()) return false;
    }
  }
  return !path.empty();
}

std::vector<Point> discretize(const Network& n, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("discretize: spacing must be positive");
  std::vector<Point> pts(n.vertices());
  for (std::size_t e = 0; e < n.num_edges(); ++e) {
    const Point a = n.vertex(n.edges()[e].first);
    const Point b = n.vertex(n.edges()[e].second);
    const int k = static_cast<int>(std::ceil(dist(a, b) / spacing));
    for (int i = 1; i < k; ++i) pts.push_back(lerp(a, b, static_cast<double>(i) / k));
  }
  return pts;
}

double hausdorff_distance(const Network& a, const Network& b, double resolution) {
  double h = 0.0;
  for (Point p : discretize(a, resolution)) h = std::max(h, nearest_on_network(p, b).distance);
  for (Point p : discretize(b, resolution)) h = std::max(h, nearest_on_network(p, a).distance);
  return h;
}

Network contract_short_edges(const Network& n, double tol) {
  const std::size_t nv = n.num_vertices();
  DisjointSet ds(nv);
  for (std::size_t e = 0; e < n.num_edges(); ++e) {
    if (n.edge_length(e) < tol) ds.unite(n.edges()[e].first, n.edges()[e].second);
  }
  std::vector<std::size_t> root_index(nv, nv);
  std::vector<Point> sum;
  std::vector<double> cnt;
  std::vector<std::size_t> map(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t r = ds.find(v);
    if (root_index[r] == nv) {
      root_index[r] = sum.size();
      sum.push_back({0, 0});
      cnt.push_back(0);
    }
    map[v] = root_index[r];
    sum[map[v]] += n.vertex(v);
    cnt[map[v]] += 1;
  }
  std::vector<Point> verts(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) verts[i] = sum[i] / cnt[i];
  std::vector<Edge> edges;
  for (auto [i, j] : n.edges()) edges.push_back({map[i], map[j]});
  return Network::build(verts, edges, 0.0);
}

Network remove_collinear_vertices(const Network& n, double angle_tol) {
  const std::size_t nv = n.num_vertices();
  std::vector<bool> removed(nv, false);
  // Neighbour lists that follow removals.
  std::vector<std::vector<std::size_t>> adj(nv);
  for (std::size_t v = 0; v < nv; ++v) adj[v] = n.neighbors(v);
  for (std::size_t v = 0; v < nv; ++v) {
    if (adj[v].size() != 2) continue;
    const std::size_t a = adj[v][0], b = adj[v][1];
    const double ang = angle_between(n.vertex(a) - n.vertex(v), n.vertex(b) - n.vertex(v));
    if (kPi - ang > angle_tol) continue;
    if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) continue;
    removed[v] = true;
    std::replace(adj[a].begin(), adj[a].end(), v, b);
    std::replace(adj[b].begin(), adj[b].end(), v, a);
    adj[v].clear();
  }
  std::vector<std::size_t> map(nv, nv);
  std::vector<Point> verts;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!removed[v]) {
      map[v] = verts.size();
      verts.push_back(n.vertex(v));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t w : adj[v]) {
      if (v < w) edges.push_back({map[v], map[w]});
    }
  }
  return Network(std::move(verts), std::move(edges));
}

}  // namespace mdmin
