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

#ifndef MDMIN_NETWORK_HPP_
#define MDMIN_NETWORK_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "mdmin/geometry.hpp"

namespace mdmin {

using Edge = std::pair<std::size_t, std::size_t>;
using PathTrace = std::vector<std::size_t>;

inline constexpr double kMergeTol = 1e-9;

struct NearestOnNetwork {
  double distance = 0.0;
  Point nearest;
  // Edge index, or -1 when the network is a single vertex.
  long edge = -1;
  double param = 0.0;
};

// Embedded planar graph with straight edges. Immutable once built; the
// constructor enforces connectedness, no loops, no duplicate and no
// zero-length edges.
class Network {
 public:
  Network() = default;
  Network(std::vector<Point> vertices, std::vector<Edge> edges);

  // Merges vertices closer than merge_tol (first index wins), drops
  // resulting self-loops and duplicates, then validates.
  static Network build(const std::vector<Point>& vertices, const std::vector<Edge>& edges,
                       double merge_tol = kMergeTol);
  static Network single(Point p);
  static Network polyline(const std::vector<Point>& pts);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  bool empty() const { return vertices_.empty(); }

  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  // Neighbouring vertex indices, in ascending edge order.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  // Edge indices incident to v, aligned with neighbors(v).
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return inc_[v]; }

  double edge_length(std::size_t e) const;
  std::size_t max_degree() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void index_and_validate();

  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<std::size_t>> inc_;
};

double length(const Network& n);

NearestOnNetwork nearest_on_network(Point p, const Network& n);

// Uniform-grid index over the edges of a network for repeated nearest
// queries. Results (including tie-breaks) match nearest_on_network.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Network& n);
  NearestOnNetwork nearest(Point p) const;

 private:
  const Network* net_;
  Point lo_;
  double cell_ = 1.0;
  long nx_ = 1, ny_ = 1;
  std::vector<std::vector<std::size_t>> cells_;
};

// Returns (distance, nearest point).
std::pair<double, Point> dist_point_network(Point p, const Network& n);

bool is_tree(const Network& n);

std::vector<Ray> tangent_rays_at(const Network& n, std::size_t v);

// Checks that consecutive path entries are edges and no vertex repeats.
bool is_valid_path(const Network& n, const PathTrace& path);

// Symmetric Hausdorff distance, edges discretised at spacing <= resolution.
double hausdorff_distance(const Network& a, const Network& b, double resolution = 1e-3);

// Points of the network spaced at most `spacing` apart along every edge.
std::vector<Point> discretize(const Network& n, double spacing);

// Contracts every edge shorter than tol (vertex positions averaged) and
// removes degree-2 vertices whose two edges are collinear within
// angle_tol when collinear_cleanup is set.
Network contract_short_edges(const Network& n, double tol);
Network remove_collinear_vertices(const Network& n, double angle_tol);

}  // namespace mdmin

#endif  // MDMIN_NETWORK_HPP_
