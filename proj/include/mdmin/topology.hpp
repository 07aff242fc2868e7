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

#ifndef MDMIN_TOPOLOGY_HPP_
#define MDMIN_TOPOLOGY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "mdmin/network.hpp"

namespace mdmin {

// Abstract Steiner tree: vertices [0, terminals) are bound to the terminal
// balls (terminal i to ball i), vertices [terminals, terminals + steiner)
// are free.
struct Topology {
  std::size_t terminals = 0;
  std::size_t steiner = 0;
  std::vector<Edge> edges;

  std::size_t num_vertices() const { return terminals + steiner; }
  std::vector<std::size_t> degrees() const;
  bool is_full() const;

  friend bool operator==(const Topology&, const Topology&) = default;
};

inline constexpr int kDefaultTopologyCap = 6;

// Canonical string, invariant under relabelling of Steiner vertices.
std::string canonical_form(const Topology& t);

// Full topologies (every terminal a leaf, every Steiner vertex of degree 3).
std::vector<Topology> full_topologies(int k);

// Full and degenerate topologies on k terminals with at most k - 2 Steiner
// vertices (Steiner degree 3, terminal degree <= 3), one per isomorphism
// class, in a deterministic order.
std::vector<Topology> enumerate_topologies(int k, int cap = kDefaultTopologyCap);

}  // namespace mdmin

#endif  // MDMIN_TOPOLOGY_HPP_
