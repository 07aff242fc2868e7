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

#include "mdmin/topology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace mdmin {

std::vector<std::size_t> Topology::degrees() const {
  std::vector<std::size_t> deg(num_vertices(), 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool Topology::is_full() const {
  const auto deg = degrees();
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (v < terminals ? deg[v] != 1 : deg[v] != 3) return false;
  }
  return terminals >= 2;
}

std::string canonical_form(const Topology& t) {
  const std::size_t n = t.num_vertices();
  if (n == 0) return "()";
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Rooted at terminal 0; terminals carry their labels, Steiner vertices
  // are anonymous, children are sorted.
  auto enc = [&](auto&& self, std::size_t v, std::size_t parent) -> std::string {
    std::vector<std::string> kids;
    for (std::size_t w : adj[v]) {
      if (w != parent) kids.push_back(self(self, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + (v < t.terminals ? std::to_string(v) : std::string("s"));
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  return enc(enc, 0, n);
}

std::vector<Topology> full_topologies(int k) {
  if (k < 2) return {};
  if (k == 2) return {Topology{2, 0, {{0, 1}}}};
  std::vector<Topology> cur{Topology{3, 1, {{0, 3}, {1, 3}, {2, 3}}}};
  for (int t = 3; t < k; ++t) {
    std::vector<Topology> next;
    for (const auto& top : cur) {
      for (std::size_t e = 0; e < top.edges.size(); ++e) {
        // Relabel: terminals shift up by one slot to make room for t.
        auto relabel = [&](std::size_t v) { return v < top.terminals ? v : v + 1; };
        Topology nt;
        nt.terminals = top.terminals + 1;
        nt.steiner = top.steiner + 1;
        const std::size_t s = nt.num_vertices() - 1;
        for (std::size_t f = 0; f < top.edges.size(); ++f) {
          const std::size_t a = relabel(top.edges[f].first), b = relabel(top.edges[f].second);
          if (f == e) {
            nt.edges.push_back({a, s});
            nt.edges.push_back({s, b});
          } else {
            nt.edges.push_back({a, b});
          }
        }
        nt.edges.push_back({static_cast<std::size_t>(t), s});
        next.push_back(std::move(nt));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

// Contracts the edge between Steiner vertex s and terminal v; v takes over
// the other neighbours of s and the Steiner vertices are renumbered.
Topology contract(const Topology& t, std::size_t s, std::size_t v) {
  Topology out;
  out.terminals = t.terminals;
  out.steiner = t.steiner - 1;
  auto relabel = [&](std::size_t x) { return x == s ? v : (x > s ? x - 1 : x); };
  for (auto [a, b] : t.edges) {
    if ((a == s && b == v) || (a == v && b == s)) continue;
    out.edges.push_back({relabel(a), relabel(b)});
  }
  return out;
}

Topology normalized(Topology t) {
  for (auto& [a, b] : t.edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

}  // namespace

std::vector<Topology> enumerate_topologies(int k, int cap) {
  if (k < 1) throw std::invalid_argument("enumerate_topologies: k must be positive");
  if (k > cap) throw std::invalid_argument("enumerate_topologies: k exceeds the configured cap");
  if (k == 1) return {Topology{1, 0, {}}};
  std::vector<Topology> out;
  std::set<std::string> seen;
  std::deque<Topology> queue;
  for (auto& t : full_topologies(k)) {
    if (seen.insert(canonical_form(t)).second) {
      out.push_back(normalized(t));
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const Topology t = queue.front();
    queue.pop_front();
    for (auto [a, b] : t.edges) {
      for (auto [s, v] : {std::pair{a, b}, std::pair{b, a}}) {
        if (s < t.terminals || v >= t.terminals) continue;
        Topology c = contract(t, s, v);
        const auto deg = c.degrees();
        if (deg[v] > 3) continue;
        if (seen.insert(canonical_form(c)).second) {
          out.push_back(normalized(c));
          queue.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

}  // namespace mdmin
