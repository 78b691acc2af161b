// Copyright 2026 The robcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Paths avoiding an element, and the per-element avoidance graphs H_v.
//
// A pair {u, w} avoids v when A_uw > min(A_uv, A_wv), i.e. the triple (u, v, w)
// is not Robinson, so v can never sit between u and w in a Robinson ordering.
// H_v joins every such pair; a path avoiding v is a path in H_v.

#ifndef ROBCERT_AVOIDANCE_HPP
#define ROBCERT_AVOIDANCE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "robcert/errors.hpp"
#include "robcert/matrix.hpp"

namespace robcert {

/// Sequence of distinct elements, consecutive ones forming pairs that avoid
/// `avoided`.
struct Path {
  std::vector<Label> nodes;
  Label avoided = 0;

  Label front() const { return nodes.front(); }
  Label back() const { return nodes.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

namespace detail {

inline bool avoiding_edge(const SymMatrix& a, std::size_t u, std::size_t w, std::size_t v) {
  return a.rank(u, w) > std::min(a.rank(u, v), a.rank(w, v));
}

}  // namespace detail

/// H_v over the positions of the matrix it was built from. The pivot position
/// carries no edges and component -1.
class AvoidanceGraph {
 public:
  AvoidanceGraph(const SymMatrix& a, std::size_t pivot)
      : pivot_(a.label(pivot)), pivot_pos_(pivot), n_(a.size()), adj_(n_ * n_, 0), comp_(n_, -1) {
    const auto to_pivot = a.rank_row(pivot);
    for (std::size_t u = 0; u < n_; ++u) {
      if (u == pivot) continue;
      const auto row = a.rank_row(u);
      const std::uint32_t ru = to_pivot[u];
      std::uint8_t* out = adj_.data() + u * n_;
      for (std::size_t w = 0; w < n_; ++w) out[w] = row[w] > std::min(ru, to_pivot[w]);
      out[u] = 0;
      out[pivot] = 0;
    }
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n_; ++s) {
      if (s == pivot || comp_[s] >= 0) continue;
      const int id = static_cast<int>(count_++);
      comp_[s] = id;
      stack.push_back(s);
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n_; ++w) {
          if (adj_[u * n_ + w] && comp_[w] < 0) {
            comp_[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
  }

  Label pivot() const { return pivot_; }
  std::size_t pivot_position() const { return pivot_pos_; }
  /// Number of positions of the underlying matrix, pivot included.
  std::size_t size() const { return n_; }
  /// Number of vertices, i.e. every element except the pivot.
  std::size_t vertex_count() const { return n_ - 1; }

  bool has_edge(std::size_t u, std::size_t w) const { return adj_[u * n_ + w] != 0; }
  int component(std::size_t u) const { return comp_[u]; }
  std::size_t component_count() const { return count_; }

  bool connected(std::size_t u, std::size_t w) const {
    return u != pivot_pos_ && comp_[u] == comp_[w];
  }

  /// Breadth-first shortest path, scanning neighbours by increasing position.
  std::optional<std::vector<std::size_t>> shortest_path(std::size_t from, std::size_t to) const {
    if (!connected(from, to)) return std::nullopt;
    std::vector<std::size_t> parent(n_, n_);
    std::vector<std::size_t> queue{from};
    parent[from] = from;
    for (std::size_t head = 0; head < queue.size() && parent[to] == n_; ++head) {
      const std::size_t u = queue[head];
      for (std::size_t w = 0; w < n_; ++w) {
        if (adj_[u * n_ + w] && parent[w] == n_) {
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  Label pivot_;
  std::size_t pivot_pos_;
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
  std::vector<int> comp_;
  std::size_t count_ = 0;
};

inline AvoidanceGraph build_avoidance_graph(const SymMatrix& a, Label v) {
  return AvoidanceGraph(a, a.position(v));
}

/// x ~z y: some path from x to y avoids z.
inline bool avoids_path_exists(const SymMatrix& a, Label x, Label y, Label z) {
  detail::require_distinct(x, y, z);
  const AvoidanceGraph h = build_avoidance_graph(a, z);
  return h.connected(a.position(x), a.position(y));
}

namespace detail {

inline Path to_path(const SymMatrix& a, const std::vector<std::size_t>& positions, std::size_t avoided) {
  Path p;
  p.avoided = a.label(avoided);
  p.nodes.reserve(positions.size());
  for (std::size_t u : positions) p.nodes.push_back(a.label(u));
  return p;
}

}  // namespace detail

/// A shortest path from x to y avoiding z, or nothing when x and y lie in
/// different components of H_z.
inline std::optional<Path> find_avoiding_path(const SymMatrix& a, Label x, Label y, Label z) {
  detail::require_distinct(x, y, z);
  const std::size_t zp = a.position(z);
  const AvoidanceGraph h(a, zp);
  auto route = h.shortest_path(a.position(x), a.position(y));
  if (!route) return std::nullopt;
  return detail::to_path(a, *route, zp);
}

/// Every two other elements are joined by a path avoiding `element`.
inline bool is_critical(const SymMatrix& a, Label element) {
  const std::size_t p = a.position(element);
  if (a.size() <= 2) return true;
  return AvoidanceGraph(a, p).component_count() == 1;
}

}  // namespace robcert

#endif  // ROBCERT_AVOIDANCE_HPP
