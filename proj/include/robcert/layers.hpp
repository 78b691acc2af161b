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

// Similarity layers rooted at an element.
//
// X_0 = {a}; X_i collects the remaining elements y that every already placed
// x rates at least as similar as any other remaining element:
//   A_xy >= A_xz  for all x in X_0..X_{i-1}, z not in X_0..X_{i-1}.
// The construction stops at the first empty layer, which may leave elements
// uncovered.

#ifndef ROBCERT_LAYERS_HPP
#define ROBCERT_LAYERS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "robcert/avoidance.hpp"
#include "robcert/certificates.hpp"
#include "robcert/decomposition.hpp"
#include "robcert/errors.hpp"
#include "robcert/matrix.hpp"

namespace robcert {

struct LayerStructure {
  Label root = 0;
  /// X_0, ..., X_k; members of each layer in matrix order.
  std::vector<std::vector<Label>> layers;
  bool covered = false;
  /// Layer index per position of the source matrix, -1 when uncovered.
  std::vector<int> layer_by_position;

  std::size_t last() const { return layers.size() - 1; }
  int layer(std::size_t pos) const { return layer_by_position[pos]; }

  /// x strictly precedes y in the layer order.
  bool precedes(std::size_t x, std::size_t y) const {
    return layer_by_position[x] < layer_by_position[y];
  }
};

inline LayerStructure similarity_layers(const SymMatrix& a, Label root) {
  const std::size_t n = a.size();
  const std::size_t r = a.position(root);
  LayerStructure psi;
  psi.root = root;
  psi.layer_by_position.assign(n, -1);
  psi.layer_by_position[r] = 0;
  psi.layers.push_back({root});

  std::vector<std::size_t> placed{r};
  std::vector<std::uint32_t> row_max(n);
  std::size_t remaining = n - 1;
  while (remaining > 0) {
    for (std::size_t x : placed) {
      std::uint32_t best = 0;
      for (std::size_t z = 0; z < n; ++z) {
        if (psi.layer_by_position[z] < 0) best = std::max(best, a.rank(x, z));
      }
      row_max[x] = best;
    }
    std::vector<std::size_t> next;
    for (std::size_t y = 0; y < n; ++y) {
      if (psi.layer_by_position[y] >= 0) continue;
      const bool everywhere_max = std::all_of(placed.begin(), placed.end(), [&](std::size_t x) {
        return a.rank(x, y) == row_max[x];
      });
      if (everywhere_max) next.push_back(y);
    }
    if (next.empty()) break;
    const int index = static_cast<int>(psi.layers.size());
    std::vector<Label> layer;
    for (std::size_t y : next) {
      psi.layer_by_position[y] = index;
      layer.push_back(a.label(y));
      placed.push_back(y);
    }
    psi.layers.push_back(std::move(layer));
    remaining -= next.size();
  }
  psi.covered = remaining == 0;
  return psi;
}

namespace detail {

inline void require_critical_root(const SymMatrix& a, const LayerStructure& psi) {
  require(is_critical(a, psi.root), "layer structure root is not critical");
}

inline WeightedAsteroidalTriple wat_or_bug(const SymMatrix& a, Label x, Label y, Label z,
                                           const char* where) {
  auto w = make_wat(a, x, y, z);
  ensure(w.has_value(), std::string(where) + ": expected weighted asteroidal triple is missing");
  return std::move(*w);
}

}  // namespace detail

/// When the layers rooted at a critical element miss part of V, two covered
/// elements disagree on which uncovered elements are most similar, and that
/// disagreement yields a weighted asteroidal triple {root, u, v}.
inline WeightedAsteroidalTriple wat_from_noncover(const SymMatrix& a, const LayerStructure& psi) {
  detail::require(!psi.covered, "wat_from_noncover: layer structure covers V");
  detail::require_critical_root(a, psi);
  const std::size_t n = a.size();
  std::vector<std::size_t> covered;
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < n; ++i) {
    (psi.layer(i) >= 0 ? covered : outside).push_back(i);
  }
  // argmax sets M_x over the uncovered elements
  std::vector<std::vector<char>> best(covered.size(), std::vector<char>(n, 0));
  for (std::size_t k = 0; k < covered.size(); ++k) {
    const std::size_t x = covered[k];
    std::uint32_t hi = 0;
    for (std::size_t v : outside) hi = std::max(hi, a.rank(x, v));
    for (std::size_t v : outside) best[k][v] = a.rank(x, v) == hi;
  }
  const auto first_only_in = [&](std::size_t p, std::size_t q) -> std::optional<std::size_t> {
    for (std::size_t v : outside) {
      if (best[p][v] && !best[q][v]) return v;
    }
    return std::nullopt;
  };
  for (std::size_t p = 0; p < covered.size(); ++p) {
    for (std::size_t q = p + 1; q < covered.size(); ++q) {
      const auto u = first_only_in(p, q);
      const auto v = first_only_in(q, p);
      if (u && v) {
        return detail::wat_or_bug(a, psi.root, a.label(*u), a.label(*v), "wat_from_noncover");
      }
    }
  }
  throw InvariantViolation("wat_from_noncover: argmax sets form a chain");
}

/// Scans the starred layer conditions
///   (L1*) x in X_i, y, z in X_j, i < j:          A_xy = A_xz <= A_yz
///   (L2*) x in X_i, y in X_j, z in X_h, i<j<h:   A_xz <= min(A_xy, A_yz)
/// and returns the triple {root, y, z} of the first violation, ordered by
/// (i, j, positions). Requires a critical root and full coverage.
inline std::optional<WeightedAsteroidalTriple> check_layer_stars(const SymMatrix& a,
                                                                 const LayerStructure& psi) {
  detail::require(psi.covered, "check_layer_stars: layer structure does not cover V");
  detail::require_critical_root(a, psi);
  std::vector<std::vector<std::size_t>> layers;
  for (const auto& layer : psi.layers) layers.push_back(detail::positions_of(a, layer));

  const std::size_t k = layers.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t x : layers[i]) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (std::size_t y : layers[j]) {
          // L1 already gives A_xy = A_xz inside X_j, and L2 gives A_xz <= A_xy
          // for later layers; what can fail is the comparison with A_yz.
          for (std::size_t h = j; h < k; ++h) {
            for (std::size_t z : layers[h]) {
              if (z == y) continue;
              if (a.rank(x, z) > a.rank(y, z)) {
                return detail::wat_or_bug(a, psi.root, a.label(y), a.label(z), "check_layer_stars");
              }
            }
          }
        }
      }
    }
  }
  if (layers.back().size() >= 2) {
    detail::ensure(is_strongly_homogeneous(a, psi.layers.back()),
                   "check_layer_stars: last layer is not strongly homogeneous");
  }
  return std::nullopt;
}

}  // namespace robcert

#endif  // ROBCERT_LAYERS_HPP
