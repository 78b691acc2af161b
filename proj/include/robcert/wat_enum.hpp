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

// Enumeration of weighted asteroidal triples in O(n^3).
//
// For every pivot v the components of H_v are computed, and every pair {x, y}
// inside one component bumps the counter of the triple {x, y, v}. A triple is
// weighted asteroidal exactly when its counter reaches 3.

#ifndef ROBCERT_WAT_ENUM_HPP
#define ROBCERT_WAT_ENUM_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "robcert/avoidance.hpp"
#include "robcert/certificates.hpp"
#include "robcert/matrix.hpp"

namespace robcert {

/// One small counter per unordered triple of positions, stored in
/// combinatorial-number-system order of the mirrored positions n - 1 - p, so
/// that a backward scan visits triples in lexicographic order.
class TripleCounter {
 public:
  explicit TripleCounter(std::size_t n) : n_(n), counts_(choose3(n), 0) {}

  std::size_t elements() const { return n_; }
  std::size_t size() const { return counts_.size(); }

  /// Index of the triple {i, j, k} of distinct positions, any order.
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    return choose3(n_ - 1 - i) + k_choose2(n_ - 1 - j) + (n_ - 1 - k);
  }

  std::uint8_t get(std::size_t i, std::size_t j, std::size_t k) const {
    return counts_[index(i, j, k)];
  }
  std::uint8_t at_index(std::size_t idx) const { return counts_[idx]; }

  void set(std::size_t idx, std::uint8_t value) { counts_[idx] = value; }

  std::size_t full_count() const { return static_cast<std::size_t>(std::count(counts_.begin(), counts_.end(), 3)); }

  /// Calls fn(i, j, k), i < j < k, for every triple whose counter equals 3,
  /// in lexicographic order.
  template <class Fn>
  void for_each_full(Fn&& fn) const {
    std::size_t idx = counts_.size();
    for (std::size_t i = 0; i + 2 < n_; ++i) {
      for (std::size_t j = i + 1; j + 1 < n_; ++j) {
        for (std::size_t k = j + 1; k < n_; ++k) {
          if (counts_[--idx] == 3) fn(i, j, k);
        }
      }
    }
  }

  static std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

 private:
  static std::size_t k_choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

  std::size_t n_;
  std::vector<std::uint8_t> counts_;
};

namespace detail {

inline unsigned worker_count(unsigned requested, std::size_t n) {
  unsigned t = std::max(1u, requested);
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(n, 1)));
}

/// Runs fn(w, workers) on `workers` threads, or inline when there is one.
template <class Fn>
void run_strided(unsigned workers, Fn&& fn) {
  if (workers == 1) {
    fn(std::size_t{0}, std::size_t{1});
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fn, std::size_t{w}, std::size_t{workers});
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// The counter f of the enumeration: for each triple, how many of its three
/// elements v have the other two in one component of H_v.
///
/// Every H_v is built once and its component labels kept; each counter is
/// then written exactly once, in storage order, as the sum of its three
/// indicators. Workers take interleaved values of the smallest position.
inline TripleCounter count_avoidance_triples(const SymMatrix& a, unsigned threads = 1) {
  const std::size_t n = a.size();
  TripleCounter f(n);
  if (n < 3) return f;
  const unsigned workers = detail::worker_count(threads, n);

  // comp[v * n + u]: component of u in H_v; by_member is its transpose.
  std::vector<std::int32_t> comp(n * n);
  std::vector<std::int32_t> by_member(n * n);
  const auto build = [&](std::size_t first, std::size_t stride) {
    for (std::size_t v = first; v < n; v += stride) {
      const AvoidanceGraph h(a, v);
      for (std::size_t u = 0; u < n; ++u) comp[v * n + u] = h.component(u);
    }
  };
  const auto fill = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i + 2 < n; i += stride) {
      const std::int32_t* ci = &comp[i * n];
      const std::int32_t* mi = &by_member[i * n];
      // Counters of triples with smallest position i end just below this index.
      std::size_t idx = f.index(i, i + 1, i + 2) + 1;
      for (std::size_t j = i + 1; j + 1 < n; ++j) {
        const std::int32_t* cj = &comp[j * n];
        const std::int32_t* mj = &by_member[j * n];
        const std::int32_t ij = ci[j];
        const std::int32_t ji = cj[i];
        for (std::size_t k = j + 1; k < n; ++k) {
          f.set(--idx, static_cast<std::uint8_t>((ci[k] == ij) + (cj[k] == ji) + (mi[k] == mj[k])));
        }
      }
    }
  };
  const auto transpose = [&](std::size_t first, std::size_t stride) {
    for (std::size_t u = first; u < n; u += stride) {
      for (std::size_t v = 0; v < n; ++v) by_member[u * n + v] = comp[v * n + u];
    }
  };

  detail::run_strided(workers, build);
  detail::run_strided(workers, transpose);
  detail::run_strided(workers, fill);
  return f;
}

/// All weighted asteroidal triples as label triples, each listed in matrix
/// order, sorted lexicographically by positions.
inline std::vector<Triple> enumerate_wat_triples(const SymMatrix& a, unsigned threads = 1) {
  const TripleCounter f = count_avoidance_triples(a, threads);
  std::vector<Triple> out;
  out.reserve(f.full_count());
  f.for_each_full([&](std::size_t i, std::size_t j, std::size_t k) {
    out.push_back({a.label(i), a.label(j), a.label(k)});
  });
  return out;
}

/// All weighted asteroidal triples with witnessing paths. The paths are the
/// ones make_wat would produce; each H_v is built once.
inline std::vector<WeightedAsteroidalTriple> enumerate_wats(const SymMatrix& a, unsigned threads = 1) {
  const auto triples = enumerate_wat_triples(a, threads);
  std::vector<WeightedAsteroidalTriple> out(triples.size());
  std::vector<std::vector<std::size_t>> by_element(a.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    out[t].x = triples[t][0];
    out[t].y = triples[t][1];
    out[t].z = triples[t][2];
    for (Label e : triples[t]) by_element[a.position(e)].push_back(t);
  }
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (by_element[v].empty()) continue;
    const AvoidanceGraph h(a, v);
    const Label lv = a.label(v);
    for (std::size_t t : by_element[v]) {
      auto& w = out[t];
      Path* slot = lv == w.z ? &w.xy : lv == w.y ? &w.xz : &w.yz;
      const Label from = lv == w.x ? w.y : w.x;
      const Label to = lv == w.z ? w.y : w.z;
      auto route = h.shortest_path(a.position(from), a.position(to));
      detail::ensure(route.has_value(), "enumerate_wats: counted pair is not connected");
      *slot = detail::to_path(a, *route, v);
    }
  }
  return out;
}

/// The first weighted asteroidal triple completed while sweeping pivots in
/// matrix order, or nothing when the matrix is Robinsonian.
///
/// Instead of the full counter this keeps the component labels of every
/// H_v processed so far (O(n^2) memory); when pivot v is reached every
/// triple whose largest position is v is complete and can be tested.
inline std::optional<WeightedAsteroidalTriple> find_one_wat(const SymMatrix& a) {
  const std::size_t n = a.size();
  if (n < 3) return std::nullopt;
  std::vector<std::vector<int>> comp(n);
  for (std::size_t v = 0; v < n; ++v) {
    const AvoidanceGraph h(a, v);
    comp[v].resize(n);
    for (std::size_t u = 0; u < n; ++u) comp[v][u] = h.component(u);
    for (std::size_t y = 1; y < v; ++y) {
      for (std::size_t x = 0; x < y; ++x) {
        if (comp[v][x] == comp[v][y] && comp[x][y] == comp[x][v] && comp[y][x] == comp[y][v]) {
          auto w = make_wat(a, a.label(x), a.label(y), a.label(v));
          detail::ensure(w.has_value(), "find_one_wat: counted triple has no witnesses");
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace robcert

#endif  // ROBCERT_WAT_ENUM_HPP
