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

// Shared fixtures and raw-table reference computations for the test suites.

#ifndef ROBCERT_TESTS_SUPPORT_HPP
#define ROBCERT_TESTS_SUPPORT_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "robcert/robcert.hpp"

namespace robcert::testing {

using Table = std::vector<std::vector<long long>>;

inline Table constant_table(std::size_t n, long long v = 1) { return Table(n, std::vector<long long>(n, v)); }

inline Table graph_table(const Graph& g) {
  Table t(g.size(), std::vector<long long>(g.size(), 0));
  for (const auto& [u, v] : g.edges()) t[u][v] = t[v][u] = 1;
  return t;
}

inline Graph claw() { return gen::star_graph(4); }

inline Table random_table(std::size_t n, long long max_entry, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(0, max_entry);
  Table t(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) t[i][j] = t[j][i] = d(rng);
  }
  return t;
}

/// x ~z y on a raw table: reachability through pairs (u, w) with
/// t[u][w] > min(t[u][z], t[w][z]), by Warshall closure.
inline bool raw_avoids(const Table& t, std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t n = t.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = 0; w < n; ++w) {
      if (u != w && u != z && w != z) r[u][w] = t[u][w] > std::min(t[u][z], t[w][z]);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (k == z) continue;
    for (std::size_t u = 0; u < n; ++u) {
      if (!r[u][k]) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (r[k][w]) r[u][w] = 1;
      }
    }
  }
  return r[x][y] != 0;
}

inline bool raw_is_wat(const Table& t, std::size_t x, std::size_t y, std::size_t z) {
  return raw_avoids(t, x, y, z) && raw_avoids(t, x, z, y) && raw_avoids(t, y, z, x);
}

/// All weighted asteroidal triples of a raw table, i < j < k, sorted.
inline std::vector<Triple> raw_wats(const Table& t) {
  std::vector<Triple> out;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (raw_is_wat(t, i, j, k)) out.push_back({Label(i), Label(j), Label(k)});
      }
    }
  }
  return out;
}

/// Every ordered triple along `order` satisfies t[x][z] <= min(t[x][y], t[y][z]).
inline bool raw_is_robinson_order(const Table& t, const std::vector<Label>& order) {
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto x = order[i], y = order[j], z = order[k];
        if (t[x][z] > std::min(t[x][y], t[y][z])) return false;
      }
    }
  }
  return true;
}

inline std::size_t index_of(const std::vector<Label>& v, Label x) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == x) return i;
  }
  return v.size();
}

}  // namespace robcert::testing

#endif  // ROBCERT_TESTS_SUPPORT_HPP
