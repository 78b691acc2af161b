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

// Seeded instance generators.

#ifndef ROBCERT_GEN_HPP
#define ROBCERT_GEN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "robcert/errors.hpp"
#include "robcert/matrix.hpp"
#include "robcert/uig.hpp"

namespace robcert::gen {

using Rng = std::mt19937_64;

/// Integer table that is Robinson in its natural order: each entry is the
/// smaller of its two neighbours towards the diagonal, minus 0 or 1.
inline std::vector<std::vector<long long>> robinson_table(std::size_t n, Rng& rng, long long top = 9) {
  std::vector<std::vector<long long>> t(n, std::vector<long long>(n, top));
  std::bernoulli_distribution drop(0.5);
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t i = 0; i + d < n; ++i) {
      const std::size_t j = i + d;
      const long long bound = d == 1 ? top : std::min(t[i][j - 1], t[i + 1][j]);
      t[i][j] = t[j][i] = bound - (drop(rng) ? 1 : 0);
    }
  }
  return t;
}

inline std::vector<std::vector<long long>> relabel(const std::vector<std::vector<long long>>& t, Rng& rng) {
  const std::size_t n = t.size();
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[pi[i]][pi[j]] = t[i][j];
  }
  return out;
}

/// Robinsonian matrix: a Robinson table under a random relabelling.
inline SymMatrix robinson(std::size_t n, std::uint64_t seed) {
  detail::require(n >= 1, "gen: n must be positive");
  Rng rng(seed);
  auto t = robinson_table(n, rng);
  return SymMatrix::from_integers(relabel(t, rng));
}

/// A Robinsonian matrix with `swaps` random exchanges of off-diagonal
/// entries applied after relabelling.
inline SymMatrix perturbed(std::size_t n, std::uint64_t seed, std::size_t swaps = 2) {
  detail::require(n >= 1, "gen: n must be positive");
  Rng rng(seed);
  auto t = relabel(robinson_table(n, rng), rng);
  if (n >= 3) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const auto off_diagonal = [&] {
      std::size_t i = pick(rng), j = pick(rng);
      while (i == j) j = pick(rng);
      return std::pair{i, j};
    };
    for (std::size_t s = 0; s < swaps; ++s) {
      const auto [i, j] = off_diagonal();
      const auto [k, l] = off_diagonal();
      std::swap(t[i][j], t[k][l]);
      t[j][i] = t[i][j];
      t[l][k] = t[k][l];
    }
  }
  return SymMatrix::from_integers(t);
}

/// Independent uniform entries in 0..max_entry.
inline SymMatrix random_matrix(std::size_t n, std::uint64_t seed, long long max_entry = 3) {
  detail::require(n >= 1, "gen: n must be positive");
  Rng rng(seed);
  std::uniform_int_distribution<long long> value(0, max_entry);
  std::vector<std::vector<long long>> t(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) t[i][j] = t[j][i] = value(rng);
  }
  return SymMatrix::from_integers(t);
}

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  detail::require(n >= 3, "gen: a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

/// Star K_{1,n-1} with centre 0; n = 4 is the claw.
inline Graph star_graph(std::size_t n) {
  detail::require(n >= 2, "gen: a star needs at least 2 vertices");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

/// Triangle 0 1 2 with pendant vertices 3, 4, 5 attached to 0, 1, 2.
inline Graph net_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

/// Named families: path, cycle, claw (a star), net (always 6 vertices).
inline Graph named_graph(const std::string& name, std::size_t n) {
  if (name == "path") return path_graph(n);
  if (name == "cycle") return cycle_graph(n);
  if (name == "claw") return star_graph(n);
  if (name == "net") {
    detail::require(n == 6, "gen: the net has 6 vertices");
    return net_graph();
  }
  throw InvalidArgument("gen: unknown graph family '" + name + "'");
}

}  // namespace robcert::gen

#endif  // ROBCERT_GEN_HPP
