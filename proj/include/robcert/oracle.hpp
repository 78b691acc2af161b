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

// Exhaustive ground truth for small matrices.
//
// Everything here is computed straight from the definitions: every
// permutation is tried against every ordered triple, and the avoidance
// relation is a plain reachability search over the non-Robinson triples. None
// of it shares code with the recognition or enumeration modules, so the
// property tests can compare the two.

#ifndef ROBCERT_ORACLE_HPP
#define ROBCERT_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "robcert/errors.hpp"
#include "robcert/matrix.hpp"

namespace robcert {

struct OracleVerdict {
  bool robinsonian = false;
  std::optional<Ordering> witness;
  /// Every weighted asteroidal triple, positions increasing, sorted.
  std::vector<Triple> all_wats;
};

inline constexpr std::size_t kOracleMaxSize = 9;

namespace oracle {

/// Every ordered triple along `perm` (positions) satisfies the Robinson
/// inequality.
inline bool robinson_by_definition(const SymMatrix& a, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto& xz = a.value(perm[i], perm[k]);
        if (xz > a.value(perm[i], perm[j]) || xz > a.value(perm[j], perm[k])) return false;
      }
    }
  }
  return true;
}

/// Reachability from x to y using only pairs {u, w} for which (u, z, w) is
/// not Robinson.
inline bool avoids(const SymMatrix& a, std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t n = a.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> todo{x};
  seen[x] = 1;
  while (!todo.empty()) {
    const std::size_t u = todo.back();
    todo.pop_back();
    if (u == y) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == z || seen[w]) continue;
      const auto& uw = a.value(u, w);
      if (uw > a.value(u, z) || uw > a.value(w, z)) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace oracle

inline OracleVerdict brute_force_certify(const SymMatrix& a) {
  const std::size_t n = a.size();
  detail::require(n <= kOracleMaxSize, "brute_force_certify: matrix too large");
  OracleVerdict verdict;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (oracle::robinson_by_definition(a, perm)) {
      verdict.robinsonian = true;
      Ordering order;
      for (std::size_t p : perm) order.push_back(a.label(p));
      verdict.witness = std::move(order);
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        if (oracle::avoids(a, x, y, z) && oracle::avoids(a, y, z, x) && oracle::avoids(a, x, z, y)) {
          verdict.all_wats.push_back({a.label(x), a.label(y), a.label(z)});
        }
      }
    }
  }
  return verdict;
}

}  // namespace robcert

#endif  // ROBCERT_ORACLE_HPP
