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

// Maximal Robinsonian submatrices and minimal weighted asteroidal cycles.
//
// I_A holds the maximal subsets I with A[I] Robinsonian, F_A their
// complements, and C_A the subsets C with A[C] not Robinsonian while every
// A[C - {x}] is. C_A is exactly the family of minimal transversals of F_A.

#ifndef ROBCERT_SUBMATRIX_HPP
#define ROBCERT_SUBMATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "robcert/certify.hpp"
#include "robcert/errors.hpp"
#include "robcert/matrix.hpp"
#include "robcert/wat_enum.hpp"

namespace robcert {

inline constexpr std::size_t kDefaultFamilyBound = 12;

using Subset = std::vector<Label>;

struct SubsetFamilies {
  std::vector<Subset> maximal_robinsonian;
  std::vector<Subset> minimal_deletions;
  std::vector<Subset> minimal_cycles;
};

/// Robinsonian test for a principal submatrix. Empty and tiny subsets
/// are trivially Robinsonian.
inline bool is_robinsonian_subset(const SymMatrix& a, std::span<const Label> subset) {
  if (subset.size() <= 2) {
    for (Label x : subset) detail::require(a.contains(x), "unknown label " + std::to_string(x));
    return true;
  }
  return is_robinsonian(certify(restrict(a, subset)));
}

/// I is in I_A: A[I] is Robinsonian but A[I + {x}] is not for any x outside.
inline bool is_maximal_robinsonian(const SymMatrix& a, std::span<const Label> subset) {
  const auto inside = detail::membership(a, subset);
  if (!is_robinsonian_subset(a, subset)) return false;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (inside[p]) continue;
    Subset grown(subset.begin(), subset.end());
    grown.push_back(a.label(p));
    if (is_robinsonian_subset(a, grown)) return false;
  }
  return true;
}

/// C is in C_A: A[C] is not Robinsonian but A[C - {x}] is for every x in C.
inline bool is_minimal_wa_cycle(const SymMatrix& a, std::span<const Label> subset) {
  detail::require(subset.size() >= 3, "is_minimal_wa_cycle: need at least 3 elements");
  detail::membership(a, subset);
  if (is_robinsonian_subset(a, subset)) return false;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Subset smaller;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (j != i) smaller.push_back(subset[j]);
    }
    if (!is_robinsonian_subset(a, smaller)) return false;
  }
  return true;
}

namespace detail {

using Mask = std::uint32_t;

inline Subset mask_labels(const SymMatrix& a, Mask m) {
  Subset out;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (m >> p & 1U) out.push_back(a.label(p));
  }
  return out;
}

inline bool is_subset(Mask small, Mask big) { return (small & ~big) == 0; }

}  // namespace detail

/// Exhaustive scan over all 2^n subsets; families are listed in increasing
/// order of their position bitmask. The duality between I_A and F_A and the
/// transversal description of C_A are checked before returning.
inline SubsetFamilies enumerate_families(const SymMatrix& a, std::size_t bound = kDefaultFamilyBound) {
  using detail::Mask;
  const std::size_t n = a.size();
  detail::require(n <= bound, "enumerate_families: size " + std::to_string(n) + " exceeds bound " +
                                  std::to_string(bound));
  detail::require(n < 31, "enumerate_families: size too large for exhaustive scan");
  const Mask full = (Mask{1} << n) - 1;

  std::vector<char> robinsonian(std::size_t{full} + 1, 0);
  for (Mask m = 0; m <= full; ++m) {
    robinsonian[m] = is_robinsonian_subset(a, detail::mask_labels(a, m)) ? 1 : 0;
  }

  std::vector<Mask> maximal, deletions, cycles;
  for (Mask m = 0; m <= full; ++m) {
    bool is_max = robinsonian[m] != 0;
    bool is_cycle = robinsonian[m] == 0;
    for (std::size_t p = 0; p < n && (is_max || is_cycle); ++p) {
      const Mask bit = Mask{1} << p;
      if (!(m & bit) && robinsonian[m | bit]) is_max = false;
      if ((m & bit) && !robinsonian[m & ~bit]) is_cycle = false;
    }
    if (is_max) maximal.push_back(m);
    if (is_cycle) cycles.push_back(m);
  }
  // Minimal deletion sets, found on their own: D is minimal when removing
  // D leaves a Robinsonian matrix and removing any smaller D' does not.
  for (Mask d = 0; d <= full; ++d) {
    if (!robinsonian[full & ~d]) continue;
    bool minimal = true;
    for (std::size_t p = 0; p < n && minimal; ++p) {
      const Mask bit = Mask{1} << p;
      if ((d & bit) && robinsonian[full & ~(d & ~bit)]) minimal = false;
    }
    if (minimal) deletions.push_back(d);
  }

  std::vector<Mask> complements;
  for (Mask m : maximal) complements.push_back(full & ~m);
  std::sort(complements.begin(), complements.end());
  detail::ensure(complements == deletions, "enumerate_families: F_A is not the complement family of I_A");

  std::vector<Mask> transversals;
  const auto hits_all = [&](Mask t) {
    return std::all_of(deletions.begin(), deletions.end(), [&](Mask d) { return (t & d) != 0; });
  };
  for (Mask t = 0; t <= full; ++t) {
    if (!hits_all(t)) continue;
    bool minimal = true;
    for (std::size_t p = 0; p < n && minimal; ++p) {
      const Mask bit = Mask{1} << p;
      if ((t & bit) && hits_all(t & ~bit)) minimal = false;
    }
    if (minimal) transversals.push_back(t);
  }
  detail::ensure(transversals == cycles, "enumerate_families: C_A differs from the minimal transversals of F_A");

  SubsetFamilies out;
  for (Mask m : maximal) out.maximal_robinsonian.push_back(detail::mask_labels(a, m));
  for (Mask m : deletions) out.minimal_deletions.push_back(detail::mask_labels(a, m));
  for (Mask m : cycles) out.minimal_cycles.push_back(detail::mask_labels(a, m));
  return out;
}

/// Heuristic: while a weighted asteroidal triple remains, drop the one of
/// its three elements that occurs in the most triples of the current
/// matrix (ties to the earliest position). The result is Robinsonian and
/// maximal with respect to nothing in particular; it need not be a largest
/// Robinsonian submatrix.
inline Subset greedy_robinsonian_core(const SymMatrix& a, unsigned threads = 1) {
  Subset current = a.labels();
  while (current.size() >= 3) {
    const SymMatrix sub = restrict(a, current);
    const auto wat = find_one_wat(sub);
    if (!wat) break;
    std::vector<std::size_t> hits(sub.size(), 0);
    for (const Triple& t : enumerate_wat_triples(sub, threads)) {
      for (Label x : t) ++hits[sub.position(x)];
    }
    std::size_t drop = sub.position(wat->x);
    for (Label x : {wat->y, wat->z}) {
      const std::size_t p = sub.position(x);
      if (hits[p] > hits[drop] || (hits[p] == hits[drop] && p < drop)) drop = p;
    }
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  detail::ensure(is_robinsonian_subset(a, current), "greedy_robinsonian_core: result is not Robinsonian");
  return current;
}

}  // namespace robcert

#endif  // ROBCERT_SUBMATRIX_HPP
