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

// Strongly homogeneous sets and the restriction/contraction reduction.
//
// S is strongly homogeneous when every outside element x sees all of S with a
// single value that is at most any value inside S: A_xy = A_xz <= A_yz for
// x outside S and y, z in S. A is then Robinsonian iff A[S] and A/S are, and
// their orderings splice together.

#ifndef ROBCERT_DECOMPOSITION_HPP
#define ROBCERT_DECOMPOSITION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "robcert/avoidance.hpp"
#include "robcert/errors.hpp"
#include "robcert/matrix.hpp"

namespace robcert {

struct CriticalElement {
  Label element;
  friend bool operator==(const CriticalElement&, const CriticalElement&) = default;
};

struct StronglyHomogeneousSet {
  std::vector<Label> members;  // in matrix order
  friend bool operator==(const StronglyHomogeneousSet&, const StronglyHomogeneousSet&) = default;
};

using HomogeneityWitness = std::variant<CriticalElement, StronglyHomogeneousSet>;

namespace detail {

inline bool strongly_homogeneous_at(const SymMatrix& a, const std::vector<char>& inside) {
  const std::size_t n = a.size();
  std::vector<std::size_t> in;
  for (std::size_t i = 0; i < n; ++i) {
    if (inside[i]) in.push_back(i);
  }
  if (in.size() <= 1 || in.size() == n) return true;
  for (std::size_t x = 0; x < n; ++x) {
    if (inside[x]) continue;
    const auto seen = a.rank(x, in.front());
    for (std::size_t y : in) {
      if (a.rank(x, y) != seen) return false;
    }
  }
  // Every outside element sees one common value per x; it suffices to compare
  // the largest of them with the smallest inside entry.
  std::uint32_t outside_max = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!inside[x]) outside_max = std::max(outside_max, a.rank(x, in.front()));
  }
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t j = i + 1; j < in.size(); ++j) {
      if (a.rank(in[i], in[j]) < outside_max) return false;
    }
  }
  return true;
}

inline std::vector<char> membership(const SymMatrix& a, std::span<const Label> subset) {
  std::vector<char> inside(a.size(), 0);
  for (Label x : subset) {
    const std::size_t p = a.position(x);
    require(!inside[p], "repeated element " + std::to_string(x));
    inside[p] = 1;
  }
  return inside;
}

inline std::vector<Label> members_in_order(const SymMatrix& a, const std::vector<char>& inside) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (inside[i]) out.push_back(a.label(i));
  }
  return out;
}

}  // namespace detail

inline bool is_strongly_homogeneous(const SymMatrix& a, std::span<const Label> subset) {
  return detail::strongly_homogeneous_at(a, detail::membership(a, subset));
}

inline bool is_proper(const SymMatrix& a, std::span<const Label> subset) {
  return subset.size() >= 2 && subset.size() + 1 <= a.size();
}

struct Contraction {
  SymMatrix matrix;
  Label representative;
};

/// A/S: the principal submatrix on the complement of S plus the first element
/// of S (in matrix order), which stands for the whole set.
inline Contraction contract(const SymMatrix& a, std::span<const Label> subset) {
  const auto inside = detail::membership(a, subset);
  detail::require(is_proper(a, subset), "contract: set is not proper");
  detail::require(detail::strongly_homogeneous_at(a, inside),
                  "contract: set is not strongly homogeneous");
  std::vector<std::size_t> keep;
  Label rep = 0;
  bool have_rep = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!inside[i]) {
      keep.push_back(i);
    } else if (!have_rep) {
      keep.push_back(i);
      rep = a.label(i);
      have_rep = true;
    }
  }
  return {a.submatrix(keep), rep};
}

/// Replaces `representative` in `outer` by the whole of `inner`.
inline Ordering merge_orderings(std::span<const Label> inner, std::span<const Label> outer,
                                Label representative) {
  const auto at = std::find(outer.begin(), outer.end(), representative);
  detail::require(at != outer.end(), "merge_orderings: representative missing from outer ordering");
  Ordering out(outer.begin(), at);
  out.insert(out.end(), inner.begin(), inner.end());
  out.insert(out.end(), at + 1, outer.end());
  return out;
}

/// Shrinks Z = V \ {start} until it is a singleton, whose element is then
/// critical, or a proper strongly homogeneous set. Ties are resolved by
/// smallest position.
inline HomogeneityWitness critical_or_homogeneous(const SymMatrix& a, Label start) {
  const std::size_t n = a.size();
  detail::require(n >= 2, "critical_or_homogeneous: need at least two elements");
  std::vector<char> in_z(n, 1);
  in_z[a.position(start)] = 0;
  std::size_t z_size = n - 1;

  while (z_size > 1) {
    // (i) some outside v separates Z by its smallest value
    bool shrunk = false;
    for (std::size_t v = 0; v < n && !shrunk; ++v) {
      if (in_z[v]) continue;
      std::uint32_t lo = UINT32_MAX;
      for (std::size_t z = 0; z < n; ++z) {
        if (in_z[z]) lo = std::min(lo, a.rank(v, z));
      }
      std::size_t count = 0;
      for (std::size_t z = 0; z < n; ++z) count += in_z[z] && a.rank(v, z) == lo;
      if (count != z_size) {
        for (std::size_t z = 0; z < n; ++z) {
          if (in_z[z] && a.rank(v, z) != lo) in_z[z] = 0;
        }
        z_size = count;
        shrunk = true;
      }
    }
    if (shrunk) continue;

    // (ii) Z is homogeneous: each outside x sees Z with one value h_x. Drop
    // the first z having a partner y in Z with A_yz < h_x for some x.
    std::uint32_t outside_max = 0;
    std::size_t first_in = n;
    for (std::size_t z = 0; z < n && first_in == n; ++z) {
      if (in_z[z]) first_in = z;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_z[x]) outside_max = std::max(outside_max, a.rank(x, first_in));
    }
    std::size_t drop = n;
    for (std::size_t z = 0; z < n && drop == n; ++z) {
      if (!in_z[z]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (y != z && in_z[y] && a.rank(y, z) < outside_max) {
          drop = z;
          break;
        }
      }
    }
    if (drop == n) return StronglyHomogeneousSet{detail::members_in_order(a, in_z)};
    in_z[drop] = 0;
    --z_size;
  }
  for (std::size_t z = 0; z < n; ++z) {
    if (in_z[z]) return CriticalElement{a.label(z)};
  }
  throw InvariantViolation("critical_or_homogeneous: Z became empty");
}

}  // namespace robcert

#endif  // ROBCERT_DECOMPOSITION_HPP
