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

// Certificates and their verifiers.
//
// The verifiers only read matrix entries; they never call back into the
// recognition code, so a certificate can be trusted independently of how it
// was produced.

#ifndef ROBCERT_CERTIFICATES_HPP
#define ROBCERT_CERTIFICATES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "robcert/avoidance.hpp"
#include "robcert/errors.hpp"
#include "robcert/matrix.hpp"

namespace robcert {

/// Three elements, each pair joined by a path avoiding the third.
struct WeightedAsteroidalTriple {
  Label x = 0;
  Label y = 0;
  Label z = 0;
  Path xy;  // x to y, avoids z
  Path xz;  // x to z, avoids y
  Path yz;  // y to z, avoids x

  Triple triple() const { return {x, y, z}; }
  friend bool operator==(const WeightedAsteroidalTriple&, const WeightedAsteroidalTriple&) = default;
};

struct RobinsonOrdering {
  Ordering order;
  friend bool operator==(const RobinsonOrdering&, const RobinsonOrdering&) = default;
};

/// Either a Robinson ordering or a proof that none exists.
using Certificate = std::variant<RobinsonOrdering, WeightedAsteroidalTriple>;

inline bool is_robinsonian(const Certificate& c) {
  return std::holds_alternative<RobinsonOrdering>(c);
}

struct WatVerdict {
  /// Index of the offending path (0 = xy, 1 = xz, 2 = yz), -1 when valid.
  int path = -1;
  /// Offending edge (nodes[edge], nodes[edge + 1]) or offending node index.
  std::size_t edge = 0;
  std::string reason;

  bool valid() const { return path < 0; }
};

namespace detail {

inline void check_path_shape(const Path& p, Label from, Label to, Label avoided, const char* name) {
  require(!p.nodes.empty() && p.front() == from && p.back() == to && p.avoided == avoided,
          std::string("path ") + name + " does not match the declared triple");
}

inline WatVerdict check_path(const SymMatrix& a, const Path& p, int index) {
  const std::size_t zp = a.position(p.avoided);
  std::vector<std::size_t> pos = positions_of(a, p.nodes);
  std::vector<char> seen(a.size(), 0);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] == zp) return {index, i, "path passes through its avoided element"};
    if (seen[pos[i]]) return {index, i, "path repeats an element"};
    seen[pos[i]] = 1;
  }
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    if (!avoiding_edge(a, pos[i], pos[i + 1], zp)) {
      return {index, i, "edge does not avoid " + std::to_string(p.avoided)};
    }
  }
  return {};
}

}  // namespace detail

/// Checks every edge of the three witnessing paths against the matrix.
inline WatVerdict verify_wat(const SymMatrix& a, const WeightedAsteroidalTriple& w) {
  detail::require_distinct(w.x, w.y, w.z);
  detail::check_path_shape(w.xy, w.x, w.y, w.z, "xy");
  detail::check_path_shape(w.xz, w.x, w.z, w.y, "xz");
  detail::check_path_shape(w.yz, w.y, w.z, w.x, "yz");
  const Path* paths[] = {&w.xy, &w.xz, &w.yz};
  for (int i = 0; i < 3; ++i) {
    if (auto v = detail::check_path(a, *paths[i], i); !v.valid()) return v;
  }
  return {};
}

/// Witnesses for {x, y, z} built from shortest avoiding paths, if the triple
/// is a weighted asteroidal triple.
inline std::optional<WeightedAsteroidalTriple> make_wat(const SymMatrix& a, Label x, Label y, Label z) {
  detail::require_distinct(x, y, z);
  auto xy = find_avoiding_path(a, x, y, z);
  if (!xy) return std::nullopt;
  auto xz = find_avoiding_path(a, x, z, y);
  if (!xz) return std::nullopt;
  auto yz = find_avoiding_path(a, y, z, x);
  if (!yz) return std::nullopt;
  return WeightedAsteroidalTriple{x, y, z, std::move(*xy), std::move(*xz), std::move(*yz)};
}

/// The same witness with x, y, z in increasing position order of `a`; paths
/// are reversed where needed so each still runs from its first to its second
/// endpoint.
inline WeightedAsteroidalTriple normalize_wat(const SymMatrix& a, WeightedAsteroidalTriple w) {
  Triple t = w.triple();
  std::sort(t.begin(), t.end(), [&](Label u, Label v) { return a.position(u) < a.position(v); });
  const Path* paths[] = {&w.xy, &w.xz, &w.yz};
  const auto oriented = [&](Label from, Label to) {
    for (const Path* p : paths) {
      if (p->front() == from && p->back() == to) return *p;
      if (p->front() == to && p->back() == from) {
        Path r = *p;
        std::reverse(r.nodes.begin(), r.nodes.end());
        return r;
      }
    }
    throw InvalidArgument("normalize_wat: missing path between " + std::to_string(from) +
                          " and " + std::to_string(to));
  };
  return {t[0], t[1], t[2], oriented(t[0], t[1]), oriented(t[0], t[2]), oriented(t[1], t[2])};
}

inline bool verify_certificate(const SymMatrix& a, const Certificate& c) {
  if (const auto* r = std::get_if<RobinsonOrdering>(&c)) {
    return verify_robinson_ordering(a, r->order).valid();
  }
  return verify_wat(a, std::get<WeightedAsteroidalTriple>(c)).valid();
}

}  // namespace robcert

#endif  // ROBCERT_CERTIFICATES_HPP
