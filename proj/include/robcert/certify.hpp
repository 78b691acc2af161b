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

// Certifying recognition of Robinsonian matrices.
//
// certify() returns either a Robinson ordering or a weighted asteroidal
// triple. It alternates two reductions:
//
//  * a proper strongly homogeneous set S splits the problem into A[S] and
//    A/S, whose orderings splice together and whose triples lift unchanged;
//  * a critical element a drives certify_with_critical(), which builds the
//    similarity layers rooted at a and at the far end b of that structure,
//    cuts V at the single element c where the two structures meet, and
//    recurses on two smaller matrices A^X (rooted at a) and A^Y (rooted at b)
//    in which c's row is pushed below every other entry.
//
// Whenever the construction identifies a triple that must be weighted
// asteroidal, witnesses are rebuilt by shortest-path search in the current
// matrix and re-verified; nothing is translated path by path. If none of the
// nominated triples verifies, the O(n^3) enumeration is used as a last resort
// (counted in CertifyStats so tests can confirm it stays unused).

#ifndef ROBCERT_CERTIFY_HPP
#define ROBCERT_CERTIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "robcert/avoidance.hpp"
#include "robcert/certificates.hpp"
#include "robcert/decomposition.hpp"
#include "robcert/errors.hpp"
#include "robcert/layers.hpp"
#include "robcert/matrix.hpp"
#include "robcert/values.hpp"
#include "robcert/wat_enum.hpp"

namespace robcert {

/// A Robinson ordering compatible with the layers rooted at the critical
/// element it was computed for.
struct CompatibleOrdering {
  Ordering order;
  friend bool operator==(const CompatibleOrdering&, const CompatibleOrdering&) = default;
};

using CertifyOutcome = std::variant<StronglyHomogeneousSet, WeightedAsteroidalTriple, CompatibleOrdering>;

struct CertifyStats {
  std::size_t critical_calls = 0;
  std::size_t homogeneous_reductions = 0;
  std::size_t max_depth = 0;
  /// Times no nominated triple verified and a full search was needed.
  std::size_t fallback_searches = 0;
};

/// Layers along `order` never decrease.
inline bool is_compatible(const SymMatrix& a, const LayerStructure& psi, std::span<const Label> order) {
  int previous = 0;
  for (Label x : order) {
    const int layer = psi.layer(a.position(x));
    if (layer < previous) return false;
    previous = layer;
  }
  return true;
}

namespace detail {

class Certifier {
 public:
  explicit Certifier(CertifyStats* stats) : stats_(stats ? stats : &local_) {}

  Certificate certify(const SymMatrix& a, std::size_t depth) {
    note_depth(depth);
    const std::size_t n = a.size();
    if (n <= 2) return RobinsonOrdering{identity_ordering(a)};

    std::vector<Label> set;
    const HomogeneityWitness witness = critical_or_homogeneous(a, a.label(0));
    if (const auto* crit = std::get_if<CriticalElement>(&witness)) {
      CertifyOutcome out = solve(a, crit->element, depth + 1);
      if (auto* w = std::get_if<WeightedAsteroidalTriple>(&out)) return checked(a, std::move(*w));
      if (auto* o = std::get_if<CompatibleOrdering>(&out)) return checked(a, RobinsonOrdering{std::move(o->order)});
      set = std::get<StronglyHomogeneousSet>(out).members;
    } else {
      set = std::get<StronglyHomogeneousSet>(witness).members;
    }

    ++stats_->homogeneous_reductions;
    ensure(is_proper(a, set) && is_strongly_homogeneous(a, set),
           "certify: reduction set is not proper strongly homogeneous");
    Certificate inner = certify(restrict(a, set), depth + 1);
    if (auto* w = std::get_if<WeightedAsteroidalTriple>(&inner)) return checked(a, std::move(*w));
    const Contraction con = contract(a, set);
    Certificate outer = certify(con.matrix, depth + 1);
    if (auto* w = std::get_if<WeightedAsteroidalTriple>(&outer)) return checked(a, std::move(*w));
    return checked(a, RobinsonOrdering{merge_orderings(std::get<RobinsonOrdering>(inner).order,
                                                        std::get<RobinsonOrdering>(outer).order,
                                                        con.representative)});
  }

  CertifyOutcome solve(const SymMatrix& a, Label root, std::size_t depth) {
    ++stats_->critical_calls;
    note_depth(depth);
    const std::size_t n = a.size();
    if (n <= 2) {
      Ordering order{root};
      for (Label x : a.labels()) {
        if (x != root) order.push_back(x);
      }
      return CompatibleOrdering{std::move(order)};
    }

    // Layers rooted at a; their far end b is critical as well.
    LayerStructure psi_a = similarity_layers(a, root);
    if (auto stop = settle_layers(a, psi_a)) return std::move(*stop);
    const Label b = psi_a.layers.back().front();
    LayerStructure psi_b = similarity_layers(a, b);
    if (auto stop = settle_layers(a, psi_b)) return std::move(*stop);

    // psi_a must run against psi_b.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (psi_a.precedes(x, y) && psi_b.precedes(x, y)) {
          return nominated(a, {Triple{root, b, a.label(y)}});
        }
      }
    }
    ensure(psi_b.layers.back() == std::vector<Label>{root}, "certify: reversed layers do not end at root");

    // The last-but-one layer of psi_a meets psi_b deepest in one place.
    const int k = static_cast<int>(psi_a.last());
    int j_star = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (psi_a.layer(p) == k - 1) j_star = std::max(j_star, psi_b.layer(p));
    }
    ensure(j_star >= 1, "certify: empty meeting layer");
    std::vector<Label> meet;
    for (std::size_t p = 0; p < n; ++p) {
      if (psi_a.layer(p) == k - 1 && psi_b.layer(p) == j_star) meet.push_back(a.label(p));
    }
    if (meet.size() >= 2) {
      ensure(is_strongly_homogeneous(a, meet) && is_proper(a, meet),
             "certify: meeting set is not proper strongly homogeneous");
      return StronglyHomogeneousSet{std::move(meet)};
    }
    const Label c = meet.front();
    const std::size_t cp = a.position(c);

    // V = X + {c} + Y, with X the layers of psi_a before k-1 and Y the layers
    // of psi_b before j*.
    std::vector<std::size_t> xs;
    std::vector<std::size_t> ys;
    for (std::size_t p = 0; p < n; ++p) {
      if (psi_a.layer(p) <= k - 2) xs.push_back(p);
      if (psi_b.layer(p) <= j_star - 1) ys.push_back(p);
    }
    ensure(xs.size() + ys.size() + 1 == n, "certify: X, {c}, Y do not partition V");
    const SymMatrix ax = lowered(a, xs, cp, psi_b);
    const SymMatrix ay = lowered(a, ys, cp, psi_a);
    ensure(ax.size() < n && ay.size() < n, "certify: recursion does not shrink");
#ifndef NDEBUG
    check_shape(ax, root, psi_a, 0, k - 2, c);
    check_shape(ay, b, psi_b, 0, j_star - 1, c);
#endif

    CertifyOutcome out_x = solve(ax, root, depth + 1);
    if (auto lifted = lift(a, out_x, root, b, c)) return std::move(*lifted);
    CertifyOutcome out_y = solve(ay, b, depth + 1);
    if (auto lifted = lift(a, out_y, root, b, c)) return std::move(*lifted);

    // Both sides ordered: glue sigma_X with the reverse of sigma_Y at c.
    const Ordering& sx = std::get<CompatibleOrdering>(out_x).order;
    const Ordering& sy = std::get<CompatibleOrdering>(out_y).order;
    ensure(sx.front() == root && sx.back() == c && sy.front() == b && sy.back() == c,
           "certify: sub-orderings do not run from their roots to c");
    Ordering sigma = sx;
    sigma.insert(sigma.end(), sy.rbegin() + 1, sy.rend());
    const OrderingVerdict verdict = verify_robinson_ordering(a, sigma);
    if (!verdict.valid()) {
      const auto [x, y, z] = *verdict.violation;
      return nominated(a, {Triple{x, y, z}, Triple{root, y, z}, Triple{b, y, z}, Triple{c, y, z},
                           Triple{x, c, z}, Triple{x, y, c}});
    }
    ensure(is_compatible(a, psi_a, sigma), "certify: glued ordering is not compatible with the layers");
    return CompatibleOrdering{std::move(sigma)};
  }

 private:
  void note_depth(std::size_t depth) { stats_->max_depth = std::max(stats_->max_depth, depth); }

  template <class T>
  Certificate checked(const SymMatrix& a, T&& cert) {
    Certificate c{std::forward<T>(cert)};
    ensure(verify_certificate(a, c), "certify: produced certificate does not verify");
    return c;
  }

  /// Coverage and the starred layer properties, for a critical root.
  std::optional<CertifyOutcome> settle_layers(const SymMatrix& a, const LayerStructure& psi) {
    if (!psi.covered) return wat_from_noncover(a, psi);
    if (auto w = check_layer_stars(a, psi)) return std::move(*w);
    if (psi.layers.back().size() >= 2) return StronglyHomogeneousSet{psi.layers.back()};
    return std::nullopt;
  }

  /// A[part] plus c, whose entry towards v becomes -M - j + A_cv / M with j
  /// the layer of v in `other`.
  static SymMatrix lowered(const SymMatrix& a, const std::vector<std::size_t>& part, std::size_t cp,
                           const LayerStructure& other) {
    const std::uint32_t generation = a.max_generation() + 1;
    std::vector<EntryValue> row;
    row.reserve(part.size());
    for (std::size_t v : part) {
      row.push_back(EntryValue::transformed(-other.layer(v), a.value(cp, v), generation));
    }
    return a.submatrix(part).with_lower_row(a.label(cp), row);
  }

  /// The layers of the lowered matrix rooted at `root` are the first layers
  /// of `psi` followed by {c}, and the root stays critical.
  static void check_shape(const SymMatrix& sub, Label root, const LayerStructure& psi, int first,
                          int last, Label c) {
    ensure(is_critical(sub, root), "certify: root is not critical in the lowered matrix");
    const LayerStructure got = similarity_layers(sub, root);
    std::vector<std::vector<Label>> want(psi.layers.begin() + first, psi.layers.begin() + last + 1);
    want.push_back({c});
    // Layer members are stored in matrix order; the lowered matrix keeps that
    // order for the old elements.
    ensure(got.covered && got.layers == want, "certify: lowered matrix has unexpected layers");
  }

  /// Maps a sub-outcome of A^X or A^Y back to A; nothing when it is an ordering.
  std::optional<CertifyOutcome> lift(const SymMatrix& a, const CertifyOutcome& out, Label root, Label b,
                                     Label c) {
    if (std::holds_alternative<CompatibleOrdering>(out)) return std::nullopt;
    if (const auto* w = std::get_if<WeightedAsteroidalTriple>(&out)) {
      const Triple t = w->triple();
      std::vector<Triple> candidates{t};
      const auto it = std::find(t.begin(), t.end(), c);
      if (it != t.end()) {
        std::vector<Label> rest;
        for (Label e : t) {
          if (e != c) rest.push_back(e);
        }
        for (Label e : {b, root}) candidates.push_back({e, rest[0], rest[1]});
      }
      return nominated(a, candidates);
    }

    // A strongly homogeneous set of the lowered matrix either stays strongly
    // homogeneous in A, or two of its elements x, x' see c equally and more
    // than each other, making {x, x', c} weighted asteroidal.
    const auto& s = std::get<StronglyHomogeneousSet>(out).members;
    auto pos = positions_of(a, s);
    std::sort(pos.begin(), pos.end());
    std::vector<Label> members;
    for (std::size_t p : pos) members.push_back(a.label(p));
    if (is_proper(a, members) && is_strongly_homogeneous(a, members)) {
      return StronglyHomogeneousSet{std::move(members)};
    }
    const std::size_t cp = a.position(c);
    std::vector<Triple> candidates;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = i + 1; j < pos.size(); ++j) {
        if (pos[i] == cp || pos[j] == cp) continue;
        const auto ci = a.rank(cp, pos[i]);
        if (ci == a.rank(cp, pos[j]) && ci > a.rank(pos[i], pos[j])) {
          candidates.push_back({members[i], members[j], c});
        }
      }
    }
    return nominated(a, candidates);
  }

  /// First candidate that is a weighted asteroidal triple of `a`.
  CertifyOutcome nominated(const SymMatrix& a, const std::vector<Triple>& candidates) {
    for (const auto& [x, y, z] : candidates) {
      if (x == y || y == z || x == z) continue;
      if (auto w = make_wat(a, x, y, z)) return std::move(*w);
    }
    ++stats_->fallback_searches;
    auto w = find_one_wat(a);
    ensure(w.has_value(), "certify: matrix was shown non-Robinsonian but has no weighted asteroidal triple");
    return std::move(*w);
  }

  CertifyStats local_;
  CertifyStats* stats_;
};

}  // namespace detail

/// A Robinson ordering of `a` or a weighted asteroidal triple, listed in
/// position order; the result is verified before it is returned.
inline Certificate certify(const SymMatrix& a, CertifyStats* stats = nullptr) {
  detail::require(a.size() >= 1, "certify: empty matrix");
  Certificate c = detail::Certifier(stats).certify(a, 0);
  if (auto* w = std::get_if<WeightedAsteroidalTriple>(&c)) *w = normalize_wat(a, std::move(*w));
  return c;
}

/// One of: a proper strongly homogeneous set, a weighted asteroidal triple,
/// or a Robinson ordering compatible with the layers rooted at `root`, which
/// must be critical. Requires at least three elements.
inline CertifyOutcome certify_with_critical(const SymMatrix& a, Label root, CertifyStats* stats = nullptr) {
  detail::require(a.size() >= 3, "certify_with_critical: need at least three elements");
  detail::require(is_critical(a, root), "certify_with_critical: root is not critical");
  return detail::Certifier(stats).solve(a, root, 0);
}

}  // namespace robcert

#endif  // ROBCERT_CERTIFY_HPP
