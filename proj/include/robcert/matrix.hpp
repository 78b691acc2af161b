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

// Dense symmetric matrices over EntryValue, indexed by element labels.

#ifndef ROBCERT_MATRIX_HPP
#define ROBCERT_MATRIX_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "robcert/errors.hpp"
#include "robcert/values.hpp"

namespace robcert {

/// Identifier of a row/column. Labels survive restriction and contraction,
/// so certificates always name elements of the matrix the user supplied.
using Label = std::uint32_t;

/// A linear order of the elements, first to last.
using Ordering = std::vector<Label>;

using Triple = std::array<Label, 3>;

/// Symmetric matrix with labelled rows. The diagonal is never stored.
///
/// Entries are kept as ranks into a sorted table of distinct values, so every
/// comparison the algorithms make is an integer comparison that agrees exactly
/// with the EntryValue order.
class SymMatrix {
 public:
  SymMatrix() = default;

  /// Builds a matrix whose (i, j) entry, i < j being positions in `labels`,
  /// is `upper(i, j)`.
  template <class Fn>
  static SymMatrix from_function(std::vector<Label> labels, Fn&& upper) {
    const std::size_t n = labels.size();
    std::vector<EntryValue> values;
    values.reserve(n * (n - (n > 0)) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) values.push_back(EntryValue(upper(i, j)));
    }
    std::vector<EntryValue> table = values;
    std::sort(table.begin(), table.end());
    table.erase(std::unique(table.begin(), table.end()), table.end());

    SymMatrix m(std::move(labels));
    m.ranks_.assign(n * n, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++k) {
        const auto it = std::lower_bound(table.begin(), table.end(), values[k]);
        const auto r = static_cast<std::uint32_t>(it - table.begin());
        m.ranks_[i * n + j] = r;
        m.ranks_[j * n + i] = r;
      }
    }
    m.table_ = std::make_shared<const std::vector<EntryValue>>(std::move(table));
    return m;
  }

  /// Square table of rationals; labels are 0..n-1. The diagonal is ignored and
  /// off-diagonal asymmetry is an error.
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = rows.size();
    detail::require(n >= 1, "matrix must have at least one row");
    for (std::size_t i = 0; i < n; ++i) {
      detail::require(rows[i].size() == n, "matrix row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < i; ++j) {
        detail::require(rows[i][j] == rows[j][i], "matrix is not symmetric at (" +
                                                      std::to_string(j) + ", " +
                                                      std::to_string(i) + ")");
      }
    }
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
    return from_function(std::move(labels), [&](std::size_t i, std::size_t j) {
      return EntryValue::from_rational(rows[i][j]);
    });
  }

  static SymMatrix from_integers(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Rational>> q(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (long long v : rows[i]) q[i].emplace_back(v);
    }
    return from_rows(q);
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  Label label(std::size_t pos) const { return labels_[pos]; }

  bool contains(Label x) const { return index_.count(x) != 0; }

  std::size_t position(Label x) const {
    const auto it = index_.find(x);
    detail::require(it != index_.end(), "unknown element " + std::to_string(x));
    return it->second;
  }

  /// Order-preserving integer code of the entry at positions (i, j), i != j.
  std::uint32_t rank(std::size_t i, std::size_t j) const { return ranks_[i * size() + j]; }

  /// Ranks of row i, indexed by position; the diagonal slot holds 0.
  std::span<const std::uint32_t> rank_row(std::size_t i) const {
    return {ranks_.data() + i * size(), size()};
  }

  const EntryValue& value(std::size_t i, std::size_t j) const { return (*table_)[rank(i, j)]; }

  const EntryValue& entry(Label x, Label y) const {
    const std::size_t i = position(x);
    const std::size_t j = position(y);
    detail::require(i != j, "diagonal entries are not stored");
    return value(i, j);
  }

  /// Principal submatrix on the given positions, in the given order.
  SymMatrix submatrix(std::span<const std::size_t> positions) const {
    std::vector<Label> labels;
    labels.reserve(positions.size());
    for (std::size_t p : positions) labels.push_back(labels_.at(p));
    SymMatrix m(std::move(labels));
    const std::size_t n = positions.size();
    m.ranks_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) m.ranks_[i * n + j] = rank(positions[i], positions[j]);
      }
    }
    m.table_ = table_;
    return m;
  }

  /// This matrix with one more element `c` whose entries `row` (aligned with
  /// the current positions) all lie strictly below every stored value.
  SymMatrix with_lower_row(Label c, std::span<const EntryValue> row) const {
    detail::require(row.size() == size(), "with_lower_row: row length mismatch");
    detail::require(!contains(c), "with_lower_row: label already present");
    std::vector<EntryValue> fresh(row.begin(), row.end());
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    detail::require(fresh.empty() || table_->empty() || fresh.back() < table_->front(),
                    "with_lower_row: new entries must lie below every existing value");
    const auto shift = static_cast<std::uint32_t>(fresh.size());

    std::vector<Label> labels = labels_;
    labels.push_back(c);
    SymMatrix m(std::move(labels));
    const std::size_t n = size();
    const std::size_t n1 = n + 1;
    m.ranks_.assign(n1 * n1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) m.ranks_[i * n1 + j] = rank(i, j) + shift;
      }
      const auto it = std::lower_bound(fresh.begin(), fresh.end(), row[i]);
      const auto r = static_cast<std::uint32_t>(it - fresh.begin());
      m.ranks_[i * n1 + n] = r;
      m.ranks_[n * n1 + i] = r;
    }
    auto table = std::make_shared<std::vector<EntryValue>>(std::move(fresh));
    table->insert(table->end(), table_->begin(), table_->end());
    m.table_ = std::move(table);
    return m;
  }

  /// Same labels in the same order and equal entries.
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    if (a.labels_ != b.labels_) return false;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a.value(i, j) != b.value(i, j)) return false;
      }
    }
    return true;
  }

  /// Largest generation among stored values (0 when all entries are ordinary).
  std::uint32_t max_generation() const {
    std::uint32_t g = 0;
    for (const auto& v : *table_) g = std::max(g, v.generation());
    return g;
  }

 private:
  explicit SymMatrix(std::vector<Label> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      detail::require(index_.emplace(labels_[i], i).second,
                      "duplicate label " + std::to_string(labels_[i]));
    }
  }

  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<std::uint32_t> ranks_;
  std::shared_ptr<const std::vector<EntryValue>> table_ =
      std::make_shared<const std::vector<EntryValue>>();
};

/// Result of checking an ordering; `violation` is a non-Robinson triple listed
/// in the order of the checked ordering.
struct OrderingVerdict {
  std::optional<Triple> violation;
  bool valid() const { return !violation.has_value(); }
};

namespace detail {

inline bool robinson_at(const SymMatrix& a, std::size_t x, std::size_t y, std::size_t z) {
  return a.rank(x, z) <= std::min(a.rank(x, y), a.rank(y, z));
}

inline std::vector<std::size_t> positions_of(const SymMatrix& a, std::span<const Label> labels) {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (Label x : labels) out.push_back(a.position(x));
  return out;
}

/// Positions of `order`, which must be a permutation of the labels of `a`.
inline std::vector<std::size_t> permutation_positions(const SymMatrix& a, std::span<const Label> order) {
  require(order.size() == a.size(), "ordering has " + std::to_string(order.size()) +
                                        " elements, matrix has " + std::to_string(a.size()));
  std::vector<char> seen(a.size(), 0);
  std::vector<std::size_t> out;
  out.reserve(order.size());
  for (Label x : order) {
    const std::size_t p = a.position(x);
    require(!seen[p], "ordering repeats element " + std::to_string(x));
    seen[p] = 1;
    out.push_back(p);
  }
  return out;
}

inline void require_distinct(Label x, Label y, Label z) {
  require(x != y && y != z && x != z, "elements must be distinct");
}

}  // namespace detail

inline Ordering identity_ordering(const SymMatrix& a) { return a.labels(); }

/// A_xz <= min(A_xy, A_yz).
inline bool is_robinson_triple(const SymMatrix& a, Label x, Label y, Label z) {
  detail::require_distinct(x, y, z);
  return detail::robinson_at(a, a.position(x), a.position(y), a.position(z));
}

/// Checks that rows are nonincreasing away from the diagonal along `order`,
/// which is equivalent to every ordered triple being Robinson. O(n^2).
inline OrderingVerdict verify_robinson_ordering(const SymMatrix& a, std::span<const Label> order) {
  const auto p = detail::permutation_positions(a, order);
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      const auto outer = a.rank(p[i], p[j]);
      if (outer > a.rank(p[i], p[j - 1])) return {Triple{order[i], order[j - 1], order[j]}};
      if (outer > a.rank(p[i + 1], p[j])) return {Triple{order[i], order[i + 1], order[j]}};
    }
  }
  return {};
}

/// The same matrix with its positions listed in `order`: `order` is a Robinson
/// ordering of `a` iff the identity ordering of the result is Robinson.
inline SymMatrix permute(const SymMatrix& a, std::span<const Label> order) {
  const auto p = detail::permutation_positions(a, order);
  return a.submatrix(p);
}

/// Principal submatrix on `subset`, keeping the element order of `a`.
inline SymMatrix restrict(const SymMatrix& a, std::span<const Label> subset) {
  detail::require(!subset.empty(), "restrict: subset must be nonempty");
  auto p = detail::positions_of(a, subset);
  std::sort(p.begin(), p.end());
  detail::require(std::adjacent_find(p.begin(), p.end()) == p.end(), "restrict: repeated element");
  return a.submatrix(p);
}

}  // namespace robcert

#endif  // ROBCERT_MATRIX_HPP
