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

// Plain-text formats.
//
// Matrix file: a header line "n" followed by n rows of n values, or a header
// "lower n" followed by rows 0..n-1 where row i holds i + 1 values (the
// diagonal included). Values are integers, decimals or fractions p/q. The
// diagonal is read and ignored. '#' starts a comment.
//
// Graph file: a header "n m" then m lines "u v" with 0-based vertices.
//
// Certificate file: either one line "ordering l1 l2 ... ln", or
//   wat x y z
//   path x ... y avoid z
//   path x ... z avoid y
//   path y ... z avoid x

#ifndef ROBCERT_IO_HPP
#define ROBCERT_IO_HPP

#include <cstddef>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "robcert/certificates.hpp"
#include "robcert/errors.hpp"
#include "robcert/matrix.hpp"
#include "robcert/uig.hpp"
#include "robcert/values.hpp"

namespace robcert {

namespace detail {

/// Non-empty lines of `in` with comments removed, each split on whitespace.
inline std::vector<std::vector<std::string>> token_lines(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(std::move(t));
    if (!tokens.empty()) out.push_back(std::move(tokens));
  }
  return out;
}

inline std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-' || s[0] == '+') {
    throw ParseError(std::string("expected ") + what + ", got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

inline Label parse_label(const std::string& s) {
  const std::size_t v = parse_count(s, "label");
  if (v > std::numeric_limits<Label>::max()) throw ParseError("label out of range: " + s);
  return static_cast<Label>(v);
}

}  // namespace detail

inline SymMatrix read_matrix(std::istream& in) {
  const auto lines = detail::token_lines(in);
  if (lines.empty()) throw ParseError("matrix file is empty");
  const auto& header = lines[0];
  bool lower = false;
  std::size_t n = 0;
  if (header.size() == 1) {
    n = detail::parse_count(header[0], "matrix size");
  } else if (header.size() == 2 && header[0] == "lower") {
    lower = true;
    n = detail::parse_count(header[1], "matrix size");
  } else {
    throw ParseError("matrix header must be 'n' or 'lower n'");
  }
  if (n == 0) throw ParseError("matrix size must be positive");
  if (lines.size() != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = lines[i + 1];
    const std::size_t width = lower ? i + 1 : n;
    if (row.size() != width) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) + " values, expected " +
                       std::to_string(width));
    }
    for (std::size_t j = 0; j < width; ++j) {
      rows[i][j] = parse_rational(row[j]);
      if (lower) rows[j][i] = rows[i][j];
    }
  }
  try {
    return SymMatrix::from_rows(rows);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline SymMatrix read_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

/// Writes an ordinary matrix in the square format; the diagonal is 0.
inline void write_matrix(std::ostream& out, const SymMatrix& a) {
  const std::size_t n = a.size();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      if (i == j) {
        out << '0';
      } else {
        const EntryValue& v = a.value(i, j);
        detail::require(v.tier() == 1, "write_matrix: transformed entries have no file representation");
        out << format_rational(v.base());
      }
    }
    out << '\n';
  }
}

inline Graph read_graph(std::istream& in) {
  const auto lines = detail::token_lines(in);
  if (lines.empty()) throw ParseError("graph file is empty");
  if (lines[0].size() != 2) throw ParseError("graph header must be 'n m'");
  const std::size_t n = detail::parse_count(lines[0][0], "vertex count");
  const std::size_t m = detail::parse_count(lines[0][1], "edge count");
  if (lines.size() != m + 1) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  Graph g(n);
  for (std::size_t e = 1; e <= m; ++e) {
    if (lines[e].size() != 2) throw ParseError("edge line " + std::to_string(e) + " must be 'u v'");
    const Vertex u = detail::parse_label(lines[e][0]);
    const Vertex v = detail::parse_label(lines[e][1]);
    try {
      g.add_edge(u, v);
    } catch (const InvalidArgument& err) {
      throw ParseError(err.what());
    }
  }
  return g;
}

inline Graph read_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.size() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

namespace detail {

inline void write_labels(std::ostream& out, const std::vector<Label>& labels) {
  for (Label x : labels) out << ' ' << x;
}

inline Path parse_path_line(const std::vector<std::string>& t) {
  // path v0 ... vk avoid z
  if (t.size() < 5 || t[0] != "path" || t[t.size() - 2] != "avoid") {
    throw ParseError("expected 'path v0 ... vk avoid z'");
  }
  Path p;
  for (std::size_t i = 1; i + 2 < t.size(); ++i) p.nodes.push_back(parse_label(t[i]));
  p.avoided = parse_label(t.back());
  return p;
}

}  // namespace detail

inline void write_certificate(std::ostream& out, const Certificate& c) {
  if (const auto* r = std::get_if<RobinsonOrdering>(&c)) {
    out << "ordering";
    detail::write_labels(out, r->order);
    out << '\n';
    return;
  }
  const auto& w = std::get<WeightedAsteroidalTriple>(c);
  out << "wat " << w.x << ' ' << w.y << ' ' << w.z << '\n';
  for (const Path* p : {&w.xy, &w.xz, &w.yz}) {
    out << "path";
    detail::write_labels(out, p->nodes);
    out << " avoid " << p->avoided << '\n';
  }
}

inline std::string certificate_text(const Certificate& c) {
  std::ostringstream out;
  write_certificate(out, c);
  return out.str();
}

inline Certificate read_certificate(std::istream& in) {
  const auto lines = detail::token_lines(in);
  if (lines.empty()) throw ParseError("certificate file is empty");
  const auto& head = lines[0];
  if (head[0] == "ordering") {
    if (lines.size() != 1) throw ParseError("ordering certificate must be a single line");
    RobinsonOrdering r;
    for (std::size_t i = 1; i < head.size(); ++i) r.order.push_back(detail::parse_label(head[i]));
    return r;
  }
  if (head[0] != "wat" || head.size() != 4) throw ParseError("certificate must start with 'ordering' or 'wat x y z'");
  if (lines.size() != 4) throw ParseError("wat certificate needs exactly three path lines");
  WeightedAsteroidalTriple w;
  w.x = detail::parse_label(head[1]);
  w.y = detail::parse_label(head[2]);
  w.z = detail::parse_label(head[3]);
  w.xy = detail::parse_path_line(lines[1]);
  w.xz = detail::parse_path_line(lines[2]);
  w.yz = detail::parse_path_line(lines[3]);
  return w;
}

inline Certificate read_certificate(const std::string& text) {
  std::istringstream in(text);
  return read_certificate(in);
}

}  // namespace robcert

#endif  // ROBCERT_IO_HPP
