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

// Exact, totally ordered matrix entries.
//
// An EntryValue is either an ordinary rational entry or a "transformed" entry
// that sits strictly below every value of the matrix it was derived from. A
// transformed entry records a generation, an integer level and the value it
// was derived from; it stands for the number -M - j + v / M with M larger than
// twice every magnitude in the source matrix. Comparing the symbolic form
// lexicographically gives exactly the order of those numbers, so no big
// constant is ever materialized and transformations can nest.

#ifndef ROBCERT_VALUES_HPP
#define ROBCERT_VALUES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "robcert/errors.hpp"

namespace robcert {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class EntryValue {
 public:
  /// One transformation layer. Larger generations lie below smaller ones.
  struct Band {
    std::uint32_t generation;
    std::int64_t level;
    friend bool operator==(const Band&, const Band&) = default;
  };

  EntryValue() = default;

  static EntryValue from_rational(Rational q) {
    EntryValue v;
    v.base_ = std::move(q);
    return v;
  }

  /// The value -M - j + original / M where `level` plays the role of -j.
  ///
  /// `generation` must exceed the generation of `original`; every value built
  /// with generation g compares below every value of generation < g.
  static EntryValue transformed(std::int64_t level, const EntryValue& original,
                                std::uint32_t generation = 1) {
    detail::require(generation > original.generation(),
                    "transformed: generation must exceed that of the source value");
    EntryValue v;
    v.base_ = original.base_;
    v.bands_.reserve(original.bands_.size() + 1);
    v.bands_.push_back({generation, level});
    v.bands_.insert(v.bands_.end(), original.bands_.begin(), original.bands_.end());
    return v;
  }

  /// 1 for ordinary entries, 0 for transformed ones.
  int tier() const { return bands_.empty() ? 1 : 0; }

  /// 0 for ordinary entries.
  std::uint32_t generation() const { return bands_.empty() ? 0 : bands_.front().generation; }

  /// Outermost level; only meaningful for transformed values.
  std::int64_t level() const {
    detail::require(!bands_.empty(), "level: value is not transformed");
    return bands_.front().level;
  }

  /// The value this one was transformed from.
  EntryValue inner() const {
    detail::require(!bands_.empty(), "inner: value is not transformed");
    EntryValue v;
    v.base_ = base_;
    v.bands_.assign(bands_.begin() + 1, bands_.end());
    return v;
  }

  /// The ordinary rational at the bottom of the nesting.
  const Rational& base() const { return base_; }
  const std::vector<Band>& bands() const { return bands_; }

  friend bool operator==(const EntryValue&, const EntryValue&) = default;

  friend std::strong_ordering operator<=>(const EntryValue& a, const EntryValue& b) {
    const std::size_t depth = std::max(a.bands_.size(), b.bands_.size());
    for (std::size_t i = 0; i < depth; ++i) {
      const std::uint32_t ga = i < a.bands_.size() ? a.bands_[i].generation : 0;
      const std::uint32_t gb = i < b.bands_.size() ? b.bands_[i].generation : 0;
      if (ga != gb) return gb <=> ga;
      if (ga == 0) break;
      if (a.bands_[i].level != b.bands_[i].level) return a.bands_[i].level <=> b.bands_[i].level;
    }
    if (a.base_ < b.base_) return std::strong_ordering::less;
    if (b.base_ < a.base_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational base_{0};
  std::vector<Band> bands_;  // outermost first, generations strictly decreasing
};

inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const EntryValue& v) {
  std::string out;
  for (const auto& band : v.bands()) {
    out += "T" + std::to_string(band.generation) + "(" + std::to_string(band.level) + ",";
  }
  out += format_rational(v.base());
  out.append(v.bands().size(), ')');
  return out;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

/// Decimal digit string to Integer; leading zeros would otherwise select octal.
inline Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

inline Integer pow10(std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace detail

/// Parses "p/q", integers and decimals (optionally with an exponent) exactly.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw ParseError("not a number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
    Integer d = detail::decimal_integer(den);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational q(detail::decimal_integer(num), d);
    return negative ? Rational(-q) : q;
  }

  std::int64_t exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!detail::all_digits(exp) || exp.size() > 4) return fail();
    exponent = std::stoll(std::string(exp));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string_view whole = s;
  std::string_view frac;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    whole = s.substr(0, dot);
    frac = s.substr(dot + 1);
    if (!frac.empty() && !detail::all_digits(frac)) return fail();
  }
  if (whole.empty() && frac.empty()) return fail();
  if (!whole.empty() && !detail::all_digits(whole)) return fail();

  Integer digits = detail::decimal_integer(std::string(whole) + std::string(frac));
  exponent -= static_cast<std::int64_t>(frac.size());
  Rational q = exponent >= 0 ? Rational(digits * detail::pow10(static_cast<std::size_t>(exponent)))
                             : Rational(digits, detail::pow10(static_cast<std::size_t>(-exponent)));
  return negative ? Rational(-q) : q;
}

}  // namespace robcert

#endif  // ROBCERT_VALUES_HPP
