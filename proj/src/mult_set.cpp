// Copyright 2026 The Complements Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "complements/mult_set.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "complements/error.hpp"

namespace complements {

namespace {

void check_unit_interval(const Rational& x, std::string_view what) {
  if (x < Rational(0) || x > Rational(1))
    throw DomainError(std::string(what) + " " + x.to_string() +
                      " outside [0,1]");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

MultSet::MultSet(std::vector<Rational> elements)
    : elements_(std::move(elements)) {
  for (const auto& x : elements_) check_unit_interval(x, "element");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool MultSet::contains(const Rational& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool MultSet::includes(const MultSet& other) const {
  return std::includes(elements_.begin(), elements_.end(),
                       other.elements_.begin(), other.elements_.end());
}

MultSet set_union(const MultSet& a, const MultSet& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return MultSet(std::move(out));
}

std::string to_string(const MultSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s.elements()[i].to_string();
  }
  return out + "}";
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> items;
  text = trim(text);
  if (text.empty()) return items;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    const auto item =
        trim(text.substr(start, pos == std::string_view::npos
                                    ? std::string_view::npos
                                    : pos - start));
    if (item.empty()) throw ParseError("empty item in list '" +
                                       std::string(text) + "'");
    items.emplace_back(item);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return items;
}

MultSet parse_mult_set(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unbalanced braces in set");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Rational> values;
  for (const auto& item : split_list(text)) values.push_back(parse_rational(item));
  return MultSet(std::move(values));
}

Integer lcm_denominators(std::span<const Rational> values) {
  Integer result = 1;
  for (const auto& x : values)
    if (!x.is_zero()) result = lcm(result, x.denominator());
  return result;
}

Integer lcm_denominators(const MultSet& s) {
  return lcm_denominators(std::span<const Rational>(s.elements()));
}

BoundaryP1::BoundaryP1(std::vector<BoundaryPoint> points)
    : points_(std::move(points)) {
  std::set<std::string> seen;
  for (const auto& p : points_) {
    check_unit_interval(p.mult, "multiplicity at " + p.label);
    if (!seen.insert(p.label).second)
      throw DomainError("duplicate boundary label '" + p.label + "'");
  }
}

BoundaryP1 BoundaryP1::from_multiplicities(std::span<const Rational> mults) {
  std::vector<BoundaryPoint> points;
  points.reserve(mults.size());
  for (std::size_t i = 0; i < mults.size(); ++i)
    points.push_back({"P" + std::to_string(i + 1), mults[i]});
  return BoundaryP1(std::move(points));
}

std::vector<Rational> BoundaryP1::multiplicities() const {
  std::vector<Rational> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.mult);
  return out;
}

Rational BoundaryP1::degree() const {
  Rational sum;
  for (const auto& p : points_) sum += p.mult;
  return sum;
}

BoundaryP1 parse_boundary(std::string_view text) {
  std::vector<BoundaryPoint> points;
  std::size_t auto_index = 0;
  for (const auto& item : split_list(text)) {
    ++auto_index;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      points.push_back({"P" + std::to_string(auto_index), parse_rational(item)});
    } else {
      const auto label = trim(std::string_view(item).substr(0, eq));
      if (label.empty()) throw ParseError("empty label in '" + item + "'");
      points.push_back({std::string(label),
                        parse_rational(std::string_view(item).substr(eq + 1))});
    }
  }
  return BoundaryP1(std::move(points));
}

std::string to_string(const BoundaryP1& b) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ',';
    out += b.points()[i].label + "=" + b.points()[i].mult.to_string();
  }
  return out;
}

}  // namespace complements
