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

#ifndef COMPLEMENTS_MULT_SET_HPP_
#define COMPLEMENTS_MULT_SET_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "complements/rational.hpp"

namespace complements {

// A finite set of rationals in [0,1], kept sorted strictly increasing.
class MultSet {
 public:
  MultSet() = default;
  // Sorts and deduplicates. Throws DomainError if an element lies outside
  // [0,1].
  explicit MultSet(std::vector<Rational> elements);
  MultSet(std::initializer_list<Rational> elements)
      : MultSet(std::vector<Rational>(elements)) {}

  const std::vector<Rational>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const Rational& front() const { return elements_.front(); }
  const Rational& back() const { return elements_.back(); }

  bool contains(const Rational& x) const;
  // Subset test.
  bool includes(const MultSet& other) const;

  friend bool operator==(const MultSet&, const MultSet&) = default;

 private:
  std::vector<Rational> elements_;
};

MultSet set_union(const MultSet& a, const MultSet& b);

// "{a,b,c}".
std::string to_string(const MultSet& s);

// Comma separated "p/q" list, optionally wrapped in braces.
MultSet parse_mult_set(std::string_view text);

// I(R): lcm of the denominators of the nonzero elements; 1 when there are
// none.
Integer lcm_denominators(const MultSet& s);
Integer lcm_denominators(std::span<const Rational> values);

struct BoundaryPoint {
  std::string label;
  Rational mult;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

// Boundary D = sum d_i P_i on the projective line, supported on distinct
// labelled points with multiplicities in [0,1].
class BoundaryP1 {
 public:
  BoundaryP1() = default;
  // Throws DomainError on duplicate labels or multiplicities outside [0,1].
  explicit BoundaryP1(std::vector<BoundaryPoint> points);

  // Labels P1, P2, ... in the given order.
  static BoundaryP1 from_multiplicities(std::span<const Rational> mults);

  const std::vector<BoundaryPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Rational& mult(std::size_t i) const { return points_[i].mult; }
  std::vector<Rational> multiplicities() const;

  Rational degree() const;

  friend bool operator==(const BoundaryP1&, const BoundaryP1&) = default;

 private:
  std::vector<BoundaryPoint> points_;
};

// Comma separated entries, each "p/q" or "label=p/q".
BoundaryP1 parse_boundary(std::string_view text);
std::string to_string(const BoundaryP1& b);

// Splits on commas and trims whitespace; empty input yields no items.
std::vector<std::string> split_list(std::string_view text, char sep = ',');

}  // namespace complements

#endif  // COMPLEMENTS_MULT_SET_HPP_
