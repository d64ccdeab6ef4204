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

#include "complements/hyperstandard.hpp"

#include <map>
#include <set>
#include <utility>

#include "complements/error.hpp"

namespace complements {

namespace {

void require_unit(const Rational& x, const char* what) {
  if (x < Rational(0) || x > Rational(1))
    throw DomainError(std::string(what) + " " + x.to_string() +
                      " outside [0,1]");
}

void require_positive(std::int64_t v, const char* what) {
  if (v < 1)
    throw PreconditionError(std::string(what) + " must be a positive integer");
}

}  // namespace

bool ClosureElement::verifies() const {
  if (m < 1) return false;
  Rational deficit;
  for (const auto& r : parts) deficit += Rational(1) - r;
  const Rational v = r0 - Rational(m) * deficit;
  return v == value && v.sign() >= 0;
}

std::optional<PhiWitness> phi_contains(const MultSet& R, const Rational& a) {
  require_unit(a, "value");
  const Rational one(1);
  if (a == one) {
    if (R.contains(Rational(0))) return PhiWitness{a, Rational(0), Integer(1)};
    return std::nullopt;
  }
  const Rational gap = one - a;
  for (const auto& r : R) {
    if (r.is_zero()) continue;
    const Rational m = r / gap;
    if (m.is_integer() && m >= one) return PhiWitness{a, r, m.numerator()};
  }
  return std::nullopt;
}

MultSet phi_enumerate(const MultSet& R, std::int64_t m_max) {
  require_positive(m_max, "m_max");
  std::vector<Rational> values;
  values.reserve(R.size() * static_cast<std::size_t>(m_max));
  for (const auto& r : R)
    for (std::int64_t m = 1; m <= m_max; ++m)
      values.push_back(Rational(1) - r / Rational(m));
  return MultSet(std::move(values));
}

bool phi_eps_contains(const MultSet& R, const Rational& eps,
                      const Rational& a) {
  require_unit(eps, "eps");
  require_unit(a, "value");
  if (a >= Rational(1) - eps) return true;
  return phi_contains(R, a).has_value();
}

std::vector<ClosureElement> closure_elements(const MultSet& R) {
  if (R.empty()) throw PreconditionError("closure of an empty set");
  const Rational one(1);
  std::vector<Rational> deficits;
  std::vector<Rational> part_values;
  for (const auto& r : R) {
    if (r < one) {
      deficits.push_back(one - r);
      part_values.push_back(r);
    }
  }
  const Rational& r0_max = R.back();

  // Reachable deficit sums <= r0_max, with the first multiset of parts (in
  // breadth-first order) realizing each. Multisets are grown with
  // nondecreasing part indices; (sum, last index) pairs are deduplicated
  // since they determine all further extensions.
  std::map<Rational, std::vector<Rational>> sums;
  struct Node {
    Rational sum;
    std::size_t last;
    std::vector<Rational> parts;
  };
  std::vector<Node> frontier{{Rational(0), 0, {}}};
  while (!frontier.empty()) {
    std::vector<Node> next;
    std::set<std::pair<Rational, std::size_t>> seen;
    for (const auto& node : frontier) {
      for (std::size_t i = node.last; i < deficits.size(); ++i) {
        Rational s = node.sum + deficits[i];
        if (s > r0_max) continue;
        if (!seen.emplace(s, i).second) continue;
        auto parts = node.parts;
        parts.push_back(part_values[i]);
        sums.try_emplace(s, parts);
        next.push_back({std::move(s), i, std::move(parts)});
      }
    }
    frontier = std::move(next);
  }

  std::map<Rational, ClosureElement> values;
  for (const auto& r0 : R) {
    values.try_emplace(r0, ClosureElement{r0, r0, Integer(1), {}});
    for (const auto& [s, parts] : sums) {
      if (s > r0) break;
      const Integer m_top = (r0 / s).floor();
      for (Integer m = 1; m <= m_top; ++m) {
        Rational v = r0 - Rational(m) * s;
        values.try_emplace(v, ClosureElement{v, r0, m, parts});
      }
    }
  }
  std::vector<ClosureElement> out;
  out.reserve(values.size());
  for (auto& [v, e] : values) out.push_back(std::move(e));
  return out;
}

MultSet closure(const MultSet& R) {
  std::vector<Rational> values;
  for (auto& e : closure_elements(R)) values.push_back(std::move(e.value));
  return MultSet(std::move(values));
}

bool is_closed(const MultSet& R) { return closure(R) == R; }

MultSet r_n_set(const MultSet& R, std::int64_t n) {
  require_positive(n, "n");
  const Rational step(Integer(1), Integer(n));
  std::vector<Rational> values;
  for (const auto& x : closure(R)) {
    const Integer k_lo = (-x * Rational(n)).ceil();
    const Integer k_hi = ((Rational(1) - x) * Rational(n)).floor();
    for (Integer k = k_lo; k <= k_hi; ++k)
      values.push_back(x + Rational(k) * step);
  }
  return MultSet(std::move(values));
}

MultSet r_prime(const MultSet& R, std::span<const std::int64_t> indices) {
  if (indices.empty()) throw PreconditionError("empty index set");
  MultSet out;
  for (auto n : indices) out = set_union(out, r_n_set(R, n));
  return out;
}

bool pn_contains(std::int64_t n, const Rational& a) {
  if (a < Rational(0) || a > Rational(1)) return false;
  return Rational((Rational(n + 1) * a).floor()) >= Rational(n) * a;
}

bool pn_lemma_check(const MultSet& R, std::int64_t n, const Rational& eps,
                    std::int64_t m_max) {
  require_positive(n, "n");
  const Integer index = lcm_denominators(R);
  if (Integer(n) % index != 0)
    throw PreconditionError("I(R) = " + index.get_str() + " does not divide " +
                            std::to_string(n));
  if (eps < Rational(0) || eps > Rational(Integer(1), Integer(n + 1)))
    throw PreconditionError("eps must lie in [0, 1/(n+1)]");
  for (const auto& a : phi_enumerate(R, m_max))
    if (!pn_contains(n, a)) return false;
  return true;
}

}  // namespace complements
