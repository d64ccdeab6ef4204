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

#ifndef COMPLEMENTS_HYPERSTANDARD_HPP_
#define COMPLEMENTS_HYPERSTANDARD_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "complements/mult_set.hpp"
#include "complements/rational.hpp"

namespace complements {

// value = 1 - r/m with r in R and m >= 1.
struct PhiWitness {
  Rational value;
  Rational r;
  Integer m;

  bool verifies() const {
    return m >= 1 && value == Rational(1) - r / Rational(m);
  }
  friend bool operator==(const PhiWitness&, const PhiWitness&) = default;
};

// One derivation of an element of the closed set:
// value = r0 - m * sum(1 - parts[i]).
struct ClosureElement {
  Rational value;
  Rational r0;
  Integer m;
  std::vector<Rational> parts;

  bool verifies() const;
};

// Membership in the hyperstandard set {1 - r/m} of R, with a witness.
// For a < 1 the witness uses the smallest r > 0 giving an integral m; a = 1
// is witnessed by (r = 0, m = 1) only when 0 is in R.
// Throws DomainError if a is outside [0,1].
std::optional<PhiWitness> phi_contains(const MultSet& R, const Rational& a);

// {1 - r/m : r in R, 1 <= m <= m_max}. The full set is infinite and
// accumulates at 1, so the caller owns the truncation.
MultSet phi_enumerate(const MultSet& R, std::int64_t m_max);

// Membership in the hyperstandard set extended by the interval [1-eps, 1].
bool phi_eps_contains(const MultSet& R, const Rational& eps,
                      const Rational& a);

// All values r0 - m * sum_{i=1}^{s} (1 - r_i) >= 0 with r0, r_i in R and
// m >= 1, one derivation per value, sorted by value. Parts equal to 1
// contribute nothing and are never listed. Enumeration terminates because
// every nonzero deficit 1 - r_i is at least min{1 - r : r in R, r < 1}.
// Throws PreconditionError if R is empty.
std::vector<ClosureElement> closure_elements(const MultSet& R);
MultSet closure(const MultSet& R);

// True when closure(R) == R.
bool is_closed(const MultSet& R);

// (closure(R) + (1/n) Z) intersected with [0,1].
MultSet r_n_set(const MultSet& R, std::int64_t n);

// Union of r_n_set(R, n) over the given indices.
MultSet r_prime(const MultSet& R, std::span<const std::int64_t> indices);

// 0 <= a <= 1 and floor((n+1) a) >= n a.
bool pn_contains(std::int64_t n, const Rational& a);

// Checks that every element of phi_enumerate(R, m_max) lies in P_n. The
// interval part [1-eps, 1] needs no sampling: a >= 1 - 1/(n+1) already
// forces floor((n+1)a) >= n. Throws PreconditionError unless I(R) divides n
// and 0 <= eps <= 1/(n+1).
bool pn_lemma_check(const MultSet& R, std::int64_t n, const Rational& eps,
                    std::int64_t m_max);

}  // namespace complements

#endif  // COMPLEMENTS_HYPERSTANDARD_HPP_
