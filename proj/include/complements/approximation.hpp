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

#ifndef COMPLEMENTS_APPROXIMATION_HPP_
#define COMPLEMENTS_APPROXIMATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "complements/error.hpp"
#include "complements/mult_set.hpp"
#include "complements/rational.hpp"

namespace complements {

// Simultaneous approximation (m_1/q, ..., m_r/q) of a vector b.
struct ApproxResult {
  std::int64_t q = 1;
  std::vector<Integer> numerators;
  // max_i |m_i/q - b_i|, exact.
  Rational error;
  // error < r / ((r+1) q^{1+1/r}).
  bool cassels_ok = false;

  friend bool operator==(const ApproxResult&, const ApproxResult&) = default;
};

// Decides error < r / ((r+1) q^{1+1/r}) without leaving the rationals, by
// comparing (error (r+1))^r q^{r+1} against r^r.
bool cassels_bound_holds(const Rational& error, std::int64_t q, std::size_t r);

// Approximation with denominator q and nearest-integer numerators (ties
// rounded down).
ApproxResult approximate_at(std::span<const Rational> b, std::int64_t q);

class ApproxNotFound : public Error {
 public:
  explicit ApproxNotFound(ApproxResult best);
  // Smallest-error candidate met during the scan (first one on ties).
  const ApproxResult& best() const { return best_; }

 private:
  ApproxResult best_;
};

// Smallest q in [q_min, q_max] whose approximation satisfies the Cassels
// bound. Throws PreconditionError on empty b, entries outside [0,1],
// q_max < 2 or q_min outside [1, q_max]; ApproxNotFound when the scan
// fails.
ApproxResult simultaneous_approx(std::span<const Rational> b,
                                 std::int64_t q_max, std::int64_t q_min = 1);

// floor((qN + 1) b0_i) <= N m_i for every i with m_i/q < 1.
bool verify_floor_claim(std::span<const Rational> b0,
                        const ApproxResult& approx, std::int64_t N);

// Sufficient condition for the floor claim: with c the largest b0_i among
// constrained entries (m_i/q < 1), c + qN |b0_i - m_i/q| < 1 for every
// constrained i.
bool floor_claim_threshold(std::span<const Rational> b0,
                           const ApproxResult& approx, std::int64_t N);

// Radius of the neighbourhood of b0 on which n-complements persist; the
// same quantity as openness_radius.
Rational equiv_radius(const BoundaryP1& b0, std::int64_t n);

}  // namespace complements

#endif  // COMPLEMENTS_APPROXIMATION_HPP_
