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

#include "complements/approximation.hpp"

#include <string>

#include "complements/p1_complements.hpp"

namespace complements {

namespace {

Integer power(const Integer& base, std::size_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

void check_aligned(std::span<const Rational> b0, const ApproxResult& approx) {
  if (b0.size() != approx.numerators.size())
    throw PreconditionError("approximation not aligned with the vector");
  if (approx.q < 1) throw PreconditionError("q must be positive");
}

}  // namespace

bool cassels_bound_holds(const Rational& error, std::int64_t q,
                         std::size_t r) {
  if (r == 0) throw PreconditionError("empty vector");
  if (error.sign() == 0) return true;
  // error = u/v:  (u (r+1))^r q^{r+1} < r^r v^r.
  const Integer lhs = power(error.numerator() * Integer(static_cast<unsigned long>(r + 1)), r) *
                      power(Integer(q), r + 1);
  const Integer rhs = power(Integer(static_cast<unsigned long>(r)) * error.denominator(), r);
  return lhs < rhs;
}

ApproxResult approximate_at(std::span<const Rational> b, std::int64_t q) {
  if (q < 1) throw PreconditionError("q must be positive");
  ApproxResult out;
  out.q = q;
  const Rational qq(q);
  const Rational half(Integer(1), Integer(2));
  for (const auto& x : b) {
    Integer m = (qq * x - half).ceil();
    Rational err = (Rational(m) / qq - x).abs();
    if (err > out.error) out.error = err;
    out.numerators.push_back(std::move(m));
  }
  out.cassels_ok = cassels_bound_holds(out.error, q, b.size());
  return out;
}

ApproxNotFound::ApproxNotFound(ApproxResult best)
    : Error("no q satisfies the simultaneous approximation bound; best q = " +
            std::to_string(best.q) + " with error " + best.error.to_string()),
      best_(std::move(best)) {}

ApproxResult simultaneous_approx(std::span<const Rational> b,
                                 std::int64_t q_max, std::int64_t q_min) {
  if (b.empty()) throw PreconditionError("empty vector");
  for (const auto& x : b)
    if (x < Rational(0) || x > Rational(1))
      throw PreconditionError("entry " + x.to_string() + " outside [0,1]");
  if (q_max < 2) throw PreconditionError("q_max must be at least 2");
  if (q_min < 1 || q_min > q_max)
    throw PreconditionError("q_min must lie in [1, q_max]");
  std::optional<ApproxResult> best;
  for (std::int64_t q = q_min; q <= q_max; ++q) {
    ApproxResult a = approximate_at(b, q);
    if (a.cassels_ok) return a;
    if (!best || a.error < best->error) best = std::move(a);
  }
  throw ApproxNotFound(std::move(*best));
}

bool verify_floor_claim(std::span<const Rational> b0,
                        const ApproxResult& approx, std::int64_t N) {
  check_aligned(b0, approx);
  if (N < 1) throw PreconditionError("N must be positive");
  const Integer qN = Integer(approx.q) * Integer(N);
  for (std::size_t i = 0; i < b0.size(); ++i) {
    if (approx.numerators[i] >= approx.q) continue;
    const Integer lhs = (Rational(qN + 1) * b0[i]).floor();
    if (lhs > Integer(N) * approx.numerators[i]) return false;
  }
  return true;
}

bool floor_claim_threshold(std::span<const Rational> b0,
                           const ApproxResult& approx, std::int64_t N) {
  check_aligned(b0, approx);
  if (N < 1) throw PreconditionError("N must be positive");
  const Rational q(approx.q);
  const Rational qN = q * Rational(N);
  std::optional<Rational> c;
  for (std::size_t i = 0; i < b0.size(); ++i)
    if (approx.numerators[i] < approx.q && (!c || b0[i] > *c)) c = b0[i];
  if (!c) return true;
  for (std::size_t i = 0; i < b0.size(); ++i) {
    if (approx.numerators[i] >= approx.q) continue;
    const Rational bi = Rational(approx.numerators[i]) / q;
    if (*c + qN * (b0[i] - bi).abs() >= Rational(1)) return false;
  }
  return true;
}

Rational equiv_radius(const BoundaryP1& b0, std::int64_t n) {
  return openness_radius(b0, n);
}

}  // namespace complements
