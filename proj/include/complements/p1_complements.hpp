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

#ifndef COMPLEMENTS_P1_COMPLEMENTS_HPP_
#define COMPLEMENTS_P1_COMPLEMENTS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "complements/error.hpp"
#include "complements/mult_set.hpp"
#include "complements/rational.hpp"

namespace complements {

// How the per-point lower bound on n * D^+ is formed.
//   kDefinition: n at points of multiplicity 1, floor((n+1) d) elsewhere.
//   kGeq:        ceil(n d), i.e. D^+ >= D.
enum class ComplementVariant { kDefinition, kGeq };

std::string_view to_string(ComplementVariant v);
// "definition" or "geq"; throws ParseError otherwise.
ComplementVariant parse_variant(std::string_view text);

// Witness of an n-complement on the projective line: D^+ has multiplicity
// numerators[i] / n at the i-th boundary point and extra_points[j] / n at
// additional general points. Since deg K = -2, n(K + D^+) ~ 0 is the
// condition sum(numerators) + sum(extra_points) == 2n.
struct ComplementCertificate {
  std::int64_t n = 0;
  std::vector<std::int64_t> numerators;
  std::vector<std::int64_t> extra_points;

  friend bool operator==(const ComplementCertificate&,
                         const ComplementCertificate&) = default;
};

std::int64_t point_requirement(const Rational& d, std::int64_t n,
                               ComplementVariant v);

// Checks every certificate invariant against D: numerators aligned with the
// points, 0 <= numerator <= n, extra points in [1, n], total 2n, and the
// variant's per-point lower bounds.
bool certificate_valid(const BoundaryP1& D, const ComplementCertificate& c,
                       ComplementVariant v);

// D^+ >= D at every boundary point.
bool certificate_dominates(const ComplementCertificate& c,
                           const BoundaryP1& D);

// Decides n-complementability: a certificate exists iff the per-point
// requirements sum to at most 2n. The slack goes to extra points, largest
// first, each at most n.
std::optional<ComplementCertificate> complement_exists(const BoundaryP1& D,
                                                       std::int64_t n,
                                                       ComplementVariant v);

// Least n <= n_max divisible by I admitting a certificate.
// Throws PreconditionError unless 1 <= I <= n_max.
std::optional<std::int64_t> min_complement_index(const BoundaryP1& D,
                                                 std::int64_t I,
                                                 std::int64_t n_max,
                                                 ComplementVariant v);

// Multiplies every numerator by I, giving an nI-certificate. Requires
// D^+ >= D; throws PreconditionError otherwise.
ComplementCertificate scale_certificate(const ComplementCertificate& c,
                                        const BoundaryP1& D, std::int64_t I);

// Largest eps such that every boundary B' on the same points with
// |B - B'| < eps inherits all n-complements of B:
//   min over b_i < 1 of (1 - frac((n+1) b_i)) / (n+1),
// and 1 when every b_i equals 1.
Rational openness_radius(const BoundaryP1& B, std::int64_t n);

// 1 / (N + 2).
Rational epsilon_from_N(std::int64_t N);

struct N1Report {
  std::vector<std::int64_t> indices;
  std::map<std::int64_t, BoundaryP1> witnesses;
  std::int64_t m_max = 0;
  std::int64_t n_max = 0;
  std::int64_t boundaries_examined = 0;

  friend bool operator==(const N1Report&, const N1Report&) = default;
};

// Raised when an admissible boundary has no complement of index <= n_max.
class N1CapExceeded : public Error {
 public:
  N1CapExceeded(BoundaryP1 boundary, std::int64_t n_max);
  const BoundaryP1& boundary() const { return boundary_; }

 private:
  BoundaryP1 boundary_;
};

using N1Visitor =
    std::function<void(std::span<const Rational> mults, std::int64_t index)>;

// Walks every admissible boundary on the projective line whose
// multiplicities come from phi_enumerate(R, m_max) \ {0}: either klt
// (all d_i < 1, deg <= 2) or deg == 2. Multisets are visited in a fixed
// order (nondecreasing multiplicities, depth first), each with its minimal
// complement index among multiples of I(R), using the definition variant.
// Throws PreconditionError if R has no positive element, N1CapExceeded if
// some boundary needs an index above n_max.
void visit_n1_boundaries(const MultSet& R, std::int64_t m_max,
                         std::int64_t n_max, const N1Visitor& visit);

// The set of minimal indices attained, with the first witness for each.
N1Report enumerate_N1(const MultSet& R, std::int64_t m_max,
                      std::int64_t n_max);

// One report per truncation cap, in the given order.
std::vector<N1Report> enumerate_N1_sweep(const MultSet& R,
                                         std::span<const std::int64_t> m_caps,
                                         std::int64_t n_max);

}  // namespace complements

#endif  // COMPLEMENTS_P1_COMPLEMENTS_HPP_
