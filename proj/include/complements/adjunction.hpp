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

#ifndef COMPLEMENTS_ADJUNCTION_HPP_
#define COMPLEMENTS_ADJUNCTION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "complements/hyperstandard.hpp"
#include "complements/mult_set.hpp"
#include "complements/rational.hpp"

namespace complements {

// ---------------------------------------------------------------------------
// Divisorial adjunction.

struct DiffTerm {
  std::int64_t k = 0;
  Rational b;
};

// Local data of the different along a prime divisor V of S: the index n of
// the germ and the boundary multiplicities b_i met with intersection
// numbers k_i.
struct DiffInput {
  std::int64_t n = 1;
  std::vector<DiffTerm> terms;
};

// 1 - 1/n + (sum k_i b_i) / n.
Rational diff_multiplicity(const DiffInput& in);

// Certificate that a multiplicity of the different is semi-hyperstandard
// over closure(R).
//
// When `in_interval` is false, `derivation` is an element of closure(R)
// built from the decompositions b_i = 1 - r_i/m_i, with
// value == 1 - derivation.value / scale, and `witness` is the canonical
// phi_contains witness of the same value over closure(R).
struct DiffCertificate {
  Rational value;
  bool in_interval = false;
  std::optional<PhiWitness> witness;
  std::optional<ClosureElement> derivation;
  Integer scale;
};

// Requires 1 in R, eps in [0,1], every b_i in Phi(R, eps) and a plt
// result (value < 1). Throws PreconditionError for the first, DomainError
// for the others.
DiffCertificate diff_in_hyperstandard(const MultSet& R, const Rational& eps,
                                      const DiffInput& in);

// ---------------------------------------------------------------------------
// Fiber germs and the divisorial part.

// One component of the fiber over the generic point of W on an snc model:
// mu is its multiplicity in the pull-back of W, d its multiplicity in the
// crepant pull-back of the boundary (d = -a for an exceptional component
// of discrepancy a).
struct FiberComponent {
  std::int64_t mu = 1;
  Rational d;

  friend bool operator==(const FiberComponent&, const FiberComponent&) = default;
};

class FiberGerm {
 public:
  // Throws DomainError unless nonempty with every mu >= 1 and d <= 1.
  explicit FiberGerm(std::vector<FiberComponent> components);

  const std::vector<FiberComponent>& components() const { return components_; }
  bool is_klt() const;

  friend bool operator==(const FiberGerm&, const FiberGerm&) = default;

 private:
  std::vector<FiberComponent> components_;
};

struct LctResult {
  Rational c_W;
  Rational d_W;
};

// c_W = min (1 - d) / mu, d_W = 1 - c_W.
LctResult lct_over_divisor(const FiberGerm& g);

// Replaces each d by d + c * mu, modelling D + c f^*W. Throws DomainError
// if a multiplicity would exceed 1.
FiberGerm divisorial_shift(const FiberGerm& g, const Rational& c);

// Parses "mu:d,mu:d,...".
FiberGerm parse_fiber_germ(std::string_view text);

// ---------------------------------------------------------------------------
// Kodaira fibers.

enum class KodairaTag { kMultipleI, kII, kIII, kIV, kIstar, kIIstar, kIIIstar,
                        kIVstar };

// For kMultipleI, `m` is the fiber multiplicity and `n` the cycle length
// (mI_n). For kIstar, `n` is b in I*_b. Other tags ignore both.
struct KodairaType {
  KodairaTag tag = KodairaTag::kMultipleI;
  std::int64_t m = 1;
  std::int64_t n = 0;

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

// Accepts "mI_n:<m>[:<n>]", "II", "III", "IV", "Istar[:<b>]", "IIstar",
// "IIIstar", "IVstar".
KodairaType parse_kodaira(std::string_view text);
std::string to_string(const KodairaType& t);

Rational kodaira_dP(const KodairaType& t);

// An snc model of the fiber over the germ with its crepant boundary data,
// from which lct_over_divisor recovers kodaira_dP.
FiberGerm kodaira_resolution_germ(const KodairaType& t);

struct EllipticFiber {
  std::string label;
  KodairaType type;
};

struct EllipticFibration {
  std::int64_t base_genus = 0;
  std::vector<EllipticFiber> fibers;
  std::int64_t j_degree = 0;
};

struct EllipticFormulaResult {
  std::vector<std::pair<std::string, Rational>> d_div;
  Rational deg_dmod;
  Rational deg_total;
  // lcm of the denominators of the d_P; meaningful as the torsion index of
  // K only when deg_total == 0 and j is constant.
  std::int64_t torsion_index = 1;
};

// Canonical bundle formula K + D = f^*(K_Z + D_div + J^*P / 12) on a curve
// base. Throws DomainError on duplicate labels or negative genus/degree.
EllipticFormulaResult elliptic_formula(const EllipticFibration& e);

// ---------------------------------------------------------------------------
// Surface arithmetic.

struct RuledSection {
  Rational d;
  Rational a;
};

// deg L = sum d_i a_i - e for four sections Sigma + a_i F of F_e with
// sum d_i = 2, d_i in [0,1], a_i >= 0, and a_i >= e for all but at most one
// section (the minimal one). Throws PreconditionError otherwise.
Rational moduli_degree_ruled(std::int64_t e,
                             std::span<const RuledSection> sections);

struct PairDiscrResult {
  Rational sum;
  bool bound_ok = false;
  // Discrepancy 1 - sum of the exceptional divisor of the point blow-up.
  Rational blowup_discrepancy;
};

PairDiscrResult pair_discr_bound(std::span<const Rational> lambdas,
                                 const Rational& eps);

}  // namespace complements

#endif  // COMPLEMENTS_ADJUNCTION_HPP_
