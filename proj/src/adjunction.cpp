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

#include "complements/adjunction.hpp"

#include <algorithm>
#include <string>

#include "complements/error.hpp"

namespace complements {

namespace {

const Rational kOne(1);

struct Decomposition {
  Rational r;
  Integer m;
};

// b = 1 - r/m with r in R, preferring m == 1.
std::optional<Decomposition> decompose(const MultSet& R, const Rational& b) {
  if (R.contains(kOne - b)) return Decomposition{kOne - b, Integer(1)};
  if (auto w = phi_contains(R, b)) return Decomposition{w->r, w->m};
  return std::nullopt;
}

}  // namespace

Rational diff_multiplicity(const DiffInput& in) {
  if (in.n < 1) throw DomainError("germ index n must be positive");
  Rational sum;
  for (const auto& t : in.terms) {
    if (t.k < 0) throw DomainError("negative coefficient k");
    sum += Rational(t.k) * t.b;
  }
  const Rational n(in.n);
  return kOne - kOne / n + sum / n;
}

DiffCertificate diff_in_hyperstandard(const MultSet& R, const Rational& eps,
                                      const DiffInput& in) {
  if (!R.contains(kOne)) throw PreconditionError("R must contain 1");
  if (eps < Rational(0) || eps > kOne)
    throw DomainError("eps " + eps.to_string() + " outside [0,1]");
  for (const auto& t : in.terms)
    if (!phi_eps_contains(R, eps, t.b))
      throw DomainError("boundary multiplicity " + t.b.to_string() +
                        " not in Phi(R, eps)");

  DiffCertificate cert;
  cert.value = diff_multiplicity(in);
  if (cert.value >= kOne)
    throw DomainError("different multiplicity " + cert.value.to_string() +
                      " >= 1: pair is not plt");
  if (cert.value >= kOne - eps) {
    cert.in_interval = true;
    return cert;
  }

  // Every b_i with k_i > 0 is at most d < 1 - eps, so it is hyperstandard.
  // At most one of them can have m_i > 1, and then with k_i == 1, since two
  // such terms would already push d to 1.
  std::optional<Decomposition> special;
  std::vector<Rational> parts;
  for (const auto& t : in.terms) {
    if (t.k == 0) continue;
    auto dec = decompose(R, t.b);
    if (!dec) throw Error("self-check failed: no decomposition of " +
                          t.b.to_string());
    if (dec->m > 1) {
      if (special || t.k != 1)
        throw Error("self-check failed: several non-standard terms below 1");
      special = std::move(dec);
      continue;
    }
    if (dec->r == kOne) continue;
    for (std::int64_t j = 0; j < t.k; ++j) parts.push_back(dec->r);
  }
  std::sort(parts.begin(), parts.end());

  ClosureElement e;
  e.r0 = special ? special->r : kOne;
  e.m = special ? special->m : Integer(1);
  e.parts = std::move(parts);
  Rational deficit;
  for (const auto& r : e.parts) deficit += kOne - r;
  e.value = e.r0 - Rational(e.m) * deficit;
  cert.scale = Integer(in.n) * e.m;
  if (!e.verifies() || kOne - e.value / Rational(cert.scale) != cert.value)
    throw Error("self-check failed: closure derivation does not reproduce d");
  cert.derivation = std::move(e);

  cert.witness = phi_contains(closure(R), cert.value);
  if (!cert.witness)
    throw Error("self-check failed: " + cert.value.to_string() +
                " not found in Phi(closure(R))");
  return cert;
}

FiberGerm::FiberGerm(std::vector<FiberComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("empty fiber germ");
  for (const auto& c : components_) {
    if (c.mu < 1) throw DomainError("fiber multiplicity must be positive");
    if (c.d > kOne)
      throw DomainError("boundary multiplicity " + c.d.to_string() + " > 1");
  }
}

bool FiberGerm::is_klt() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const FiberComponent& c) { return c.d < kOne; });
}

LctResult lct_over_divisor(const FiberGerm& g) {
  std::optional<Rational> c;
  for (const auto& comp : g.components()) {
    Rational t = (kOne - comp.d) / Rational(comp.mu);
    if (!c || t < *c) c = std::move(t);
  }
  return {*c, kOne - *c};
}

FiberGerm divisorial_shift(const FiberGerm& g, const Rational& c) {
  std::vector<FiberComponent> out;
  out.reserve(g.components().size());
  for (const auto& comp : g.components())
    out.push_back({comp.mu, comp.d + c * Rational(comp.mu)});
  return FiberGerm(std::move(out));
}

FiberGerm parse_fiber_germ(std::string_view text) {
  std::vector<FiberComponent> comps;
  for (const auto& item : split_list(text)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("fiber component '" + item + "' is not mu:d");
    const Rational mu = parse_rational(std::string_view(item).substr(0, colon));
    if (!mu.is_integer())
      throw ParseError("fiber multiplicity must be an integer in '" + item + "'");
    comps.push_back({to_int64(mu.numerator()),
                     parse_rational(std::string_view(item).substr(colon + 1))});
  }
  return FiberGerm(std::move(comps));
}

Rational moduli_degree_ruled(std::int64_t e,
                             std::span<const RuledSection> sections) {
  if (e < 0) throw PreconditionError("e must be nonnegative");
  if (sections.size() != 4)
    throw PreconditionError("exactly four sections are required");
  Rational total_d;
  int below_e = 0;
  for (const auto& s : sections) {
    if (s.d < Rational(0) || s.d > kOne)
      throw PreconditionError("section multiplicity outside [0,1]");
    if (s.a < Rational(0)) throw PreconditionError("negative section class");
    if (s.a < Rational(e)) ++below_e;
    total_d += s.d;
  }
  if (total_d != Rational(2))
    throw PreconditionError("section multiplicities must sum to 2");
  if (below_e > 1)
    throw PreconditionError("at most one section may have a < e");
  Rational deg;
  for (const auto& s : sections) deg += s.d * s.a;
  return deg - Rational(e);
}

PairDiscrResult pair_discr_bound(std::span<const Rational> lambdas,
                                 const Rational& eps) {
  if (eps < Rational(0)) throw DomainError("eps must be nonnegative");
  PairDiscrResult out;
  for (const auto& l : lambdas) {
    if (l < Rational(0) || l > kOne)
      throw DomainError("multiplicity " + l.to_string() + " outside [0,1]");
    out.sum += l;
  }
  out.bound_ok = out.sum <= Rational(2) - eps;
  out.blowup_discrepancy = kOne - out.sum;
  return out;
}

}  // namespace complements
