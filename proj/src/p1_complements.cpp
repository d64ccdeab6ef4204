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

#include "complements/p1_complements.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "complements/hyperstandard.hpp"

namespace complements {

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1)
    throw PreconditionError(std::string(what) + " must be a positive integer");
}

}  // namespace

std::string_view to_string(ComplementVariant v) {
  return v == ComplementVariant::kDefinition ? "definition" : "geq";
}

ComplementVariant parse_variant(std::string_view text) {
  if (text == "definition") return ComplementVariant::kDefinition;
  if (text == "geq") return ComplementVariant::kGeq;
  throw ParseError("unknown variant '" + std::string(text) +
                   "' (expected definition or geq)");
}

std::int64_t point_requirement(const Rational& d, std::int64_t n,
                               ComplementVariant v) {
  if (v == ComplementVariant::kGeq) return to_int64((Rational(n) * d).ceil());
  if (d == Rational(1)) return n;
  return to_int64((Rational(n + 1) * d).floor());
}

bool certificate_valid(const BoundaryP1& D, const ComplementCertificate& c,
                       ComplementVariant v) {
  if (c.n < 1 || c.numerators.size() != D.size()) return false;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < D.size(); ++i) {
    const auto p = c.numerators[i];
    if (p < 0 || p > c.n) return false;
    if (p < point_requirement(D.mult(i), c.n, v)) return false;
    total += p;
  }
  for (auto e : c.extra_points) {
    if (e < 1 || e > c.n) return false;
    total += e;
  }
  return total == 2 * c.n;
}

bool certificate_dominates(const ComplementCertificate& c,
                           const BoundaryP1& D) {
  if (c.numerators.size() != D.size()) return false;
  for (std::size_t i = 0; i < D.size(); ++i)
    if (Rational(Integer(c.numerators[i]), Integer(c.n)) < D.mult(i))
      return false;
  return true;
}

std::optional<ComplementCertificate> complement_exists(const BoundaryP1& D,
                                                       std::int64_t n,
                                                       ComplementVariant v) {
  require_positive(n, "n");
  ComplementCertificate cert;
  cert.n = n;
  std::int64_t total = 0;
  for (const auto& p : D.points()) {
    const auto need = point_requirement(p.mult, n, v);
    cert.numerators.push_back(need);
    total += need;
  }
  if (total > 2 * n) return std::nullopt;
  for (std::int64_t slack = 2 * n - total; slack > 0;) {
    const auto part = std::min(slack, n);
    cert.extra_points.push_back(part);
    slack -= part;
  }
  return cert;
}

std::optional<std::int64_t> min_complement_index(const BoundaryP1& D,
                                                 std::int64_t I,
                                                 std::int64_t n_max,
                                                 ComplementVariant v) {
  require_positive(I, "I");
  if (n_max < I) throw PreconditionError("n_max must be at least I");
  for (std::int64_t n = I; n <= n_max; n += I)
    if (complement_exists(D, n, v)) return n;
  return std::nullopt;
}

ComplementCertificate scale_certificate(const ComplementCertificate& c,
                                        const BoundaryP1& D, std::int64_t I) {
  require_positive(I, "I");
  if (!certificate_dominates(c, D))
    throw PreconditionError("certificate does not satisfy D+ >= D");
  ComplementCertificate out = c;
  out.n *= I;
  for (auto& p : out.numerators) p *= I;
  for (auto& e : out.extra_points) e *= I;
  return out;
}

Rational openness_radius(const BoundaryP1& B, std::int64_t n) {
  require_positive(n, "n");
  const Rational scale(n + 1);
  std::optional<Rational> best;
  for (const auto& p : B.points()) {
    if (p.mult == Rational(1)) continue;
    Rational eps = (Rational(1) - (scale * p.mult).frac()) / scale;
    if (!best || eps < *best) best = std::move(eps);
  }
  return best.value_or(Rational(1));
}

Rational epsilon_from_N(std::int64_t N) {
  require_positive(N, "N");
  return Rational(Integer(1), Integer(N + 2));
}

N1CapExceeded::N1CapExceeded(BoundaryP1 boundary, std::int64_t n_max)
    : Error("no complement of index <= " + std::to_string(n_max) +
            " for admissible boundary " + to_string(boundary)),
      boundary_(std::move(boundary)) {}

void visit_n1_boundaries(const MultSet& R, std::int64_t m_max,
                         std::int64_t n_max, const N1Visitor& visit) {
  require_positive(m_max, "m_max");
  require_positive(n_max, "n_max");
  if (R.empty() || R.back().sign() <= 0)
    throw PreconditionError("R must contain a positive element");

  const std::int64_t I = to_int64(lcm_denominators(R));
  std::vector<Rational> values;
  for (const auto& a : phi_enumerate(R, m_max))
    if (!a.is_zero()) values.push_back(a);

  std::vector<std::int64_t> indices;
  for (std::int64_t n = I; n <= n_max; n += I) indices.push_back(n);
  const std::size_t K = indices.size();

  // Requirement table, one row per multiplicity. Both variants are built
  // and compared: on multiplicities of Phi(R) with I(R) | n they coincide.
  std::vector<std::vector<std::int64_t>> req(values.size(),
                                             std::vector<std::int64_t>(K));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = 0; k < K; ++k) {
      const auto def =
          point_requirement(values[i], indices[k], ComplementVariant::kDefinition);
      const auto geq =
          point_requirement(values[i], indices[k], ComplementVariant::kGeq);
      if (def != geq)
        throw Error("self-check failed: complement variants differ at d = " +
                    values[i].to_string() + ", n = " +
                    std::to_string(indices[k]));
      req[i][k] = def;
    }
  }

  // Degrees are tracked as integers over a common denominator.
  Integer common = lcm_denominators(std::span<const Rational>(values));
  std::vector<Integer> scaled;
  scaled.reserve(values.size());
  for (const auto& v : values)
    scaled.push_back(v.numerator() * (common / v.denominator()));
  const Integer degree_cap = 2 * common;
  const Rational one(1);

  struct Frame {
    Integer degree;
    bool has_one = false;
    std::vector<std::int64_t> sums;
  };
  std::vector<Frame> stack;
  stack.push_back({Integer(0), false, std::vector<std::int64_t>(K, 0)});
  std::vector<Rational> mults;
  std::vector<std::size_t> chosen;

  auto process = [&](const Frame& f) {
    if (f.has_one && f.degree != degree_cap) return;
    for (std::size_t k = 0; k < K; ++k) {
      if (f.sums[k] <= 2 * indices[k]) {
        visit(std::span<const Rational>(mults), indices[k]);
        return;
      }
    }
    throw N1CapExceeded(BoundaryP1::from_multiplicities(mults), n_max);
  };

  std::function<void(std::size_t)> descend = [&](std::size_t start) {
    process(stack.back());
    for (std::size_t i = start; i < values.size(); ++i) {
      const Frame& top = stack.back();
      Integer degree = top.degree + scaled[i];
      if (degree > degree_cap) break;
      Frame next{std::move(degree), top.has_one || values[i] == one,
                 top.sums};
      for (std::size_t k = 0; k < K; ++k) next.sums[k] += req[i][k];
      stack.push_back(std::move(next));
      mults.push_back(values[i]);
      descend(i);
      mults.pop_back();
      stack.pop_back();
    }
  };
  descend(0);
}

N1Report enumerate_N1(const MultSet& R, std::int64_t m_max,
                      std::int64_t n_max) {
  N1Report report;
  report.m_max = m_max;
  report.n_max = n_max;
  visit_n1_boundaries(R, m_max, n_max,
                      [&](std::span<const Rational> mults, std::int64_t n) {
                        ++report.boundaries_examined;
                        if (!report.witnesses.contains(n))
                          report.witnesses.emplace(
                              n, BoundaryP1::from_multiplicities(mults));
                      });
  for (const auto& [n, w] : report.witnesses) report.indices.push_back(n);
  return report;
}

std::vector<N1Report> enumerate_N1_sweep(const MultSet& R,
                                         std::span<const std::int64_t> m_caps,
                                         std::int64_t n_max) {
  std::vector<N1Report> out;
  out.reserve(m_caps.size());
  for (auto m : m_caps) out.push_back(enumerate_N1(R, m, n_max));
  return out;
}

}  // namespace complements
