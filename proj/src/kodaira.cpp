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

#include <set>
#include <string>

#include "complements/adjunction.hpp"
#include "complements/error.hpp"

namespace complements {

namespace {

std::int64_t parse_count(std::string_view s, std::string_view whole) {
  const Rational v = parse_rational(s);
  if (!v.is_integer() || v.sign() < 0)
    throw ParseError("bad count in Kodaira type '" + std::string(whole) + "'");
  return to_int64(v.numerator());
}

std::vector<FiberComponent> unweighted(std::initializer_list<std::int64_t> mus) {
  std::vector<FiberComponent> out;
  for (auto mu : mus) out.push_back({mu, Rational(0)});
  return out;
}

}  // namespace

KodairaType parse_kodaira(std::string_view text) {
  const std::string_view whole = text;
  std::string_view head = text;
  std::vector<std::int64_t> args;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    for (const auto& a : split_list(text.substr(colon + 1), ':'))
      args.push_back(parse_count(a, whole));
  }
  KodairaType t;
  if (head == "mI_n") {
    if (args.empty() || args.size() > 2 || args[0] < 1)
      throw ParseError("expected mI_n:<m>[:<n>] with m >= 1, got '" +
                       std::string(whole) + "'");
    t.tag = KodairaTag::kMultipleI;
    t.m = args[0];
    t.n = args.size() == 2 ? args[1] : 0;
    return t;
  }
  if (head == "Istar") {
    if (args.size() > 1)
      throw ParseError("expected Istar[:<b>], got '" + std::string(whole) + "'");
    t.tag = KodairaTag::kIstar;
    t.n = args.empty() ? 0 : args[0];
    return t;
  }
  if (!args.empty())
    throw ParseError("unexpected parameters in '" + std::string(whole) + "'");
  if (head == "II") t.tag = KodairaTag::kII;
  else if (head == "III") t.tag = KodairaTag::kIII;
  else if (head == "IV") t.tag = KodairaTag::kIV;
  else if (head == "IIstar") t.tag = KodairaTag::kIIstar;
  else if (head == "IIIstar") t.tag = KodairaTag::kIIIstar;
  else if (head == "IVstar") t.tag = KodairaTag::kIVstar;
  else throw ParseError("unknown Kodaira type '" + std::string(whole) + "'");
  return t;
}

std::string to_string(const KodairaType& t) {
  switch (t.tag) {
    case KodairaTag::kMultipleI:
      return "mI_n:" + std::to_string(t.m) +
             (t.n ? ":" + std::to_string(t.n) : std::string());
    case KodairaTag::kII: return "II";
    case KodairaTag::kIII: return "III";
    case KodairaTag::kIV: return "IV";
    case KodairaTag::kIstar:
      return t.n ? "Istar:" + std::to_string(t.n) : std::string("Istar");
    case KodairaTag::kIIstar: return "IIstar";
    case KodairaTag::kIIIstar: return "IIIstar";
    case KodairaTag::kIVstar: return "IVstar";
  }
  return {};
}

Rational kodaira_dP(const KodairaType& t) {
  switch (t.tag) {
    case KodairaTag::kMultipleI:
      if (t.m < 1) throw DomainError("fiber multiplicity must be positive");
      return Rational(1) - Rational(Integer(1), Integer(t.m));
    case KodairaTag::kII: return Rational(1, 6);
    case KodairaTag::kIII: return Rational(1, 4);
    case KodairaTag::kIV: return Rational(1, 3);
    case KodairaTag::kIstar: return Rational(1, 2);
    case KodairaTag::kIIstar: return Rational(5, 6);
    case KodairaTag::kIIIstar: return Rational(3, 4);
    case KodairaTag::kIVstar: return Rational(2, 3);
  }
  throw DomainError("invalid Kodaira type");
}

// Fixtures. The snc types are the Kodaira fibers themselves (multiplicities
// from the extended Dynkin diagrams). II, III, IV and mI_1 are not snc and
// are replaced by their log resolutions; d = -(discrepancy) on the
// exceptional curves:
//   II  (cusp): three blow-ups, exceptional mu = 2, 3, 6, a = 1, 2, 4.
//   III (tacnode of two curves): two blow-ups, mu = 2, 4, a = 1, 2.
//   IV  (three concurrent lines): one blow-up, mu = 3, a = 1.
//   mI_1 (nodal): one blow-up at the node, mu = 2m, a = 1.
FiberGerm kodaira_resolution_germ(const KodairaType& t) {
  switch (t.tag) {
    case KodairaTag::kMultipleI: {
      if (t.m < 1) throw DomainError("fiber multiplicity must be positive");
      if (t.n == 1)
        return FiberGerm({{t.m, Rational(0)}, {2 * t.m, Rational(-1)}});
      const std::int64_t count = t.n == 0 ? 1 : t.n;
      return FiberGerm(std::vector<FiberComponent>(
          static_cast<std::size_t>(count), {t.m, Rational(0)}));
    }
    case KodairaTag::kII:
      return FiberGerm({{1, Rational(0)}, {2, Rational(-1)},
                        {3, Rational(-2)}, {6, Rational(-4)}});
    case KodairaTag::kIII:
      return FiberGerm({{1, Rational(0)}, {1, Rational(0)},
                        {2, Rational(-1)}, {4, Rational(-2)}});
    case KodairaTag::kIV:
      return FiberGerm({{1, Rational(0)}, {1, Rational(0)}, {1, Rational(0)},
                        {3, Rational(-1)}});
    case KodairaTag::kIstar: {
      auto comps = unweighted({1, 1, 1, 1});
      for (std::int64_t i = 0; i <= t.n; ++i) comps.push_back({2, Rational(0)});
      return FiberGerm(std::move(comps));
    }
    case KodairaTag::kIIstar:
      return FiberGerm(unweighted({1, 2, 3, 4, 5, 6, 4, 2, 3}));
    case KodairaTag::kIIIstar:
      return FiberGerm(unweighted({1, 2, 3, 4, 3, 2, 1, 2}));
    case KodairaTag::kIVstar:
      return FiberGerm(unweighted({1, 2, 3, 2, 1, 2, 1}));
  }
  throw DomainError("invalid Kodaira type");
}

EllipticFormulaResult elliptic_formula(const EllipticFibration& e) {
  if (e.base_genus < 0) throw DomainError("negative base genus");
  if (e.j_degree < 0) throw DomainError("negative j-degree");
  std::set<std::string> labels;
  EllipticFormulaResult out;
  Rational sum;
  Integer torsion = 1;
  for (const auto& f : e.fibers) {
    if (!labels.insert(f.label).second)
      throw DomainError("duplicate fiber label '" + f.label + "'");
    Rational dp = kodaira_dP(f.type);
    torsion = lcm(torsion, dp.denominator());
    sum += dp;
    out.d_div.emplace_back(f.label, std::move(dp));
  }
  out.deg_dmod = Rational(Integer(e.j_degree), Integer(12));
  out.deg_total = Rational(2 * e.base_genus - 2) + sum + out.deg_dmod;
  out.torsion_index = to_int64(torsion);
  return out;
}

}  // namespace complements
