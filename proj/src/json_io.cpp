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

#include "complements/json_io.hpp"

#include <string>

#include "complements/error.hpp"

namespace complements {

namespace {

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON schema violation: ") + e.what());
  }
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (r.is_integer()) return r.numerator();
  }
  throw ParseError("expected an integer, got " + j.dump());
}

std::int64_t int64_from_json(const Json& j) { return to_int64(integer_from_json(j)); }

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json to_json(const MultSet& s) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(to_json(x));
  return out;
}

Json to_json(const BoundaryP1& b) {
  Json out = Json::array();
  for (const auto& p : b.points()) out.push_back(Json::array({p.label, to_json(p.mult)}));
  return out;
}

Json to_json(const PhiWitness& w) {
  return Json{{"value", to_json(w.value)}, {"r", to_json(w.r)}, {"m", to_json(w.m)}};
}

Json to_json(const ClosureElement& e) {
  Json parts = Json::array();
  for (const auto& p : e.parts) parts.push_back(to_json(p));
  return Json{{"value", to_json(e.value)},
              {"r0", to_json(e.r0)},
              {"m", to_json(e.m)},
              {"parts", parts}};
}

Json to_json(const ComplementCertificate& c) {
  return Json{{"n", c.n}, {"numerators", c.numerators}, {"extra_points", c.extra_points}};
}

Json to_json(const N1Report& r) {
  Json witnesses = Json::object();
  for (const auto& [n, b] : r.witnesses) witnesses[std::to_string(n)] = to_json(b);
  return Json{{"indices", r.indices},
              {"witnesses", witnesses},
              {"cap", Json{{"m_max", r.m_max}, {"n_max", r.n_max}}}};
}

Json to_json(const FiberGerm& g) {
  Json out = Json::array();
  for (const auto& c : g.components())
    out.push_back(Json::array({std::to_string(c.mu), to_json(c.d)}));
  return out;
}

Json to_json(const KodairaType& t) { return to_string(t); }

Json to_json(const EllipticFibration& e) {
  Json fibers = Json::array();
  for (const auto& f : e.fibers) fibers.push_back(Json::array({f.label, to_string(f.type)}));
  return Json{{"genus", e.base_genus}, {"fibers", fibers}, {"j_degree", e.j_degree}};
}

Json to_json(const EllipticFormulaResult& r) {
  Json d_div = Json::array();
  for (const auto& [label, d] : r.d_div) d_div.push_back(Json::array({label, to_json(d)}));
  return Json{{"d_div", d_div},
              {"deg_dmod", to_json(r.deg_dmod)},
              {"deg_total", to_json(r.deg_total)},
              {"torsion_index", r.torsion_index}};
}

Json to_json(const DiffCertificate& c) {
  Json out{{"value", to_json(c.value)}, {"in_interval", c.in_interval}};
  if (c.witness) out["witness"] = to_json(*c.witness);
  if (c.derivation) {
    out["derivation"] = to_json(*c.derivation);
    out["scale"] = to_json(c.scale);
  }
  return out;
}

Json to_json(const ApproxResult& a) {
  Json nums = Json::array();
  for (const auto& m : a.numerators) nums.push_back(to_json(m));
  return Json{{"q", a.q},
              {"numerators", nums},
              {"error", to_json(a.error)},
              {"cassels_ok", a.cassels_ok}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a \"p/q\" string, got " + j.dump());
}

MultSet mult_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> values;
  for (const auto& x : j) values.push_back(rational_from_json(x));
  return MultSet(std::move(values));
}

BoundaryP1 boundary_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("expected an array of [label, p/q]");
    std::vector<BoundaryPoint> points;
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2) throw ParseError("bad boundary point " + p.dump());
      points.push_back({p.at(0).get<std::string>(), rational_from_json(p.at(1))});
    }
    return BoundaryP1(std::move(points));
  });
}

PhiWitness phi_witness_from_json(const Json& j) {
  return guarded([&] {
    return PhiWitness{rational_from_json(j.at("value")), rational_from_json(j.at("r")),
                      integer_from_json(j.at("m"))};
  });
}

ComplementCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    ComplementCertificate c;
    c.n = j.at("n").get<std::int64_t>();
    c.numerators = j.at("numerators").get<std::vector<std::int64_t>>();
    c.extra_points = j.at("extra_points").get<std::vector<std::int64_t>>();
    return c;
  });
}

N1Report n1_report_from_json(const Json& j) {
  return guarded([&] {
    N1Report r;
    r.indices = j.at("indices").get<std::vector<std::int64_t>>();
    for (const auto& [key, b] : j.at("witnesses").items())
      r.witnesses.emplace(to_int64(parse_rational(key).numerator()), boundary_from_json(b));
    r.m_max = j.at("cap").at("m_max").get<std::int64_t>();
    r.n_max = j.at("cap").at("n_max").get<std::int64_t>();
    return r;
  });
}

FiberGerm fiber_germ_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("expected an array of [mu, d]");
    std::vector<FiberComponent> comps;
    for (const auto& c : j) {
      if (!c.is_array() || c.size() != 2) throw ParseError("bad fiber component " + c.dump());
      comps.push_back({int64_from_json(c.at(0)), rational_from_json(c.at(1))});
    }
    return FiberGerm(std::move(comps));
  });
}

KodairaType kodaira_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a Kodaira type string");
  return parse_kodaira(j.get<std::string>());
}

EllipticFibration fibration_from_json(const Json& j) {
  return guarded([&] {
    EllipticFibration e;
    e.base_genus = j.at("genus").get<std::int64_t>();
    e.j_degree = j.at("j_degree").get<std::int64_t>();
    for (const auto& f : j.at("fibers")) {
      if (!f.is_array() || f.size() != 2) throw ParseError("bad fiber entry " + f.dump());
      e.fibers.push_back({f.at(0).get<std::string>(), kodaira_from_json(f.at(1))});
    }
    return e;
  });
}

ApproxResult approx_from_json(const Json& j) {
  return guarded([&] {
    ApproxResult a;
    a.q = j.at("q").get<std::int64_t>();
    for (const auto& m : j.at("numerators")) a.numerators.push_back(integer_from_json(m));
    a.error = rational_from_json(j.at("error"));
    a.cassels_ok = j.at("cassels_ok").get<bool>();
    return a;
  });
}

}  // namespace complements
