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

#ifndef COMPLEMENTS_JSON_IO_HPP_
#define COMPLEMENTS_JSON_IO_HPP_

// JSON encodings of the library types. Rationals are "p/q" strings
// throughout; see README for the schemas.

#include <json.hpp>

#include "complements/adjunction.hpp"
#include "complements/approximation.hpp"
#include "complements/hyperstandard.hpp"
#include "complements/mult_set.hpp"
#include "complements/p1_complements.hpp"
#include "complements/rational.hpp"

namespace complements {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Integer& v);
Json to_json(const MultSet& s);
Json to_json(const BoundaryP1& b);
Json to_json(const PhiWitness& w);
Json to_json(const ClosureElement& e);
Json to_json(const ComplementCertificate& c);
Json to_json(const N1Report& r);
Json to_json(const FiberGerm& g);
Json to_json(const KodairaType& t);
Json to_json(const EllipticFibration& e);
Json to_json(const EllipticFormulaResult& r);
Json to_json(const DiffCertificate& c);
Json to_json(const ApproxResult& a);

// Decoders throw ParseError on schema violations (and the usual domain
// errors from the constructors).
Rational rational_from_json(const Json& j);
MultSet mult_set_from_json(const Json& j);
BoundaryP1 boundary_from_json(const Json& j);
PhiWitness phi_witness_from_json(const Json& j);
ComplementCertificate certificate_from_json(const Json& j);
N1Report n1_report_from_json(const Json& j);
FiberGerm fiber_germ_from_json(const Json& j);
KodairaType kodaira_from_json(const Json& j);
EllipticFibration fibration_from_json(const Json& j);
ApproxResult approx_from_json(const Json& j);

}  // namespace complements

#endif  // COMPLEMENTS_JSON_IO_HPP_
