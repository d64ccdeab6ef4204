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

#include "complements/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "complements/adjunction.hpp"
#include "complements/approximation.hpp"
#include "complements/error.hpp"
#include "complements/hyperstandard.hpp"
#include "complements/json_io.hpp"
#include "complements/mult_set.hpp"
#include "complements/p1_complements.hpp"

namespace complements {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) out.push_back(parse_rational(item));
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(text)) {
    const Rational v = parse_rational(item);
    if (!v.is_integer()) throw ParseError("expected an integer, got '" + item + "'");
    out.push_back(to_int64(v.numerator()));
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string index_set(const std::vector<std::int64_t>& v) { return "{" + join(v) + "}"; }

std::string witness_text(const PhiWitness& w) {
  return "r=" + w.r.to_string() + " m=" + w.m.get_str();
}

std::string certificate_text(const ComplementCertificate& c) {
  return "n=" + std::to_string(c.n) + " numerators=[" + join(c.numerators) + "] extra=[" +
         join(c.extra_points) + "]";
}

// Options shared by all subcommands; unused ones stay empty.
struct Options {
  bool json = false;
  std::string set;
  std::string boundary;
  std::string value;
  std::string eps;
  std::string indices;
  std::string terms;
  std::string germ;
  std::string shift;
  std::string type;
  std::string fibers;
  std::string sections;
  std::string lambdas;
  std::string values;
  std::string variant = "definition";
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> m_max;
  std::optional<std::int64_t> m_min;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> index;
  std::optional<std::int64_t> scale;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> j_degree;
  std::optional<std::int64_t> e;
  std::optional<std::int64_t> q_max;
  std::optional<std::int64_t> q_min;
  std::optional<std::int64_t> floor_n;
  bool check_closed = false;
  bool derivations = false;
  bool epsilon = false;
  bool show_germ = false;
};

template <typename T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

const std::string& need(const std::string& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string("missing required option ") + flag);
  return v;
}

void cmd_phi(const Options& o, std::ostream& out) {
  const MultSet R = parse_mult_set(need(o.set, "--set"));
  if (!o.value.empty()) {
    const Rational a = parse_rational(o.value);
    if (!o.eps.empty()) {
      const bool in = phi_eps_contains(R, parse_rational(o.eps), a);
      if (o.json) out << Json(in).dump() << '\n';
      else out << (in ? "true" : "false") << '\n';
      return;
    }
    const auto w = phi_contains(R, a);
    if (o.json) out << (w ? to_json(*w) : Json(nullptr)).dump() << '\n';
    else out << (w ? witness_text(*w) : std::string("absent")) << '\n';
    return;
  }
  if (!o.m_max) throw UsageError("phi needs --value or --m-max");
  const MultSet s = phi_enumerate(R, *o.m_max);
  out << (o.json ? to_json(s).dump() : to_string(s)) << '\n';
}

void cmd_closure(const Options& o, std::ostream& out) {
  const MultSet R = parse_mult_set(need(o.set, "--set"));
  if (o.check_closed) {
    const bool closed = is_closed(R);
    out << (o.json ? Json(closed).dump() : std::string(closed ? "true" : "false")) << '\n';
    return;
  }
  if (o.derivations) {
    const auto elems = closure_elements(R);
    if (o.json) {
      Json arr = Json::array();
      for (const auto& e : elems) arr.push_back(to_json(e));
      out << arr.dump() << '\n';
    } else {
      for (const auto& e : elems) {
        out << e.value << " = " << e.r0 << " - " << e.m.get_str() << "*(";
        for (std::size_t i = 0; i < e.parts.size(); ++i)
          out << (i ? " + " : "") << "(1 - " << e.parts[i] << ")";
        out << ")\n";
      }
    }
    return;
  }
  const MultSet c = closure(R);
  out << (o.json ? to_json(c).dump() : to_string(c)) << '\n';
}

void cmd_rn(const Options& o, std::ostream& out) {
  const MultSet R = parse_mult_set(need(o.set, "--set"));
  MultSet result;
  if (!o.indices.empty()) {
    result = r_prime(R, parse_ints(o.indices));
  } else {
    result = r_n_set(R, need(o.n, "--n"));
  }
  out << (o.json ? to_json(result).dump() : to_string(result)) << '\n';
}

void cmd_pn(const Options& o, std::ostream& out) {
  const auto n = need(o.n, "--n");
  bool ok;
  if (!o.set.empty()) {
    const Rational eps = o.eps.empty() ? Rational(0) : parse_rational(o.eps);
    ok = pn_lemma_check(parse_mult_set(o.set), n, eps, need(o.m_max, "--m-max"));
  } else {
    ok = pn_contains(n, parse_rational(need(o.value, "--value")));
  }
  out << (o.json ? Json(ok).dump() : std::string(ok ? "true" : "false")) << '\n';
}

void cmd_complement(const Options& o, std::ostream& out) {
  const BoundaryP1 D = parse_boundary(need(o.boundary, "--boundary"));
  const auto v = parse_variant(o.variant);
  auto cert = complement_exists(D, need(o.n, "--n"), v);
  if (cert && o.scale) cert = scale_certificate(*cert, D, *o.scale);
  if (o.json) out << (cert ? to_json(*cert) : Json(nullptr)).dump() << '\n';
  else out << (cert ? certificate_text(*cert) : std::string("none")) << '\n';
}

void cmd_min_index(const Options& o, std::ostream& out) {
  const BoundaryP1 D = parse_boundary(need(o.boundary, "--boundary"));
  const auto n = min_complement_index(D, o.index.value_or(1), o.n_max.value_or(1000),
                                      parse_variant(o.variant));
  if (o.json) out << (n ? Json(*n) : Json(nullptr)).dump() << '\n';
  else out << (n ? std::to_string(*n) : std::string("none")) << '\n';
}

void cmd_n1(const Options& o, std::ostream& out) {
  const MultSet R = parse_mult_set(need(o.set, "--set"));
  const auto report = enumerate_N1(R, need(o.m_max, "--m-max"), need(o.n_max, "--n-max"));
  if (o.epsilon) {
    const Rational eps = epsilon_from_N(report.indices.back());
    out << (o.json ? to_json(eps).dump() : eps.to_string()) << '\n';
    return;
  }
  out << (o.json ? to_json(report).dump() : index_set(report.indices)) << '\n';
}

void cmd_n1_sweep(const Options& o, std::ostream& out) {
  const MultSet R = parse_mult_set(need(o.set, "--set"));
  const auto hi = need(o.m_max, "--m-max");
  const auto lo = o.m_min.value_or(1);
  if (lo < 1 || lo > hi) throw UsageError("--m-min must lie in [1, --m-max]");
  std::vector<std::int64_t> caps;
  for (auto m = lo; m <= hi; ++m) caps.push_back(m);
  // Reports are printed as they are produced.
  for (auto m : caps)
    out << to_json(enumerate_N1(R, m, need(o.n_max, "--n-max"))).dump() << '\n';
}

DiffInput parse_diff_input(const Options& o) {
  DiffInput in;
  in.n = need(o.n, "--n");
  for (const auto& item : split_list(o.terms)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("diff term '" + item + "' is not k:b");
    const Rational k = parse_rational(item.substr(0, colon));
    if (!k.is_integer()) throw ParseError("k must be an integer in '" + item + "'");
    in.terms.push_back({to_int64(k.numerator()), parse_rational(item.substr(colon + 1))});
  }
  return in;
}

void cmd_diff(const Options& o, std::ostream& out) {
  const DiffInput in = parse_diff_input(o);
  if (o.set.empty()) {
    const Rational d = diff_multiplicity(in);
    out << (o.json ? to_json(d).dump() : d.to_string()) << '\n';
    return;
  }
  const Rational eps = o.eps.empty() ? Rational(0) : parse_rational(o.eps);
  const auto cert = diff_in_hyperstandard(parse_mult_set(o.set), eps, in);
  if (o.json) {
    out << to_json(cert).dump() << '\n';
  } else if (cert.in_interval) {
    out << cert.value << " interval\n";
  } else {
    out << cert.value << " " << witness_text(*cert.witness) << '\n';
  }
}

void print_lct(const LctResult& r, bool json, std::ostream& out) {
  if (json) out << Json{{"c_W", to_json(r.c_W)}, {"d_W", to_json(r.d_W)}}.dump() << '\n';
  else out << "c_W=" << r.c_W << " d_W=" << r.d_W << '\n';
}

void cmd_lct(const Options& o, std::ostream& out) {
  FiberGerm g = parse_fiber_germ(need(o.germ, "--germ"));
  if (!o.shift.empty()) g = divisorial_shift(g, parse_rational(o.shift));
  print_lct(lct_over_divisor(g), o.json, out);
}

void cmd_kodaira(const Options& o, std::ostream& out) {
  const KodairaType t = parse_kodaira(need(o.type, "--type"));
  if (o.show_germ) {
    const FiberGerm g = kodaira_resolution_germ(t);
    if (o.json) {
      const auto r = lct_over_divisor(g);
      out << Json{{"type", to_json(t)}, {"germ", to_json(g)}, {"c_W", to_json(r.c_W)},
                  {"d_W", to_json(r.d_W)}}.dump()
          << '\n';
    } else {
      for (const auto& c : g.components()) out << c.mu << ":" << c.d << ' ';
      out << '\n';
      print_lct(lct_over_divisor(g), false, out);
    }
    return;
  }
  const Rational d = kodaira_dP(t);
  out << (o.json ? to_json(d).dump() : d.to_string()) << '\n';
}

void cmd_elliptic(const Options& o, std::ostream& out) {
  EllipticFibration e;
  e.base_genus = need(o.genus, "--genus");
  e.j_degree = o.j_degree.value_or(0);
  std::size_t auto_index = 0;
  for (const auto& item : split_list(o.fibers)) {
    ++auto_index;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      e.fibers.push_back({"P" + std::to_string(auto_index), parse_kodaira(item)});
    else
      e.fibers.push_back({item.substr(0, eq), parse_kodaira(item.substr(eq + 1))});
  }
  const auto r = elliptic_formula(e);
  if (o.json) {
    out << to_json(r).dump() << '\n';
    return;
  }
  out << "D_div =";
  if (r.d_div.empty()) out << " 0";
  for (std::size_t i = 0; i < r.d_div.size(); ++i)
    out << (i ? " + " : " ") << r.d_div[i].second << "*" << r.d_div[i].first;
  out << "\ndeg_Dmod = " << r.deg_dmod << "\ndeg_total = " << r.deg_total
      << "\ntorsion_index = " << r.torsion_index << '\n';
}

void cmd_ruled_moduli(const Options& o, std::ostream& out) {
  std::vector<RuledSection> sections;
  for (const auto& item : split_list(need(o.sections, "--sections"))) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("section '" + item + "' is not d:a");
    sections.push_back({parse_rational(item.substr(0, colon)),
                        parse_rational(item.substr(colon + 1))});
  }
  const Rational deg = moduli_degree_ruled(need(o.e, "--e"), sections);
  out << (o.json ? to_json(deg).dump() : deg.to_string()) << '\n';
}

void cmd_pair_discr(const Options& o, std::ostream& out) {
  const auto lambdas = parse_rationals(need(o.lambdas, "--lambdas"));
  const Rational eps = o.eps.empty() ? Rational(0) : parse_rational(o.eps);
  const auto r = pair_discr_bound(lambdas, eps);
  if (o.json) {
    out << Json{{"sum", to_json(r.sum)},
                {"bound_ok", r.bound_ok},
                {"blowup_discrepancy", to_json(r.blowup_discrepancy)}}
               .dump()
        << '\n';
  } else {
    out << "sum=" << r.sum << " bound_ok=" << (r.bound_ok ? "true" : "false")
        << " discrepancy=" << r.blowup_discrepancy << '\n';
  }
}

void cmd_approx(const Options& o, std::ostream& out) {
  const auto b = parse_rationals(need(o.values, "--values"));
  const auto a = simultaneous_approx(b, o.q_max.value_or(10000), o.q_min.value_or(1));
  std::optional<bool> claim;
  if (o.floor_n) claim = verify_floor_claim(b, a, *o.floor_n);
  if (o.json) {
    Json j = to_json(a);
    if (claim) j["floor_claim"] = *claim;
    out << j.dump() << '\n';
    return;
  }
  out << "q=" << a.q << " numerators=[";
  for (std::size_t i = 0; i < a.numerators.size(); ++i)
    out << (i ? "," : "") << a.numerators[i].get_str();
  out << "] error=" << a.error << " cassels_ok=" << (a.cassels_ok ? "true" : "false");
  if (claim) out << " floor_claim=" << (*claim ? "true" : "false");
  out << '\n';
}

void cmd_radius(const Options& o, std::ostream& out) {
  const BoundaryP1 B = parse_boundary(need(o.boundary, "--boundary"));
  const Rational r = equiv_radius(B, need(o.n, "--n"));
  out << (o.json ? to_json(r).dump() : r.to_string()) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for n-complements and hyperstandard multiplicities"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };
  auto add_set = [&](CLI::App* c) {
    c->add_option("--set", o.set, "Multiplicity set, comma separated p/q");
  };

  auto* phi = app.add_subcommand("phi", "Hyperstandard membership or enumeration");
  add_set(phi);
  phi->add_option("--value", o.value, "Value to test");
  phi->add_option("--eps", o.eps, "Interval width eps");
  phi->add_option("--m-max", o.m_max, "Enumerate with m <= m-max");

  auto* clo = app.add_subcommand("closure", "Closed multiplicity set");
  add_set(clo);
  clo->add_flag("--check-closed", o.check_closed, "Test closure(R) == R");
  clo->add_flag("--derivations", o.derivations, "Print one derivation per element");

  auto* rn = app.add_subcommand("rn", "Shifted sets R(n) and their unions");
  add_set(rn);
  rn->add_option("--n", o.n, "Shift denominator");
  rn->add_option("--indices", o.indices, "Comma separated indices for the union");

  auto* pn = app.add_subcommand("pn", "P_n membership, or containment of Phi(R,eps) in P_n");
  pn->add_option("--n", o.n, "Index n");
  pn->add_option("--value", o.value, "Value to test");
  add_set(pn);
  pn->add_option("--eps", o.eps, "Interval width eps");
  pn->add_option("--m-max", o.m_max, "Truncation for the containment check");

  auto* comp = app.add_subcommand("complement", "Decide and construct an n-complement");
  comp->add_option("--boundary", o.boundary, "Boundary, comma separated [label=]p/q");
  comp->add_option("--n", o.n, "Complement index");
  comp->add_option("--variant", o.variant, "definition or geq");
  comp->add_option("--scale", o.scale, "Scale the certificate by this factor");

  auto* mi = app.add_subcommand("min-index", "Minimal complement index");
  mi->add_option("--boundary", o.boundary, "Boundary, comma separated [label=]p/q");
  mi->add_option("--index,-I", o.index, "Required divisor I of the index");
  mi->add_option("--n-max", o.n_max, "Search cap (default 1000)");
  mi->add_option("--variant", o.variant, "definition or geq");

  auto* n1 = app.add_subcommand("n1", "Minimal indices of pairs on the projective line");
  add_set(n1);
  n1->add_option("--m-max", o.m_max, "Truncation of the hyperstandard set");
  n1->add_option("--n-max", o.n_max, "Index search cap");
  n1->add_flag("--epsilon", o.epsilon, "Print 1/(N+2) for N the largest index");

  auto* sweep = app.add_subcommand("n1-sweep", "n1 for every cap in [m-min, m-max]");
  add_set(sweep);
  sweep->add_option("--m-min", o.m_min, "First cap (default 1)");
  sweep->add_option("--m-max", o.m_max, "Last cap");
  sweep->add_option("--n-max", o.n_max, "Index search cap");

  auto* diff = app.add_subcommand("diff", "Multiplicity of the different");
  diff->add_option("--n", o.n, "Index of the germ");
  diff->add_option("--terms", o.terms, "Comma separated k:b");
  add_set(diff);
  diff->add_option("--eps", o.eps, "Interval width eps");

  auto* lct = app.add_subcommand("lct", "Threshold c_W and d_W of a fiber germ");
  lct->add_option("--germ", o.germ, "Comma separated mu:d");
  lct->add_option("--shift", o.shift, "Add c * fiber before computing");

  auto* kod = app.add_subcommand("kodaira", "d_P of a Kodaira fiber");
  kod->add_option("--type", o.type, "mI_n:<m>[:<n>], II, III, IV, Istar, IIstar, IIIstar, IVstar");
  kod->add_flag("--germ", o.show_germ, "Show the stored resolution germ");

  auto* ell = app.add_subcommand("elliptic", "Canonical bundle formula of an elliptic fibration");
  ell->add_option("--genus", o.genus, "Genus of the base curve");
  ell->add_option("--fibers", o.fibers, "Comma separated [label=]type");
  ell->add_option("--j-degree", o.j_degree, "Degree of the j-map (default 0)");

  auto* rm = app.add_subcommand("ruled-moduli", "Moduli degree on F_e");
  rm->add_option("--e", o.e, "Invariant e of F_e");
  rm->add_option("--sections", o.sections, "Four d:a pairs");

  auto* pd = app.add_subcommand("pair-discr", "Multiplicity sum bound at a surface point");
  pd->add_option("--lambdas", o.lambdas, "Comma separated multiplicities");
  pd->add_option("--eps", o.eps, "eps (default 0)");

  auto* ap = app.add_subcommand("approx", "Simultaneous Diophantine approximation");
  ap->add_option("--values", o.values, "Comma separated entries in [0,1]");
  ap->add_option("--q-max", o.q_max, "Largest denominator (default 10000)");
  ap->add_option("--q-min", o.q_min, "Smallest denominator (default 1)");
  ap->add_option("--floor-n", o.floor_n, "Also check the floor claim with this N");

  auto* rad = app.add_subcommand("radius", "Openness radius of n-complements");
  rad->add_option("--boundary", o.boundary, "Boundary, comma separated [label=]p/q");
  rad->add_option("--n", o.n, "Complement index");

  for (auto* c : {phi, clo, rn, pn, comp, mi, n1, sweep, diff, lct, kod, ell, rm, pd, ap, rad})
    add_json(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "phi") cmd_phi(o, out);
    else if (name == "closure") cmd_closure(o, out);
    else if (name == "rn") cmd_rn(o, out);
    else if (name == "pn") cmd_pn(o, out);
    else if (name == "complement") cmd_complement(o, out);
    else if (name == "min-index") cmd_min_index(o, out);
    else if (name == "n1") cmd_n1(o, out);
    else if (name == "n1-sweep") cmd_n1_sweep(o, out);
    else if (name == "diff") cmd_diff(o, out);
    else if (name == "lct") cmd_lct(o, out);
    else if (name == "kodaira") cmd_kodaira(o, out);
    else if (name == "elliptic") cmd_elliptic(o, out);
    else if (name == "ruled-moduli") cmd_ruled_moduli(o, out);
    else if (name == "pair-discr") cmd_pair_discr(o, out);
    else if (name == "approx") cmd_approx(o, out);
    else if (name == "radius") cmd_radius(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace complements
