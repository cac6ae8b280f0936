#include "jsyz/report_json.hpp"

#include "jsyz/parse.hpp"

namespace jsyz {

namespace {

template <class S>
json exponents_json(const std::optional<std::pair<int, int>>& e) {
  if (!e) return nullptr;
  return json::array({e->first, e->second});
}

json pair_json(const std::optional<std::pair<int, int>>& e) { return exponents_json<Rational>(e); }

std::string scalar_text(const Rational& q) { return q.get_str(); }
std::string scalar_text(const ModP& a) { return std::to_string(a.v); }

template <class S>
std::string field_text(const field_t<S>& F) {
  return F.tag();
}

Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational number (integer or string), got " + j.dump());
}

template <class S>
S json_scalar(const json& j, const field_t<S>& F) {
  return F.from_rational(json_rational(j));
}

template <class S>
HomogPoly<S> json_poly(const json& j, const char* key, const field_t<S>& F) {
  if (!j.contains(key) || !j.at(key).is_string()) throw InputError(std::string("missing polynomial field '") + key + "'");
  return parse_poly<S>(j.at(key).get<std::string>(), F);
}

template <class S>
PencilProductSpec<S> product_from_json(const json& j, const field_t<S>& F) {
  PencilProductSpec<S> spec;
  spec.pencil = PencilSpec<S>{json_poly<S>(j, "q1", F), json_poly<S>(j, "q2", F)};
  if (spec.pencil.q1.degree() != spec.pencil.q2.degree())
    throw InputError("q1 and q2 have degrees " + std::to_string(spec.pencil.q1.degree()) + " and " +
                     std::to_string(spec.pencil.q2.degree()));
  if (j.contains("t")) {
    if (!j.at("t").is_array()) throw InputError("'t' must be an array");
    for (const auto& e : j.at("t")) {
      if (e.is_string() && e.get<std::string>() == "inf") {
        spec.params.push_back(MemberParam<S>::infinity());
      } else if (e.is_object()) {
        if (!e.contains("roots_of") || !e.at("roots_of").is_array())
          throw InputError("parameter object needs a 'roots_of' coefficient array");
        std::vector<S> c;
        for (const auto& x : e.at("roots_of")) c.push_back(json_scalar<S>(x, F));
        spec.params.push_back(MemberParam<S>::roots(UniPoly<S>(F, c)));
      } else {
        spec.params.push_back(MemberParam<S>::value(json_scalar<S>(e, F)));
      }
    }
  }
  if (j.contains("h") && !j.at("h").is_null()) spec.h = json_poly<S>(j, "h", F);
  return spec;
}

}  // namespace

template <class S>
json to_json(const SyzygyTriple<S>& t) {
  return json{{"degree", t.degree}, {"a", t.a.to_string()}, {"b", t.b.to_string()}, {"c", t.c.to_string()}};
}

template <class S>
SyzygyTriple<S> certificate_from_json(const json& j, const field_t<S>& field, int f_degree) {
  if (!j.is_object() || !j.contains("degree")) throw InputError("certificate must be an object with a degree");
  SyzygyTriple<S> t;
  t.degree = j.at("degree").get<int>();
  t.f_degree = f_degree;
  auto component = [&](const char* key) {
    HomogPoly<S> p = json_poly<S>(j, key, field);
    return p.is_zero() ? HomogPoly<S>(field, t.degree) : p;
  };
  t.a = component("a");
  t.b = component("b");
  t.c = component("c");
  return t;
}

template <class S>
json to_json(const FreenessReport<S>& r) {
  json primes = json::array();
  if constexpr (std::is_same_v<S, Rational>) {
    if (!r.backend.exact)
      for (auto p : r.backend.voting_primes()) primes.push_back(p);
  }
  return json{{"d", r.d},
              {"mdr", r.mdr},
              {"tau", r.tau},
              {"class", to_string(r.cls)},
              {"exponents", pair_json(r.exponents)},
              {"certificate", to_json(r.certificate)},
              {"bounds", {{"phi1", r.phi1}, {"phi2", r.phi2}, {"dpw", r.bound.value}, {"branch", r.bound.branch}}},
              {"hilbert", [&] {
                 json h = json::object();
                 for (const auto& [k, v] : r.profile.values) h[std::to_string(k)] = v;
                 return h;
               }()},
              {"backend", r.backend.name()},
              {"primes", primes},
              {"field", r.field}};
}

template <class S>
json to_json(const DiscriminantForm<S>& D) {
  json factors = json::array();
  for (const auto& root : D.roots) {
    factors.push_back({{"poly", root.at_infinity ? std::string("u") : root.factor.to_string("t")},
                       {"at_infinity", root.at_infinity},
                       {"multiplicity", root.multiplicity}});
  }
  return json{{"degree", D.degree},
              {"factors", factors},
              {"sum_mu", D.sum_mu},
              {"distinct_roots", D.distinct_roots},
              {"binary", D.binary_text()}};
}

template <class S>
json to_json(const IntersectionLattice<S>& L, int lines) {
  json points = json::array();
  for (const auto& pt : L.points) {
    json coords = json::array();
    for (const auto& c : pt.point.coords) coords.push_back(scalar_text(c));
    points.push_back({{"point", coords}, {"lines", pt.lines}, {"multiplicity", pt.multiplicity()}});
  }
  return json{{"lines", lines},
              {"points", points},
              {"max_multiplicity", L.max_multiplicity},
              {"profile", L.multiplicity_profile()},
              {"tau_combinatorial", tau_combinatorial(L)}};
}

json to_json(const TrichotomyResult& t) {
  return json{{"d", t.d},
              {"m", t.m},
              {"r", t.r},
              {"tau", t.tau},
              {"case", t.case_id},
              {"exponents", pair_json(t.exponents)},
              {"equality_edge", t.equality_edge},
              {"description", t.description}};
}

json to_json(const BoundCheck& b) {
  return json{{"lhs", b.lhs.get_str()}, {"rhs", b.rhs.get_str()}, {"ok", b.ok}, {"equality", b.equality}};
}

json to_json(const PencilCase& c) {
  return json{{"d", c.d},
              {"k", c.k},
              {"m", c.m},
              {"deg_h", c.deg_h},
              {"r", c.r},
              {"tau", c.tau},
              {"case", c.case_id},
              {"exponents", pair_json(c.exponents)},
              {"description", c.description}};
}

json to_json(const TotalMuReport& t) {
  json j{{"sum_mu", t.sum_mu},
         {"expected", t.expected},
         {"ok", t.ok},
         {"distinct_roots", t.distinct_roots},
         {"distinct_ok", t.distinct_ok},
         {"equality_case", t.equality_case}};
  j["concurrent_lines"] = t.concurrent_lines ? json(*t.concurrent_lines) : json(nullptr);
  return j;
}

json to_json(const GenericityReport& g) {
  return json{{"zero_dimensional", g.zero_dimensional},
              {"transverse", g.transverse},
              {"base_points", g.base_points},
              {"generic", g.generic()}};
}

json to_json(const TangentLedger& l) {
  return json{{"apex", l.apex},
              {"tangents", l.tangents},
              {"node_secants", l.node_secants},
              {"cusp_secants", l.cusp_secants},
              {"total", l.total()}};
}

template <class S>
json to_json(const ThmPenVerdict<S>& v) {
  json members = json::array();
  for (const auto& s : v.singular_members) {
    members.push_back({{"parameter", s.root.at_infinity ? std::string("inf") : s.root.factor.to_string("t")},
                       {"mu", s.root.multiplicity},
                       {"chosen", s.chosen},
                       {"tau", s.tau ? json(*s.tau) : json(nullptr)}});
  }
  return json{{"k", v.k},
              {"m", v.m},
              {"condition_a", v.condition_a},
              {"member_tau_sum", v.member_tau_sum},
              {"condition_b", v.condition_b},
              {"condition1", v.condition1},
              {"singular_members", members},
              {"expected_exponents", json::array({v.expected_exponents.first, v.expected_exponents.second})},
              {"expected_tau", v.expected_tau},
              {"free_with_expected", v.free_with_expected},
              {"report", to_json(v.report)}};
}

template <class S>
json to_json(const PencilProductSpec<S>& spec) {
  json t = json::array();
  for (const auto& p : spec.params) {
    switch (p.kind) {
      case MemberParam<S>::Kind::value:
        t.push_back(scalar_text(p.t));
        break;
      case MemberParam<S>::Kind::infinity:
        t.push_back("inf");
        break;
      case MemberParam<S>::Kind::roots_of: {
        json c = json::array();
        for (const auto& x : p.phi.coeffs()) c.push_back(scalar_text(x));
        t.push_back({{"roots_of", c}});
        break;
      }
    }
  }
  json j{{"q1", spec.pencil.q1.to_string()}, {"q2", spec.pencil.q2.to_string()}, {"t", t}};
  j["h"] = spec.h ? json(spec.h->to_string()) : json(nullptr);
  j["field"] = field_text<S>(spec.pencil.field());
  return j;
}

AnyProductSpec parse_pencil_spec(const json& j) {
  if (!j.is_object()) throw InputError("pencil spec must be a JSON object");
  const FieldTag tag = parse_field_tag(j.value("field", std::string("Q")));
  try {
    if (tag.is_rational()) return product_from_json<Rational>(j, RationalField{});
    return product_from_json<ModP>(j, PrimeField(tag.prime));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed pencil spec: ") + e.what());
  } catch (const std::domain_error& e) {
    throw InputError(std::string("pencil spec coefficient not defined in the field: ") + e.what());
  }
}

AnyProductSpec parse_pencil_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("pencil spec is not valid JSON: ") + e.what());
  }
  return parse_pencil_spec(j);
}

#define JSYZ_INSTANTIATE(S)                                                                   \
  template json to_json(const SyzygyTriple<S>&);                                              \
  template SyzygyTriple<S> certificate_from_json(const json&, const field_t<S>&, int);        \
  template json to_json(const FreenessReport<S>&);                                            \
  template json to_json(const DiscriminantForm<S>&);                                          \
  template json to_json(const IntersectionLattice<S>&, int);                                  \
  template json to_json(const ThmPenVerdict<S>&);                                             \
  template json to_json(const PencilProductSpec<S>&);
JSYZ_INSTANTIATE(Rational)
JSYZ_INSTANTIATE(ModP)
#undef JSYZ_INSTANTIATE

}  // namespace jsyz
