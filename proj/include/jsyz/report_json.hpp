#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "jsyz/arrangement.hpp"
#include "jsyz/pencil.hpp"
#include "jsyz/tangent.hpp"

namespace jsyz {

using json = nlohmann::ordered_json;

/// {degree, a, b, c}; the components use the polynomial text grammar.
template <class S>
json to_json(const SyzygyTriple<S>& t);
/// Inverse of to_json for certificates; the caller re-verifies against f.
template <class S>
SyzygyTriple<S> certificate_from_json(const json& j, const field_t<S>& field, int f_degree);

/// {d, mdr, tau, class, exponents, certificate, bounds: {phi1, phi2}, backend, primes, field}
template <class S>
json to_json(const FreenessReport<S>& r);

/// {degree, factors: [{poly, multiplicity}], sum_mu, distinct_roots, binary}
template <class S>
json to_json(const DiscriminantForm<S>& D);

/// {lines, points: [{point, lines, multiplicity}], max_multiplicity, profile, tau_combinatorial}
template <class S>
json to_json(const IntersectionLattice<S>& L, int lines);

json to_json(const TrichotomyResult& t);
json to_json(const BoundCheck& b);
json to_json(const PencilCase& c);
json to_json(const TotalMuReport& t);
json to_json(const GenericityReport& g);
json to_json(const TangentLedger& l);

template <class S>
json to_json(const ThmPenVerdict<S>& v);

/// {q1, q2, t: [...], h, field}; an entry of t is a rational, "inf", or {"roots_of": [c0, c1, ...]}.
template <class S>
json to_json(const PencilProductSpec<S>& spec);

using AnyProductSpec = std::variant<PencilProductSpec<Rational>, PencilProductSpec<ModP>>;

/// Reads a pencil product file. "field" defaults to "Q". Throws InputError on
/// malformed content.
AnyProductSpec parse_pencil_spec(const std::string& text);
AnyProductSpec parse_pencil_spec(const json& j);

}  // namespace jsyz
