#include "doctest.h"
#include "jsyz/parse.hpp"
#include "jsyz/tangent.hpp"

using namespace jsyz;
using Q = Rational;

namespace {

std::array<ModP, 3> cross(const std::array<ModP, 3>& a, const std::array<ModP, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// A point of the line other than the apex.
std::array<ModP, 3> second_point(const ProjLine<ModP>& L, const ProjPoint<ModP>& apex) {
  const PrimeField F = field_of(apex.coords[0]);
  for (int v = 0; v < 3; ++v) {
    std::array<ModP, 3> e{F.zero(), F.zero(), F.zero()};
    e[v] = F.one();
    const auto q = cross(L.cov, e);
    if (!(is_zero(q[0]) && is_zero(q[1]) && is_zero(q[2])) && !(make_point(q) == apex)) return q;
  }
  throw std::logic_error("no second point");
}

// Number of distinct roots of h restricted to L, counting a root at infinity.
int distinct_intersections(const PPoly& h, const ProjLine<ModP>& L, const ProjPoint<ModP>& apex) {
  const auto q = second_point(L, apex);
  // lambda -> h(lambda apex + q); the apex is off H so the point at infinity is not on H
  const UniPoly<ModP> g = restrict_to_line(h, apex.coords, q);
  const UniPoly<ModP> sq = g / uni_gcd(g, g.derivative());
  return sq.degree();
}

void check_instance(const TangentConeSpec<ModP>& spec) {
  const PPoly& h = spec.h;
  const int e = spec.e();
  for (const auto& L : spec.tangents) {
    CHECK(is_zero(L.evaluate(spec.apex.coords)));
    CHECK(distinct_intersections(h, L, spec.apex) == e - 1);
  }
  for (std::size_t i = 0; i < spec.node_secants.size(); ++i) {
    CHECK(is_zero(spec.node_secants[i].evaluate(spec.nodes[i].coords)));
    CHECK(is_zero(spec.node_secants[i].evaluate(spec.apex.coords)));
  }
  for (std::size_t i = 0; i < spec.cusp_secants.size(); ++i) {
    CHECK(is_zero(spec.cusp_secants[i].evaluate(spec.cusps[i].coords)));
    CHECK(is_zero(spec.cusp_secants[i].evaluate(spec.apex.coords)));
  }
  CHECK_FALSE(is_zero(h.evaluate(spec.apex.coords)));
}

long ledger_by_hand(int e, int delta, int kappa) {
  const long m0 = e * (e - 1) - 2 * delta - 3 * kappa;
  const long m = m0 + delta + kappa;
  return (m - 1) * (m - 1) + m0 * (e + 1) + delta * (e + 2) + kappa * (e + 3);
}

}  // namespace

TEST_SUITE("tangent") {
  TEST_CASE("restriction to a line") {
    const QPoly h = parse_q("x^2 + y^2 - z^2");
    const auto g = restrict_to_line(h, {Q(0), Q(0), Q(1)}, {Q(1), Q(0), Q(0)});
    // h(lambda (0,0,1) + (1,0,0)) = 1 - lambda^2
    CHECK(g == UniPoly<Q>(RationalField{}, {Q(1), Q(0), Q(-1)}));
  }

  TEST_CASE("nodal cubic") {
    const QPoly h = parse_q("z*y^2 - x^2*(x+z)");
    const auto spec = find_tangent_instance(h, {make_point<Q>({Q(0), Q(0), Q(1)})}, {}, Backend::modular());
    CHECK(spec.m0() == 4);
    CHECK(spec.tangents.size() == 4);
    check_instance(spec);
    const auto r = tangent_arrangement(spec);
    CHECK(r.report.cls == CurveClass::free);
    CHECK(r.report.exponents == std::optional<std::pair<int, int>>(r.expected_exponents));
    CHECK(r.expected_exponents == std::pair{3, 4});
    CHECK(r.ledger.total() == ledger_by_hand(3, 1, 0));
    CHECK(r.report.tau == 37);
    CHECK(global_tjurina(r.f).tau == r.ledger.total());
  }

  TEST_CASE("cuspidal cubic") {
    const QPoly h = parse_q("y^2*z - x^3");
    const auto spec = find_tangent_instance(h, {}, {make_point<Q>({Q(0), Q(0), Q(1)})}, Backend::modular());
    CHECK(spec.m0() == 3);
    check_instance(spec);
    const auto r = tangent_arrangement(spec);
    CHECK(r.report.cls == CurveClass::free);
    CHECK(r.expected_exponents == std::pair{3, 3});
    CHECK(r.report.tau == ledger_by_hand(3, 0, 1));
    CHECK(r.report.tau == 27);
  }

  TEST_CASE("hypotheses are enforced") {
    const auto spec = find_tangent_instance(parse_q("z*y^2 - x^2*(x+z)"), {make_point<Q>({Q(0), Q(0), Q(1)})}, {},
                                            Backend::modular());
    auto missing = spec;
    missing.tangents.pop_back();
    CHECK_THROWS_AS(validate_tangent_spec(missing), InputError);
    auto swapped = spec;
    swapped.node_secants.clear();
    CHECK_THROWS_AS(validate_tangent_spec(swapped), InputError);
    auto on_curve = spec;
    const PrimeField F = spec.h.field();
    on_curve.apex = make_point<ModP>({F.zero(), F.zero(), F.one()});
    CHECK_THROWS_AS(validate_tangent_spec(on_curve), InputError);
    // conics have degree below three
    CHECK_THROWS_AS(find_tangent_instance(parse_q("x^2 + y^2 - z^2"), {}, {}, Backend::modular()), InputError);
    // the node of the nodal cubic must be declared
    CHECK_THROWS_AS(find_tangent_instance(parse_q("z*y^2 - x^2*(x+z)"), {}, {}, Backend::modular()), InputError);
    // a cusp declared as a node
    CHECK_THROWS_AS(
        find_tangent_instance(parse_q("y^2*z - x^3"), {make_point<Q>({Q(0), Q(0), Q(1)})}, {}, Backend::modular()),
        InputError);
  }
}
