#include <random>

#include "doctest.h"
#include "jsyz/fixtures.hpp"
#include "jsyz/parse.hpp"
#include "jsyz/pencil.hpp"
#include "jsyz/resultant.hpp"

using namespace jsyz;
using Q = Rational;

namespace {

template <class S>
S det3(const LinearMap<S>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Symmetric matrix of a ternary quadratic form.
LinearMap<Q> quadric_matrix(const QPoly& q) {
  LinearMap<Q> m{};
  for (const auto& [e, c] : q.terms()) {
    std::array<int, 2> vars{};
    int n = 0;
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < e[v]; ++i) vars[n++] = v;
    if (vars[0] == vars[1]) {
      m[vars[0]][vars[0]] += c;
    } else {
      m[vars[0]][vars[1]] += c / 2;
      m[vars[1]][vars[0]] += c / 2;
    }
  }
  return m;
}

PPoly random_form(const PrimeField& F, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> c(0, F.prime() - 1);
  PPoly p(F, degree);
  for (const auto& e : monomial_basis(degree)) p.add_term(e, ModP(c(rng), F.prime()));
  return p;
}

bool common_zero_in_plane(const PPoly& a, const PPoly& b, const PPoly& c) {
  const std::uint64_t p = a.field().prime();
  auto test = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    const std::array<ModP, 3> pt{ModP(x, p), ModP(y, p), ModP(z, p)};
    return is_zero(a.evaluate(pt)) && is_zero(b.evaluate(pt)) && is_zero(c.evaluate(pt));
  };
  for (std::uint64_t y = 0; y < p; ++y)
    for (std::uint64_t z = 0; z < p; ++z)
      if (test(1, y, z)) return true;
  for (std::uint64_t z = 0; z < p; ++z)
    if (test(0, 1, z)) return true;
  return test(0, 0, 1);
}

}  // namespace

TEST_SUITE("resultant") {
  TEST_CASE("normalization and homogeneity") {
    CHECK(macaulay_resultant(parse_q("x"), parse_q("y"), parse_q("z")) == 1);
    CHECK(macaulay_resultant(parse_q("x^2"), parse_q("y^3"), parse_q("z^2")) == 1);
    // degree d2 d3 in the coefficients of p1, and so on
    CHECK(macaulay_resultant(parse_q("2*x"), parse_q("3*y"), parse_q("5*z^2")) == Q(4 * 9 * 5));
  }

  TEST_CASE("linear forms give the determinant") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
      LinearMap<Q> m;
      for (auto& row : m)
        for (auto& v : row) v = c(rng);
      const auto L = [&](int i) { return QPoly::linear(RationalField{}, m[i]); };
      CHECK(macaulay_resultant(L(0), L(1), L(2), 1 + trial) == det3(m));
    }
  }

  TEST_CASE("transformation law under a change of coordinates") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> c(-2, 2);
    const QPoly p1 = parse_q("x + 2*y - z"), p2 = parse_q("x^2 + y*z - 3*z^2"), p3 = parse_q("y^2 - x*z + x*y");
    const Q base = macaulay_resultant(p1, p2, p3);
    CHECK(base != 0);
    for (int trial = 0; trial < 4; ++trial) {
      LinearMap<Q> M;
      for (auto& row : M)
        for (auto& v : row) v = c(rng);
      const Q det = det3(M);
      const Q moved = macaulay_resultant(substitute_linear(p1, M), substitute_linear(p2, M), substitute_linear(p3, M));
      Q expected = base;
      for (int i = 0; i < 1 * 2 * 2; ++i) expected *= det;
      CHECK(moved == expected);
    }
  }

  TEST_CASE("a planted common zero forces a zero resultant") {
    const std::array<Q, 3> pt{Q(1), Q(2), Q(3)};
    auto through = [&](const QPoly& p) {
      const QPoly z = QPoly::variable(RationalField{}, 2).pow(p.degree());
      return p - z * (p.evaluate(pt) / z.evaluate(pt));
    };
    const QPoly a = through(parse_q("x^2 + y^2 - 5*x*z")), b = through(parse_q("x*y - z^2 + 7*y*z")),
                c = through(parse_q("x^3 + y^2*z"));
    CHECK(macaulay_resultant(a, b, c) == 0);
  }

  TEST_CASE("nonzero resultant modulo p excludes rational common zeros") {
    const PrimeField F(101);
    std::mt19937_64 rng(47);
    int nonzero = 0, zero_with_point = 0;
    for (int trial = 0; trial < 12; ++trial) {
      PPoly a = random_form(F, 1, rng), b = random_form(F, 2, rng), c = random_form(F, 2, rng);
      if (trial % 3 == 0) {
        // force (1 : 0 : 0) to be a common zero
        for (PPoly* p : {&a, &b, &c}) p->add_term({p->degree(), 0, 0}, -p->coefficient({p->degree(), 0, 0}));
      }
      const ModP r = macaulay_resultant(a, b, c, 1 + trial);
      const bool point = common_zero_in_plane(a, b, c);
      if (!is_zero(r)) {
        ++nonzero;
        CHECK_FALSE(point);
      }
      if (point) {
        ++zero_with_point;
        CHECK(is_zero(r));
      }
    }
    CHECK(nonzero > 0);
    CHECK(zero_with_point >= 4);
  }
}

TEST_SUITE("pencil") {
  TEST_CASE("members and root groups") {
    const PencilSpec<Q> P{parse_q("x^2 - y^2"), parse_q("y^2 - z^2")};
    CHECK(build_member(P, Q(1)) == parse_q("x^2 - z^2"));
    CHECK(build_member(P, MemberParam<Q>::infinity()) == P.q2);
    // roots of s^2 - 2: (q1 + sqrt2 q2)(q1 - sqrt2 q2)
    const UniPoly<Q> phi(RationalField{}, {Q(-2), Q(0), Q(1)});
    CHECK(build_root_group(P, phi) == P.q1 * P.q1 - P.q2 * P.q2 * Q(2));
    // a single linear factor s - 3 gives the member at t = 3
    CHECK(build_root_group(P, UniPoly<Q>::linear_root(RationalField{}, Q(3))) == build_member(P, Q(3)));
  }

  TEST_CASE("product construction validates its parameters") {
    const PencilSpec<Q> P{parse_q("x^2 - y^2"), parse_q("y^2 - z^2")};
    PencilProductSpec<Q> ok{P, {MemberParam<Q>::value(Q(1))}, std::nullopt};
    CHECK(ok.m() == 3);
    CHECK(build_product(ok) == P.q1 * P.q2 * parse_q("x^2 - z^2"));
    PencilProductSpec<Q> dup{P, {MemberParam<Q>::value(Q(1)), MemberParam<Q>::value(Q(1))}, std::nullopt};
    CHECK_THROWS_AS(build_product(dup), InputError);
    PencilProductSpec<Q> zero{P, {MemberParam<Q>::value(Q(0))}, std::nullopt};
    CHECK_THROWS_AS(build_product(zero), InputError);
    const UniPoly<Q> square(RationalField{}, {Q(4), Q(-4), Q(1)});  // (s - 2)^2
    PencilProductSpec<Q> rep{P, {MemberParam<Q>::roots(square)}, std::nullopt};
    CHECK_THROWS_AS(build_product(rep), InputError);
    // t = -1 gives x^2 - 2y^2 + z^2, fine; the member x^2 - y^2 + y^2 - z^2 at t = 1 is reduced
    PencilProductSpec<Q> overlap{P, {MemberParam<Q>::roots(UniPoly<Q>(RationalField{}, {Q(-1), Q(0), Q(1)})),
                                     MemberParam<Q>::value(Q(1))},
                                 std::nullopt};
    CHECK_THROWS_AS(build_product(overlap), InputError);
  }

  TEST_CASE("Hesse pencil: singular member at t = -3") {
    const PencilSpec<Q> P{parse_q("x^3+y^3+z^3"), parse_q("x*y*z")};
    const QPoly member = build_member(P, Q(-3));
    const std::array<Q, 3> one{Q(1), Q(1), Q(1)};
    for (int v = 0; v < 3; ++v) CHECK(member.diff(v).evaluate(one) == 0);
    const auto D = discriminant(P);
    CHECK(D.degree == 12);
    CHECK(D.sum_mu == 12);
    CHECK(D.distinct_roots == 4);
    CHECK(D.infinity_multiplicity == 3);
    // finite roots: t^3 + 27 = 0, each member a triangle with three nodes
    CHECK(D.radical() == UniPoly<Q>(RationalField{}, {Q(27), Q(0), Q(0), Q(1)}));
    CHECK(D.affine.evaluate(Q(-3)) == 0);
    CHECK(D.affine.evaluate(Q(1)) != 0);
  }

  TEST_CASE("conic pencils: discriminant is det(A + tB)") {
    const std::vector<std::pair<const char*, const char*>> pencils{
        {"x^2 - y^2", "y^2 - z^2"},
        {"x^2 + 2*y^2 - z^2 + x*y", "y*z + 3*x^2 - z^2"},
        {"x*y + z^2", "x^2 - 2*y*z + 5*y^2"}};
    for (const auto& [a, b] : pencils) {
      const PencilSpec<Q> P{parse_q(a), parse_q(b)};
      const auto A = quadric_matrix(P.q1), B = quadric_matrix(P.q2);
      std::vector<std::pair<Q, Q>> samples;
      for (int t = 0; t <= 3; ++t) {
        LinearMap<Q> M;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) M[i][j] = A[i][j] + B[i][j] * t;
        samples.emplace_back(Q(t), det3(M));
      }
      const auto det = uni_interpolate(samples);
      const auto D = discriminant(P);
      CHECK(D.degree == 3);
      CHECK(D.affine.monic() == det.monic());
      CHECK(D.infinity_multiplicity == 3 - det.degree());
    }
  }

  TEST_CASE("genericity") {
    const auto g = genericity_check(PencilSpec<Q>{parse_q("x^2 - y^2"), parse_q("y^2 - z^2")});
    CHECK(g.generic());
    CHECK(g.base_points == 4);
    const auto common = genericity_check(PencilSpec<Q>{parse_q("x*y"), parse_q("x*z")});
    CHECK_FALSE(common.zero_dimensional);
    CHECK_FALSE(common.generic());
    // tangent conics: base locus is not reduced
    const auto tangent = genericity_check(PencilSpec<Q>{parse_q("x*z - y^2"), parse_q("z^2")});
    CHECK(tangent.zero_dimensional);
    CHECK_FALSE(tangent.transverse);
  }

  TEST_CASE("total Milnor number of Fermat pencils") {
    for (int k = 2; k <= 5; ++k) {
      const auto P = *fixture("fermat:" + std::to_string(k)).pencil;
      const auto rep = total_mu_check(P);
      // three singular members, each k concurrent lines with mu = (k - 1)^2
      CHECK(rep.sum_mu == 3 * (k - 1) * (k - 1));
      CHECK(rep.ok);
      CHECK(rep.distinct_roots == 3);
      CHECK(rep.equality_case);
      REQUIRE(rep.concurrent_lines.has_value());
      CHECK(*rep.concurrent_lines);
    }
    const auto hesse = total_mu_check(*fixture("hesse").pencil);
    CHECK(hesse.ok);
    CHECK_FALSE(hesse.equality_case);
  }

  TEST_CASE("wedge and residual syzygies verify") {
    for (int k = 2; k <= 4; ++k) {
      const auto fx = fixture("fermat:" + std::to_string(k));
      const auto s = wedge_syzygy(*fx.pencil, fx.f);
      CHECK(s.degree == 2 * k - 2);
      CHECK(verify_syzygy(fx.f, s));
    }
    const auto fx = fixture("ex14ii:5");
    const auto& spec = *fx.product;
    const auto s = lemma2_syzygy(spec.pencil, *spec.h, spec.m(), fx.f);
    CHECK(s.degree == 2 * spec.pencil.k() - 2 + spec.h->degree());
    CHECK(verify_syzygy(fx.f, s));
    CHECK_THROWS_AS(wedge_syzygy(*fx.pencil, parse_q("x^3 + y^3 + z^3")), InputError);
  }

  TEST_CASE("pencil freeness criterion on Fermat products") {
    for (int k = 2; k <= 4; ++k) {
      const auto fx = fixture("fermat:" + std::to_string(k));
      const auto v = thmPEN_classify(*fx.product);
      CHECK(v.condition_a);
      CHECK(v.condition_b);
      CHECK(v.free_with_expected);
      CHECK(v.expected_tau == 3 * (k - 1) * (k - 1) + k * k * 4);
      CHECK(v.report.tau == v.expected_tau);
      CHECK(v.expected_exponents == sorted_pair(2 * k - 2, 3 * k - 2 * k + 1));
    }
  }

  TEST_CASE("pencil freeness criterion fails when a singular member is missing") {
    // members at t = 0, infinity and 2: the singular member t = 1 is left out
    const auto P = *fixture("fermat:3").pencil;
    const PencilProductSpec<Q> spec{P, {MemberParam<Q>::value(Q(2))}, std::nullopt};
    const auto v = thmPEN_classify(spec);
    CHECK_FALSE(v.condition_a);
    CHECK_FALSE(v.free_with_expected);
    CHECK(v.report.cls != CurveClass::free);
  }

  TEST_CASE("case analyses for pencil products") {
    for (int k = 2; k <= 3; ++k) {
      const auto c = thm11_trichotomy(*fixture("fermat:" + std::to_string(k)).product);
      CHECK(c.case_id == 0);
      CHECK(c.r == 2 * k - 2);
    }
    const auto four = thm11_trichotomy(*fixture("fermat:4").product);
    CHECK(four.case_id == 1);
    CHECK(four.r == 5);
    CHECK(four.exponents == std::optional<std::pair<int, int>>(std::pair{5, 6}));
    const auto fx = fixture("ex14ii:5");
    const auto c = thm13_trichotomy(*fx.product);
    CHECK(c.r == classify(fx.f).mdr);
    CHECK(c.deg_h == 2);
    CHECK_THROWS_AS(thm11_trichotomy(*fx.product), InputError);
  }

  TEST_CASE("reduction of a pencil modulo p keeps the discriminant shape") {
    const auto P = *fixture("hesse").pencil;
    const PrimeField F(1000003);
    const auto D = discriminant(reduce_mod(P, F));
    CHECK(D.sum_mu == 12);
    CHECK(D.infinity_multiplicity == 3);
    CHECK(D.radical() == reduce_mod(discriminant(P).radical(), F));
  }
}
