#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "jsyz/fixtures.hpp"
#include "jsyz/gcd.hpp"
#include "jsyz/parse.hpp"
#include "jsyz/resultant.hpp"

using namespace jsyz;
using Q = Rational;

namespace {

using Pair = std::pair<int, int>;
using OptPair = std::optional<Pair>;

template <class S>
std::array<S, 3> cross(const std::array<S, 3>& a, const std::array<S, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Multiplicity histogram counted at the two smallest line indices through each point.
template <class S>
std::map<int, int> brute_histogram(const LineArrangement<S>& A) {
  const auto& L = A.lines();
  const int n = A.size();
  std::map<int, int> hist;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto p = cross(L[i].cov, L[j].cov);
      bool first = true;
      int mult = 0;
      for (int k = 0; k < n; ++k) {
        if (!is_zero(L[k].evaluate(p))) continue;
        ++mult;
        if (k < j && k != i) first = false;
      }
      if (first) ++hist[mult];
    }
  return hist;
}

LineArrangement<Q> lines_of(std::initializer_list<std::array<int, 3>> covs) {
  std::vector<ProjLine<Q>> out;
  for (const auto& c : covs) out.push_back(make_line<Q>({Q(c[0]), Q(c[1]), Q(c[2])}));
  return LineArrangement<Q>(RationalField{}, out);
}

ProjPoint<Q> qpoint(int a, int b, int c) { return make_point<Q>({Q(a), Q(b), Q(c)}); }

template <class S>
ProjPoint<S> highest_point(const LineArrangement<S>& A) {
  const auto L = lattice(A);
  return std::max_element(L.points.begin(), L.points.end(), [](const auto& a, const auto& b) {
           return a.multiplicity() < b.multiplicity();
         })->point;
}

UniPoly<Q> uq(std::vector<long> c) {
  std::vector<Q> v(c.begin(), c.end());
  return UniPoly<Q>(RationalField{}, v);
}

}  // namespace

TEST_SUITE("worked examples: algebra") {
  TEST_CASE("parsing") {
    CHECK_THROWS_AS(parse_q("x^2*y - 3*z^2"), HomogeneityError);
    CHECK_NOTHROW(parse_q("x^2*y - 3*z^3"));
    const QPoly m = parse_q("x*y*z");
    CHECK(m.degree() == 3);
    CHECK(m.term_count() == 1);
    CHECK(m.coefficient({1, 1, 1}) == 1);
    const QPoly ex5 = parse_q("(x^3-y^3)*(y^3-z^3)*(x^3-z^3)");
    CHECK(ex5.degree() == 9);
    CHECK(ex5 == fixture("ex5").f);
  }

  TEST_CASE("derivatives and products") {
    CHECK(parse_q("x^3").diff(0) == parse_q("3*x^2"));
    CHECK(parse_q("x^5 - y^5").diff(2).is_zero());
    const QPoly f = parse_q("x*y*z");
    CHECK(parse_q("x") * f.diff(0) + parse_q("y") * f.diff(1) + parse_q("z") * f.diff(2) == f * Q(3));
    CHECK(parse_q("x") * parse_q("y") == parse_q("x*y"));
    CHECK(parse_q("x-y") * parse_q("x+y") == parse_q("x^2-y^2"));
    QPoly prod = QPoly::constant(RationalField{}, Q(1));
    for (const char* l : {"x", "y", "z", "x-z", "x+z", "x-y"}) prod *= parse_q(l);
    CHECK(prod == parse_q("x*y*z*(x-z)*(x+z)*(x-y)"));
    CHECK(prod == fixture("ex1").f);
  }

  TEST_CASE("nullspaces") {
    CHECK(nullspace(ExactMatrix<Q>::identity(RationalField{}, 3)).empty());
    CHECK(nullspace(ExactMatrix<Q>(RationalField{}, 2, 5)).size() == 5);
    // a 50 x 80 matrix of rank 30, eliminated again after shuffling rows and columns
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> c(-2, 2);
    ExactMatrix<Q> left(RationalField{}, 50, 30), right(RationalField{}, 30, 80), m(RationalField{}, 50, 80);
    for (int i = 0; i < 50; ++i)
      for (int j = 0; j < 30; ++j) left(i, j) = c(rng);
    for (int i = 0; i < 30; ++i)
      for (int j = 0; j < 80; ++j) right(i, j) = c(rng);
    for (int i = 0; i < 50; ++i)
      for (int j = 0; j < 80; ++j)
        for (int k = 0; k < 30; ++k) m(i, j) += left(i, k) * right(k, j);
    std::vector<int> rows(50), cols(80);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    ExactMatrix<Q> shuffled(RationalField{}, 50, 80);
    for (int i = 0; i < 50; ++i)
      for (int j = 0; j < 80; ++j) shuffled(i, j) = m(rows[i], cols[j]);
    const auto k1 = nullspace(m), k2 = nullspace(shuffled);
    CHECK(k1.size() == k2.size());
    CHECK(static_cast<int>(k1.size()) == 80 - rank(m));
    CHECK(rank(m) <= 30);
  }

  TEST_CASE("squarefree decomposition and interpolation") {
    const auto sqf = uni_squarefree(uq({-1, 1}) * uq({-1, 1}) * uq({2, 1}));
    REQUIRE(sqf.size() == 2);
    std::map<int, UniPoly<Q>> by_mult;
    for (const auto& [g, m] : sqf) by_mult[m] = g;
    CHECK(by_mult.at(2) == uq({-1, 1}));
    CHECK(by_mult.at(1) == uq({2, 1}));
    const auto cube = uni_squarefree(uq({27, 0, 0, 1}));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].first == uq({27, 0, 0, 1}));
    CHECK(cube[0].second == 1);
    CHECK(uni_interpolate<Q>({{Q(0), Q(1)}, {Q(1), Q(2)}}) == uq({1, 1}));
    CHECK(uni_interpolate<Q>({{Q(0), Q(0)}, {Q(1), Q(1)}, {Q(2), Q(4)}}) == uq({0, 0, 1}));
  }

  TEST_CASE("gcds") {
    CHECK(homog_gcd(parse_q("x^2*y"), parse_q("x*y^2")) == parse_q("x*y"));
    CHECK(homog_gcd(parse_q("x^3-y^3"), parse_q("x-y")) == parse_q("x-y"));
    const auto fx = fixture("ex12i:3");
    const auto s = wedge_syzygy(*fx.pencil, fx.f);
    CHECK(is_primitive(s));
    CHECK(homog_gcd(homog_gcd(s.a, s.b), s.c).degree() == 0);
    // no linear form with small coefficients divides all three components
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          const QPoly l = QPoly::linear(RationalField{}, {Q(a), Q(b), Q(c)});
          QPoly q;
          CHECK_FALSE((divide_exact(s.a, l, &q) && divide_exact(s.b, l, &q) && divide_exact(s.c, l, &q)));
        }
  }

  TEST_CASE("the 13-sample interpolation of the Hesse discriminant has degree 12") {
    const auto D = discriminant(*fixture("hesse").pencil);
    // finite part of degree 9 (three roots at infinity), homogenized degree 12
    CHECK(D.degree == 12);
    CHECK(D.affine.degree() + D.infinity_multiplicity == 12);
    for (const auto& root : D.roots) CHECK(root.multiplicity == 3);
  }
}

TEST_SUITE("worked examples: syzygies and Tjurina numbers") {
  TEST_CASE("syzygy spaces") {
    const auto cone = ar_slice(parse_q("x^5 - y^5"), 0);
    REQUIRE(cone.dimension() == 1);
    CHECK(cone.basis[0].a.is_zero());
    CHECK(cone.basis[0].b.is_zero());
    CHECK(cone.basis[0].c == QPoly::constant(RationalField{}, Q(1)));
    CHECK(ar_dimension(parse_q("x^4+y^4+z^4"), 2) == 0);
    CHECK(ar_dimension(fixture("ex3").f, 8) == 0);
    CHECK(ar_dimension(fixture("ex3").f, 9) == 2);
  }

  TEST_CASE("minimal degrees") {
    CHECK(mdr(parse_q("x*y*z")).mdr == 1);
    CHECK(mdr(fixture("ex1").f).mdr == 2);
    CHECK(mdr(fixture("ex12ii").f).mdr == 4);
  }

  TEST_CASE("syzygy verification") {
    const QPoly quartic = parse_q("x^4+y^4+z^4");
    const QPoly zero3 = QPoly(RationalField{}, 3), one = QPoly::constant(RationalField{}, Q(1));
    CHECK(verify_syzygy(quartic, koszul_triples(quartic)[0]));
    CHECK_FALSE(verify_syzygy(quartic, make_triple(QPoly(RationalField{}, 0), QPoly(RationalField{}, 0), one, 4)));
    const QPoly xyz = parse_q("x*y*z");
    const auto t = make_triple(parse_q("x"), parse_q("-y"), QPoly(RationalField{}, 1), 3);
    CHECK(verify_syzygy(xyz, t));
    CHECK(is_primitive(t));
    const auto scaled = make_triple(parse_q("x*x"), parse_q("-y*x"), QPoly(RationalField{}, 2), 3);
    CHECK(verify_syzygy(xyz, scaled));
    CHECK_FALSE(is_primitive(scaled));
    const auto ex1 = *fixture("ex1").arrangement;
    const auto ps = point_syzygy(ex1, qpoint(0, 1, 0));
    CHECK(ps.degree == 2);
    CHECK(verify_syzygy(ex1.polynomial(), ps));
    const auto hesse = fixture("hesse");
    CHECK(verify_syzygy(hesse.f, wedge_syzygy(*hesse.pencil, hesse.f)));
  }

  TEST_CASE("Milnor algebra Hilbert values") {
    CHECK(milnor_hilbert(parse_q("x^2+y*z"), 0) == 1);
    // socle degree 3(d - 2) = 6 for a smooth quartic
    CHECK(milnor_hilbert(parse_q("x^4+y^4+z^4"), 6) == 1);
    CHECK(milnor_hilbert(parse_q("x^4+y^4+z^4"), 7) == 0);
    CHECK(milnor_hilbert(parse_q("x*y*z"), 10) == 3);
  }

  TEST_CASE("global Tjurina numbers") {
    CHECK(global_tjurina(parse_q("x^4+y^4+z^4")).tau == 0);
    CHECK(global_tjurina(fixture("ex12ii").f).tau == 9 * 16 + 12);
    CHECK(global_tjurina(fixture("ex14ii:5").f).tau == 5 * 5 + 2);
  }

  TEST_CASE("bound arithmetic") {
    CHECK(dpw_phi1(6, 2) == 19);
    CHECK(dpw_phi1(7, 2) == 28);
    CHECK(dpw_phi2(6, 4) == 15);
  }

  TEST_CASE("classification") {
    const auto ex2a = classify(fixture("ex2a").f);
    CHECK(ex2a.cls == CurveClass::free);
    CHECK(ex2a.exponents == OptPair(Pair{3, 4}));
    CHECK(ex2a.tau == 37);
    const auto ex14 = classify(fixture("ex14ii:5").f);
    CHECK(ex14.cls == CurveClass::nearly_free);
    CHECK(ex14.exponents == OptPair(Pair{2, 5}));
    const auto quartic = classify(parse_q("x^4+y^4+z^4"));
    CHECK(quartic.cls == CurveClass::neither);
    CHECK(quartic.tau == 0);
    CHECK(quartic.mdr == 3);
  }

  TEST_CASE("freeness gate and candidate refinement") {
    const auto g = thmF_gate(15, 4, 156);
    CHECK(g.attained);
    CHECK(g.exponents == Pair{4, 10});
    CHECK(thmF_gate(6, 2, 19).attained);
    CHECK_FALSE(thmF_gate(6, 2, 18).attained);
    CHECK(refine_mdr_candidates(6, 19, {2, 4}) == std::set<int>{2});
    CHECK(refine_mdr_candidates(6, 0, {1, 2, 3, 4, 5}) == std::set<int>{1, 2, 3, 4, 5});
    const auto kept = refine_mdr_candidates(15, 156, {4, 5, 6, 7, 8, 9, 10});
    CHECK(kept.count(4) == 1);
    // phi2(10) = 196 - 40 - C(7, 2) = 135 < 156
    CHECK(dpw_phi2(15, 10) == 135);
    CHECK(kept.count(10) == 0);
  }
}

TEST_SUITE("worked examples: line arrangements") {
  TEST_CASE("lattices") {
    const auto tri = lines_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto Lt = lattice(tri);
    CHECK(Lt.points.size() == 3);
    CHECK(Lt.max_multiplicity == 2);
    CHECK(tau_combinatorial(Lt) == 3);
    const auto ex1 = lattice(*fixture("ex1").arrangement);
    int fours = 0;
    for (const auto& p : ex1.points)
      if (p.multiplicity() == 4) {
        ++fours;
        CHECK(p.point == qpoint(0, 1, 0));
      }
    CHECK(fours == 1);
    // (x^3 - y^3)(y^3 - z^3)(x^3 - z^3): 3 triple points at the vertices plus 9 more
    const auto A = *fixture("ex12i:3").split_arrangement;
    const auto L = lattice(A);
    std::map<int, int> hist;
    for (const auto& p : L.points) ++hist[p.multiplicity()];
    CHECK(hist == brute_histogram(A));
    CHECK(hist == std::map<int, int>{{3, 12}});
    const PrimeField F = A.field();
    for (const auto& v : {std::array{F.one(), F.zero(), F.zero()}, std::array{F.zero(), F.one(), F.zero()},
                          std::array{F.zero(), F.zero(), F.one()}}) {
      const int idx = L.find(make_point<ModP>(v));
      REQUIRE(idx >= 0);
      CHECK(L.points[idx].multiplicity() == 3);
    }
  }

  TEST_CASE("combinatorial Tjurina numbers") {
    const auto ex5 = lattice(*fixture("ex5").split_arrangement);
    CHECK(tau_combinatorial(ex5) == 48);
    CHECK(tau_combinatorial(ex5) == 64 - 4 * 4);
    const auto ex3 = *fixture("ex3").arrangement;
    CHECK(tau_combinatorial(lattice(ex3)) == 243);
    CHECK(tau_combinatorial(lattice(ex3)) == 18 * 18 - 81);
    std::map<int, int> hist;
    for (const auto& p : lattice(ex3).points) ++hist[p.multiplicity()];
    CHECK(hist == brute_histogram(ex3));
  }

  TEST_CASE("point syzygies") {
    const auto tri = lines_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto s = point_syzygy(tri, qpoint(0, 0, 1));
    CHECK(s.degree == 1);
    CHECK(verify_syzygy(tri.polynomial(), s));
    CHECK(mdr(tri.polynomial()).mdr == 1);
    const auto A = *fixture("ex12i:3").split_arrangement;
    const PrimeField F = A.field();
    const auto v = point_syzygy(A, make_point<ModP>({F.zero(), F.zero(), F.one()}));
    CHECK(v.degree == 6);
    CHECK(verify_syzygy(A.polynomial(), v));
    CHECK(mdr(A.polynomial()).mdr == 4);
  }

  TEST_CASE("trichotomy on the examples") {
    const auto ex1 = trichotomy(*fixture("ex1").arrangement, qpoint(0, 1, 0));
    CHECK(ex1.case_id == 0);
    CHECK(ex1.r == 2);
    const auto ex2a = *fixture("ex2a").arrangement;
    const auto t2 = trichotomy(ex2a, highest_point(ex2a));
    CHECK(t2.m == 4);
    CHECK(t2.case_id == 1);
    CHECK(t2.r == 3);
    CHECK(t2.exponents == OptPair(Pair{3, 4}));
    const auto ex3 = *fixture("ex3").arrangement;
    const auto t3 = trichotomy(ex3, highest_point(ex3));
    CHECK(t3.m == 6);
    CHECK(t3.case_id == 2);
    CHECK(t3.r == 9);
  }

  TEST_CASE("bounds on the examples") {
    const auto ex5 = multiplicity_bound_check(9, 3, 4);
    CHECK(ex5.ok);
    CHECK(ex5.equality);
    const auto tri = multiplicity_bound_check(3, 2, 1);
    CHECK(tri.ok);
    CHECK(tri.equality);
    const auto ex3 = multiplicity_bound_check(19, 6, 9);
    CHECK(ex3.ok);
    CHECK(ex3.rhs == Q(38, 11));
    CHECK(exponent_gap_check(CurveClass::free, {2, 3}, 4));
    CHECK(exponent_gap_check(CurveClass::free, {3, 4}, 4));
    CHECK(exponent_gap_check(CurveClass::free, {4, 5}, 4));
    CHECK(lattice(*fixture("ex2a").arrangement).max_multiplicity == 4);
  }

  TEST_CASE("Faenzi-Valles examples") {
    const auto ex2a = faenzi_valles_check(*fixture("ex2a").arrangement, 3, 1);
    CHECK(ex2a.e == 4);
    CHECK(ex2a.tau == 37);
    CHECK(ex2a.free_by_tau);
    CHECK(ex2a.exponents == OptPair(Pair{3, 4}));
    const auto ex1 = faenzi_valles_check(*fixture("ex1").arrangement, 2, 1);
    CHECK(ex1.e == 4);
    CHECK(ex1.tau == 19);
    // near pencil: four concurrent lines and one more
    const auto near = lines_of({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}});
    const auto v = faenzi_valles_check(near, 1, 2);
    CHECK(v.tau == 9 + 4);
    CHECK(v.classified == classify(near.polynomial()).cls);
    CHECK(v.agrees);
  }

  TEST_CASE("cone over four generic lines") {
    const auto gen = lines_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    const auto C = cone_construction(gen, qpoint(2, 3, 7));
    CHECK(C.m == 6);
    CHECK(C.d == 10);
    CHECK(C.expected_tau == 61);
    CHECK(C.expected_exponents == Pair{4, 5});
    const auto rep = classify(C.B.polynomial());
    CHECK(rep.cls == CurveClass::free);
    CHECK(rep.tau == 61);
    CHECK(rep.exponents == OptPair(Pair{4, 5}));
    CHECK(tau_combinatorial(lattice(C.B)) == 61);
  }

  TEST_CASE("cone with a collinear apex counts the shared line once") {
    const auto gen = lines_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    // (1:-1:3) lies on the line x + y through (0:0:1) and (1:-1:0)
    const auto C = cone_construction(gen, qpoint(1, -1, 3));
    CHECK(C.m == 5);
    CHECK(is_reduced(C.B.polynomial()));
  }

  TEST_CASE("lattice isomorphism examples") {
    std::mt19937_64 rng(59);
    const auto tri = lines_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto concurrent = lines_of({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK_FALSE(lattice_isomorphic(lattice(tri), 3, lattice(concurrent), 3));
    const auto ex1 = *fixture("ex1").arrangement;
    const auto moved = transform_arrangement(ex1, random_invertible<Q>(RationalField{}, 3, rng));
    CHECK(lattice_isomorphic(lattice(ex1), 6, lattice(moved), 6));
    const auto A = *fixture("ex12i:2").split_arrangement;
    const PrimeField F = A.field();
    const auto B1 = transform_arrangement(A, random_invertible<ModP>(F, 5, rng));
    const auto B2 = transform_arrangement(A, random_invertible<ModP>(F, 5, rng));
    CHECK(lattice_isomorphic(lattice(B1), B1.size(), lattice(B2), B2.size()));
  }
}

TEST_SUITE("worked examples: pencils") {
  TEST_CASE("members and products") {
    const auto P = *fixture("hesse").pencil;
    CHECK(build_member(P, Q(-3)) == parse_q("x^3+y^3+z^3-3*x*y*z"));
    CHECK(homog_gcd(build_member(P, Q(-3)), parse_q("x+y+z")) == parse_q("x+y+z"));
    CHECK(build_member(P, MemberParam<Q>::infinity()) == parse_q("x*y*z"));
    CHECK(build_member(PencilSpec<Q>{parse_q("x^2-y^2"), parse_q("y^2-z^2")}, Q(1)) == parse_q("x^2-z^2"));
    CHECK(build_product(*fixture("ex12i:3").product) == parse_q("(x^3-y^3)*(y^3-z^3)*(x^3-z^3)"));
    const auto ex12ii = fixture("ex12ii");
    CHECK(ex12ii.f.degree() == 15);
    CHECK(ex12ii.product->m() == 5);
    CHECK(ex12ii.f.monic() == parse_q("x*y*z*(x^3+y^3+z^3)*((x^3+y^3+z^3)^3-27*x^3*y^3*z^3)").monic());
  }

  TEST_CASE("wedge syzygies") {
    const auto k2 = fixture("fermat:2");
    const auto s2 = wedge_syzygy(*k2.pencil, k2.f);
    CHECK(s2.degree == 2);
    CHECK(verify_syzygy(k2.f, s2));
    const auto h = fixture("ex12ii");
    const auto sh = wedge_syzygy(*h.pencil, h.f);
    CHECK(sh.degree == 4);
    CHECK(is_primitive(sh));
    CHECK(sh.degree == mdr(h.f).mdr);
    const PencilSpec<Q> prop{parse_q("x^2-y^2"), parse_q("2*x^2-2*y^2")};
    CHECK_THROWS_AS(wedge_syzygy(prop, k2.f), InputError);
  }

  TEST_CASE("residual syzygies") {
    const auto ex14 = fixture("ex14ii:5");
    const auto& s14 = *ex14.product;
    const auto t = lemma2_syzygy(s14.pencil, *s14.h, s14.m(), ex14.f);
    CHECK(t.degree == 2);
    CHECK(t.degree == mdr(ex14.f).mdr);
    const auto ex14i = fixture("ex14i:3");
    const auto& si = *ex14i.product;
    const auto u = lemma2_syzygy(si.pencil, *si.h, si.m(), ex14i.f);
    CHECK(u.degree == 5);
    CHECK(verify_syzygy(ex14i.f, u));
    const PencilSpec<Q> coord{parse_q("x"), parse_q("y")};
    const auto c = lemma2_syzygy(coord, parse_q("z"), 2, parse_q("x*y*z"));
    CHECK(c.degree == 1);
    CHECK(verify_syzygy(parse_q("x*y*z"), c));
  }

  TEST_CASE("resultants") {
    CHECK(macaulay_resultant(parse_q("x"), parse_q("y"), parse_q("z")) == 1);
    CHECK(macaulay_resultant(parse_q("x"), parse_q("y"), parse_q("x+y")) == 0);
    const QPoly f = parse_q("x^3+y^3+z^3");
    CHECK(macaulay_resultant(f.diff(0), f.diff(1), f.diff(2)) != 0);
    const QPoly g = parse_q("x^3+y^3+z^3-3*x*y*z");
    CHECK(macaulay_resultant(g.diff(0), g.diff(1), g.diff(2)) == 0);
  }

  TEST_CASE("discriminants of conic pencils") {
    const auto D = discriminant(*fixture("fermat:2").pencil);
    CHECK(D.degree == 3);
    CHECK(D.distinct_roots == 3);
    for (const auto& r : D.roots) CHECK(r.multiplicity == 1);
    const auto G = discriminant(PencilSpec<Q>{parse_q("x^2+y^2+z^2"), parse_q("x^2 + 3*x*y - 2*y*z + 5*z^2 - x*z")});
    CHECK(G.degree == 3);
    CHECK(G.sum_mu == 3);
    CHECK(G.distinct_roots == 3);
  }

  TEST_CASE("genericity of the examples") {
    const auto hesse = genericity_check(*fixture("hesse").pencil);
    CHECK(hesse.generic());
    CHECK(hesse.base_points == 9);
    const auto fermat = genericity_check(*fixture("fermat:3").pencil);
    CHECK(fermat.generic());
    CHECK(fermat.base_points == 9);
    CHECK_FALSE(genericity_check(PencilSpec<Q>{parse_q("x*(y+z)"), parse_q("x*(y-2*z)")}).generic());
  }

  TEST_CASE("total Milnor numbers") {
    const auto hesse = total_mu_check(*fixture("hesse").pencil);
    CHECK(hesse.sum_mu == 12);
    CHECK(hesse.distinct_roots == 4);
    const auto k3 = total_mu_check(*fixture("fermat:3").pencil);
    CHECK(k3.sum_mu == 12);
    CHECK(k3.distinct_roots == 3);
    const auto k2 = total_mu_check(*fixture("fermat:2").pencil);
    CHECK(k2.sum_mu == 3);
    CHECK(k2.distinct_roots == 3);
  }

  TEST_CASE("pencil freeness criterion on the Hesse examples") {
    const auto v = thmPEN_classify(*fixture("ex12ii").product);
    CHECK(v.condition1);
    CHECK(v.free_with_expected);
    CHECK(v.report.exponents == OptPair(Pair{4, 10}));
    CHECK(v.report.tau == 156);
    const auto v5 = thmPEN_classify(*fixture("ex5").product);
    CHECK(v5.free_with_expected);
    CHECK(v5.report.tau == 12 + 9 * 4);
    const auto w = thmPEN_classify(*fixture("hesse4").product);
    CHECK_FALSE(w.condition1);
    CHECK(w.report.mdr == 4);
    CHECK(w.report.cls != CurveClass::free);
    CHECK(w.report.tau != dpw_phi1(w.report.d, 4));
  }

  TEST_CASE("case analyses on the examples") {
    CHECK(thm11_trichotomy(*fixture("ex12ii").product).case_id == 0);
    const auto four = thm11_trichotomy(*fixture("ex12i:4").product);
    CHECK(four.case_id == 1);
    CHECK(four.exponents == OptPair(Pair{5, 6}));
    const auto ex14 = thm13_trichotomy(*fixture("ex14ii:5").product);
    CHECK(ex14.case_id == 0);
    CHECK(ex14.r == 2);
  }
}
