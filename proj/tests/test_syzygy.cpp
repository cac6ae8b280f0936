#include <random>

#include "doctest.h"
#include "jsyz/parse.hpp"
#include "jsyz/syzygy.hpp"
#include "jsyz/tjurina.hpp"

using namespace jsyz;
using Q = Rational;

namespace {

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// dim S_n for three variables, written out independently of the library.
long sdim(long n) { return n < 0 ? 0 : (n + 1) * (n + 2) / 2; }

// For smooth f the partials form a regular sequence, so the only syzygies are
// the Koszul ones: dim AR_r = 3 dim S_{r-d+1} - dim S_{r-2d+2}.
long smooth_ar_dim(int d, int r) { return 3 * sdim(r - d + 1) - sdim(r - 2 * d + 2); }

// Hilbert function of S / (three forms of degree d - 1 in a regular sequence):
// coefficient of t^k in ((1 - t^(d-1)) / (1 - t))^3.
long smooth_milnor(int d, int k) {
  const int e = d - 1;
  return sdim(k) - 3 * sdim(k - e) + 3 * sdim(k - 2 * e) - sdim(k - 3 * e);
}

// A free curve with exponents (d1, d2) has AR = S(-d1) + S(-d2).
long free_ar_dim(int d1, int d2, int r) { return sdim(r - d1) + sdim(r - d2); }

}  // namespace

TEST_SUITE("syzygy") {
  TEST_CASE("Fermat curves have only Koszul syzygies") {
    for (int d = 2; d <= 6; ++d) {
      const QPoly f = parse_q("x^" + std::to_string(d) + " + y^" + std::to_string(d) + " + z^" + std::to_string(d));
      for (int r = 0; r <= 2 * d; ++r) CHECK(ar_dimension(f, r) == smooth_ar_dim(d, r));
      const auto res = mdr(f);
      CHECK(res.mdr == d - 1);
      CHECK_FALSE(res.cone);
      CHECK(verify_syzygy(f, res.certificate));
    }
  }

  TEST_CASE("free arrangements follow the exponent formula") {
    // triangle: exponents (1, 1); A3 reflection arrangement: exponents (2, 3)
    const QPoly tri = parse_q("x*y*z");
    const QPoly a3 = parse_q("x*y*z*(x-y)*(x-z)*(y-z)");
    for (int r = 0; r <= 7; ++r) {
      CHECK(ar_dimension(tri, r) == free_ar_dim(1, 1, r));
      CHECK(ar_dimension(a3, r) == free_ar_dim(2, 3, r));
    }
  }

  TEST_CASE("modular and exact backends agree") {
    for (const char* text : {"x*y*z*(x+y+z)", "y^2*z-x^3-x^2*z", "x^5+y^5+z^5+x^2*y^2*z", "x*y*(x-y)*(x-2*y)*z"}) {
      const QPoly f = parse_q(text);
      for (int r = 0; r <= f.degree(); ++r)
        CHECK(ar_dimension(f, r, Backend::modular()) == ar_dimension(f, r, Backend::rational()));
      CHECK(mdr(f, Backend::modular()).mdr == mdr(f, Backend::rational()).mdr);
    }
  }

  TEST_CASE("the mdr certificate is a minimal nonzero syzygy") {
    for (const char* text : {"x*y*z*(x+y+z)", "y^2*z-x^3", "x*y*z*(x-y)*(x-z)*(y-z)", "x^4+y^4+z^4+x*y*z^2"}) {
      const QPoly f = parse_q(text);
      const auto res = mdr(f);
      CHECK(res.certificate.degree == res.mdr);
      CHECK_FALSE(res.certificate.is_zero());
      CHECK(verify_syzygy(f, res.certificate));
      if (res.mdr > 0) CHECK(ar_dimension(f, res.mdr - 1) == 0);
      CHECK(ar_dimension(f, res.mdr) > 0);
    }
  }

  TEST_CASE("slices verify and have the predicted size") {
    const QPoly f = parse_q("x*y*z*(x-y)*(x-z)*(y-z)");
    for (int r = 2; r <= 4; ++r) {
      const auto slice = ar_slice(f, r);
      CHECK(slice.dimension() == free_ar_dim(2, 3, r));
      for (const auto& t : slice.basis) CHECK(verify_syzygy(f, t));
    }
  }

  TEST_CASE("Koszul triples are syzygies and the wrong triple is not") {
    const QPoly f = parse_q("x^3 + y^3 + z^3 - 5*x*y*z");
    for (const auto& t : koszul_triples(f)) CHECK(verify_syzygy(f, t));
    const auto g = gradient(f);
    const auto bad = make_triple(g[0], g[1], g[2], f.degree());
    CHECK_FALSE(verify_syzygy(f, bad));
    const QPoly x = parse_q("x"), y2 = parse_q("y^2");
    CHECK_THROWS_AS(make_triple(x, y2, x, 3), InputError);
  }

  TEST_CASE("primitivity of triples") {
    const QPoly f = parse_q("x*y*z");
    const auto res = mdr(f);
    CHECK(is_primitive(res.certificate));
    const QPoly l = parse_q("x+y");
    SyzygyTriple<Q> scaled = make_triple(res.certificate.a * l, res.certificate.b * l, res.certificate.c * l, 3);
    CHECK(verify_syzygy(f, scaled));
    CHECK_FALSE(is_primitive(scaled));
  }

  TEST_CASE("cones are flagged with mdr zero") {
    const auto res = mdr(parse_q("x*y*(x+y)*(x-3*y)"));
    CHECK(res.mdr == 0);
    CHECK(res.cone);
  }

  TEST_CASE("syzygies over a prime field") {
    const PrimeField F(1000003);
    const PPoly f = reduce_mod(parse_q("x*y*z*(x-y)*(x-z)*(y-z)"), F);
    for (int r = 0; r <= 5; ++r) CHECK(ar_dimension(f, r) == free_ar_dim(2, 3, r));
    CHECK(verify_syzygy(f, mdr(f).certificate));
  }
}

TEST_SUITE("tjurina") {
  TEST_CASE("smooth curves follow the regular sequence Hilbert function") {
    for (int d = 2; d <= 6; ++d) {
      const QPoly f = parse_q("x^" + std::to_string(d) + " + y^" + std::to_string(d) + " + z^" + std::to_string(d));
      for (int k = 0; k <= 3 * d; ++k) CHECK(milnor_hilbert(f, k) == smooth_milnor(d, k));
      CHECK(global_tjurina(f).tau == 0);
    }
  }

  TEST_CASE("Tjurina numbers of simple singularities") {
    CHECK(global_tjurina(parse_q("y^2*z - x^3 - x^2*z")).tau == 1);  // one node
    CHECK(global_tjurina(parse_q("y^2*z - x^3")).tau == 2);          // one cusp
    CHECK(global_tjurina(parse_q("y^2*z^2 - x^4")).tau == 6);        // two tacnodes
    CHECK(global_tjurina(parse_q("x*y*z")).tau == 3);                // three nodes
  }

  TEST_CASE("line arrangements: tau is the sum of (m_p - 1)^2") {
    // A3: four triple points and three double points
    CHECK(global_tjurina(parse_q("x*y*z*(x-y)*(x-z)*(y-z)")).tau == 4 * 4 + 3 * 1);
    // generic four lines: six nodes
    CHECK(global_tjurina(parse_q("x*y*z*(x+y+z)")).tau == 6);
    // pencil of d concurrent lines: one point of multiplicity d
    CHECK(global_tjurina(parse_q("x*y*(x+y)*(x-y)*(x+2*y)")).tau == 16);
  }

  TEST_CASE("du Plessis-Wall numbers") {
    for (int d = 2; d <= 12; ++d)
      for (int r = 0; r <= d - 1; ++r) {
        const long phi1 = (d - 1) * (d - 1) - r * (d - 1 - r);
        CHECK(dpw_phi1(d, r) == phi1);
        CHECK(dpw_phi2(d, r) == phi1 - binom2(2 * r + 2 - d));
        const auto b = dpw_bounds(d, r);
        if (2 * r <= d - 1) {
          CHECK(b.branch == "phi1");
          CHECK(b.value == phi1);
        } else {
          CHECK(b.branch == "phi2");
          CHECK(b.value == dpw_phi2(d, r));
        }
      }
  }

  TEST_CASE("classification from numbers") {
    std::optional<std::pair<int, int>> ex;
    CHECK(classify_numbers(6, 2, 19, &ex) == CurveClass::free);
    REQUIRE(ex.has_value());
    CHECK(*ex == std::pair{2, 3});
    CHECK(classify_numbers(4, 2, 6, &ex) == CurveClass::nearly_free);
    CHECK(*ex == std::pair{2, 2});
    CHECK(classify_numbers(4, 3, 0, &ex) == CurveClass::neither);
    CHECK(classify_numbers(3, 0, 4, &ex) == CurveClass::cone);
  }

  TEST_CASE("classify on known curves") {
    const auto conic = classify(parse_q("x^2 + y^2 + z^2"));
    CHECK(conic.cls == CurveClass::nearly_free);
    const auto cusp = classify(parse_q("y^2*z - x^3"));
    CHECK(cusp.cls == CurveClass::nearly_free);
    CHECK(cusp.tau == 2);
    const auto nodal = classify(parse_q("y^2*z - x^3 - x^2*z"));
    CHECK(nodal.cls == CurveClass::neither);
    const auto a3 = classify(parse_q("x*y*z*(x-y)*(x-z)*(y-z)"));
    CHECK(a3.cls == CurveClass::free);
    REQUIRE(a3.exponents.has_value());
    CHECK(*a3.exponents == std::pair{2, 3});
    CHECK(verify_syzygy(parse_q("x*y*z*(x-y)*(x-z)*(y-z)"), a3.certificate));
    const auto gen = classify(parse_q("x*y*z*(x+y+z)"));
    CHECK(gen.cls == CurveClass::nearly_free);
    CHECK(gen.tau <= gen.bound.value);
  }

  TEST_CASE("classify rejects non-reduced input") {
    CHECK_THROWS_AS(classify(parse_q("x^2*y")), InputError);
    CHECK_THROWS_AS(classify(parse_q("x")), InputError);
  }

  TEST_CASE("gate and candidate refinement") {
    const auto g = thmF_gate(6, 2, 19);
    CHECK(g.attained);
    CHECK(g.exponents == std::pair{2, 3});
    CHECK_FALSE(thmF_gate(6, 2, 18).attained);
    CHECK_THROWS_AS(thmF_gate(6, 2, 20), InconsistencyError);
    const auto kept = refine_mdr_candidates(6, 19, {1, 2, 3, 4, 5});
    for (int r : kept) CHECK(dpw_bounds(6, r).value >= 19);
    CHECK(kept.count(2) == 1);
    CHECK(kept.count(3) == 0);
  }
}
