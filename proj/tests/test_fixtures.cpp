#include "doctest.h"
#include "jsyz/fixtures.hpp"
#include "jsyz/gcd.hpp"
#include "jsyz/parse.hpp"

using namespace jsyz;
using Q = Rational;

TEST_SUITE("fixtures") {
  TEST_CASE("every listed fixture builds a reduced curve") {
    for (const auto& name : fixture_names()) {
      CAPTURE(name);
      const Fixture fx = fixture(name);
      CHECK(fx.f.degree() >= 2);
      CHECK(is_reduced(fx.f));
      if (fx.arrangement) CHECK(fx.arrangement->polynomial().monic() == fx.f.monic());
      if (fx.split_arrangement) {
        const PrimeField F = fx.split_arrangement->field();
        CHECK(fx.split_arrangement->polynomial().monic() == reduce_mod(fx.f, F).monic());
      }
      if (fx.product) CHECK(build_product(*fx.product).monic() == fx.f.monic());
    }
  }

  TEST_CASE("unknown names and parameters are rejected") {
    CHECK_THROWS_AS(fixture("nope"), InputError);
    CHECK_THROWS_AS(fixture("ex1:3"), InputError);
    CHECK_THROWS_AS(fixture("ex12i:1"), InputError);
    CHECK_THROWS_AS(fixture("ex12i:abc"), InputError);
  }

  TEST_CASE("roots of unity") {
    for (std::uint64_t k : {2u, 3u, 5u, 7u, 12u}) {
      const std::uint64_t p = prime_one_mod(k);
      CHECK(is_prime(p));
      CHECK(p > (std::uint64_t{1} << 30));
      CHECK(p % k == 1);
      for (std::uint64_t q = (std::uint64_t{1} << 30) + 1; q < p; ++q) CHECK_FALSE((q % k == 1 && is_prime(q)));
      const ModP w = primitive_root_of_unity(k, p);
      ModP acc = w;
      for (std::uint64_t i = 1; i < k; ++i, acc *= w) CHECK_FALSE(is_one(acc));
      CHECK(is_one(acc));
    }
  }

  TEST_CASE("the conic example matches its closed form") {
    for (int m = 3; m <= 7; ++m) {
      const std::string e = std::to_string(m - 1), e2 = std::to_string(m - 2);
      CHECK(fixture("ex14ii:" + std::to_string(m)).f.monic() ==
            parse_q("x*(x^" + e + " - y^" + e + ")*(x*y + z^2)").monic());
      CHECK(fixture("ex14ii-primed:" + std::to_string(m)).f.monic() ==
            parse_q("x*y*(x^" + e2 + " - y^" + e2 + ")*(x*y + z^2)").monic());
    }
  }

  TEST_CASE("the conic example is nearly free with tau m^2 + 2") {
    for (int m = 3; m <= 6; ++m) {
      const auto rep = classify(fixture("ex14ii:" + std::to_string(m)).f);
      CHECK(rep.cls == CurveClass::nearly_free);
      CHECK(rep.exponents == std::optional<std::pair<int, int>>(std::pair{2, m}));
      CHECK(rep.tau == m * m + 2);
      const auto primed = classify(fixture("ex14ii-primed:" + std::to_string(m)).f);
      CHECK(primed.cls == CurveClass::free);
      CHECK(primed.exponents == std::optional<std::pair<int, int>>(sorted_pair(2, m - 1)));
    }
  }

  TEST_CASE("Fermat arrangement with the axes is free with exponents (k + 1, 2k - 1)") {
    for (int k = 2; k <= 4; ++k) {
      const auto rep = classify(fixture("ex14i:" + std::to_string(k)).f);
      CHECK(rep.cls == CurveClass::free);
      CHECK(rep.exponents == std::optional<std::pair<int, int>>(sorted_pair(k + 1, 2 * k - 1)));
    }
  }
}
