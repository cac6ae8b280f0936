#include "doctest.h"
#include "jsyz/fixtures.hpp"
#include "jsyz/parse.hpp"
#include "jsyz/report_json.hpp"

using namespace jsyz;
using Q = Rational;

TEST_SUITE("json") {
  TEST_CASE("freeness report fields") {
    const QPoly f = fixture("ex1").f;
    const json j = to_json(classify(f));
    CHECK(j["d"] == 6);
    CHECK(j["mdr"] == 2);
    CHECK(j["tau"] == 19);
    CHECK(j["class"] == "free");
    CHECK(j["exponents"] == json::array({2, 3}));
    CHECK(j["backend"] == "modular");
    CHECK(j["primes"].size() == 3);
    CHECK(j["field"] == "Q");
    CHECK(j["bounds"]["branch"] == "phi1");
  }

  TEST_CASE("certificates reload and re-verify") {
    for (const char* text : {"x*y*z*(x-y)*(x-z)*(y-z)", "y^2*z - x^3", "x^4 + y^4 + z^4 - 3/2*x*y*z^2"}) {
      const QPoly f = parse_q(text);
      const auto rep = classify(f);
      const json j = to_json(rep.certificate);
      const auto back = certificate_from_json<Q>(json::parse(j.dump()), RationalField{}, f.degree());
      CHECK(back.degree == rep.certificate.degree);
      CHECK(back.a == rep.certificate.a);
      CHECK(back.b == rep.certificate.b);
      CHECK(back.c == rep.certificate.c);
      CHECK(verify_syzygy(f, back));
    }
    json tampered = to_json(classify(parse_q("x*y*z")).certificate);
    tampered["a"] = "x + y";
    const auto bad = certificate_from_json<Q>(tampered, RationalField{}, 3);
    CHECK_FALSE(verify_syzygy(parse_q("x*y*z"), bad));
  }

  TEST_CASE("output is deterministic") {
    const QPoly f = fixture("ex2a").f;
    CHECK(to_json(classify(f)).dump() == to_json(classify(f)).dump());
    const auto P = *fixture("hesse").pencil;
    CHECK(to_json(discriminant(P)).dump() == to_json(discriminant(P)).dump());
  }

  TEST_CASE("discriminant JSON lists the factors") {
    const json j = to_json(discriminant(*fixture("hesse").pencil));
    CHECK(j["degree"] == 12);
    CHECK(j["sum_mu"] == 12);
    CHECK(j["distinct_roots"] == 4);
    CHECK(j["factors"].size() == 2);
    int total = 0;
    for (const auto& fac : j["factors"]) {
      const int deg = fac["at_infinity"].get<bool>() ? 1 : 3;
      total += deg * fac["multiplicity"].get<int>();
    }
    CHECK(total == 12);
  }

  TEST_CASE("pencil spec round trip") {
    for (const char* name : {"fermat:3", "hesse4", "ex14ii:5"}) {
      const auto spec = *fixture(name).product;
      const json j = to_json(spec);
      const auto back = parse_pencil_spec(j.dump());
      REQUIRE(std::holds_alternative<PencilProductSpec<Q>>(back));
      CHECK(build_product(std::get<PencilProductSpec<Q>>(back)) == build_product(spec));
    }
  }

  TEST_CASE("pencil spec text forms") {
    const auto a = parse_pencil_spec(std::string(R"({"q1": "x^2 - y^2", "q2": "y^2 - z^2", "t": [1, "-1/2", {"roots_of": [-3, 0, 1]}]})"));
    REQUIRE(std::holds_alternative<PencilProductSpec<Q>>(a));
    const auto& sa = std::get<PencilProductSpec<Q>>(a);
    CHECK(sa.m() == 6);
    CHECK(sa.params[1].t == Q(-1, 2));
    const auto b = parse_pencil_spec(std::string(R"({"field": "Fp:101", "q1": "x", "q2": "y", "t": [3], "h": "x*y + z^2"})"));
    REQUIRE(std::holds_alternative<PencilProductSpec<ModP>>(b));
    CHECK(std::get<PencilProductSpec<ModP>>(b).h.has_value());
    CHECK_THROWS_AS(parse_pencil_spec(std::string("{not json")), InputError);
    CHECK_THROWS_AS(parse_pencil_spec(std::string(R"({"q1": "x"})")), InputError);
    CHECK_THROWS_AS(parse_pencil_spec(std::string(R"({"q1": "x^2", "q2": "y", "t": []})")), InputError);
    CHECK_THROWS_AS(parse_pencil_spec(std::string(R"({"field": "Fp:100", "q1": "x", "q2": "y", "t": []})")), InputError);
  }
}
