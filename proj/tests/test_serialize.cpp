#include <doctest.h>

#include "qpl/serialize.hpp"

using namespace qpl;

TEST_SUITE("serialize") {
  TEST_CASE("presentations round trip") {
    QOptions o;
    o.include_plucker = true;
    for (const auto& p : {build_R(4, 2), build_B(4, 3), build_Q(3, 2, o), build_F(3), build_G(3), build_R_colimit(4, 4),
                          quadratic_dual(build_R0(3, 2))}) {
      const json j = to_json(p);
      const Presentation back = presentation_from_json(j);
      CHECK(back.name == p.name);
      CHECK(back.alphabet.labels() == p.alphabet.labels());
      REQUIRE(back.relations.size() == p.relations.size());
      for (std::size_t r = 0; r < p.relations.size(); ++r) {
        CHECK(back.relations[r].poly == p.relations[r].poly);
        CHECK(back.relations[r].source == p.relations[r].source);
      }
      CHECK(back.order == p.order);
      CHECK(to_json(back).dump() == j.dump());
    }
  }

  TEST_CASE("custom order round trip") {
    Presentation p = build_B(3, 2);
    p.order.scheme = OrderScheme::Custom;
    p.order.custom = {p.alphabet.label(2), p.alphabet.label(0), p.alphabet.label(1)};
    CHECK(presentation_from_json(to_json(p)).order == p.order);
  }

  TEST_CASE("polynomial canonical form") {
    const Presentation p = build_R(3, 2);
    const FreePoly x = p.relations[0].poly;
    CHECK(poly_json(x + Rational(-1) * x, p.alphabet).empty());
    CHECK(poly_from_json(poly_json(x, p.alphabet), p.alphabet) == x);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(presentation_from_json(json::object()), ParseError);
    json j = to_json(build_B(3, 2));
    j["schema_version"] = 99;
    CHECK_THROWS_AS(presentation_from_json(j), ParseError);
    j = to_json(build_B(3, 2));
    j["relations"][0]["terms"][0]["word"][0] = "r[9,8|7]";
    CHECK_THROWS_AS(presentation_from_json(j), GeneratorMismatch);
  }

  TEST_CASE("large integers become strings") {
    CHECK(integer_json(Integer(42)) == json(42));
    CHECK(integer_json(Integer("123456789012345678901234567890")).is_string());
  }

  TEST_CASE("reports carry their verdicts") {
    const GroebnerReport r = complete(orient(build_B(3, 2)), 4);
    const json j = to_json(r, build_B(3, 2).alphabet);
    CHECK(j.at("num_rules") == 8);
    CHECK(j.at("quadratic_gb") == true);
    CHECK(j.at("rules").size() == 8);
  }
}
