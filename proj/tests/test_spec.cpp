#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "proet/io/spec.hpp"
#include "proet/testing/fixtures.hpp"

using namespace proet;
using namespace proet::testing;

namespace {

const std::string kSpecs = PROET_SPEC_DIR;

}  // namespace

TEST_CASE("curve json roundtrip") {
  for (const auto& c : {nodal_cubic(), cycle_curve(3), degenerate_curve(2, 3)}) {
    const auto back = curve_from_json(curve_to_json(c));
    CHECK(curve_to_json(back) == curve_to_json(c));
    CHECK(pi1_presentation(back) == pi1_presentation(c));
  }
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_curve(rng, 4, 6);
    CHECK(pi1_presentation(curve_from_json(curve_to_json(c))) == pi1_presentation(c));
  }
  CHECK(pi1_presentation(load_curve(kSpecs + "/nodal_cubic.json")) == pi1_presentation(nodal_cubic()));
  CHECK(pi1_presentation(load_curve(kSpecs + "/cycle3.json")) == pi1_presentation(cycle_curve(3)));
  CHECK(pi1_presentation(load_curve("cycle:4")).r == 1);
  CHECK(pi1_presentation(load_curve("degenerate:3,2")).r == 3);
}

TEST_CASE("curve json errors") {
  CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"nodes": []})")), SpecParseError);
  CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"components": [{"id": "C1", "branches": ["p"]}],
      "nodes": [{"a": ["C1", "p"], "b": ["C2", "q"]}]})")),
                  SpecParseError);
  // Disconnected: two components, no nodes.
  CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"components": [{"id": "A", "branches": []},
      {"id": "B", "branches": []}], "nodes": []})")),
                  SpecParseError);
  CHECK_THROWS_AS(load_curve("cycle:x"), SpecParseError);
  CHECK_THROWS_AS(load_curve("degenerate:1"), SpecParseError);
  CHECK_THROWS_AS(load_curve("/nonexistent/curve.json"), SpecParseError);
}

TEST_CASE("matrices in text form") {
  const auto m = matrix_from_json(Json::parse(R"J([["t^2 + 2", "(t + 1)/t"], [1, "1/(t^2 + 1)"]])J"), 3);
  CHECK(m(0, 0) == parse_rational_function("t^2+2", 3));
  CHECK(m(1, 0) == k_constant(1, 3));
  CHECK(matrix_from_json(matrix_to_json(m), 3) == m);
  CHECK(k_text(m(0, 1)) == "(t + 1)/t");
  CHECK(k_text(k_constant(-1, 3)) == "2");
  CHECK(k_text(k_constant(0, 3)) == "0");
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_invertible(rng, 5, 2, 2);
    CHECK(matrix_from_json(matrix_to_json(x), 5) == x);
  }
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["t +"]])"), 3), SpecParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1, 2], [3]])"), 3), SpecParseError);
}

TEST_CASE("groups and towers") {
  CHECK(group_from_json(Json("S3")) == FiniteGroup::symmetric(3));
  const auto d4 = FiniteGroup::dihedral(4);
  CHECK(group_from_json(group_to_json(d4)) == d4);
  CHECK_THROWS_AS(group_from_json(Json("Q7")), SpecParseError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "table": [[0, 1], [1, 1]]})")), SpecParseError);

  const auto chain = load_tower("Z2<Z4<Z8");
  CHECK(chain.size() == 3);
  CHECK(chain.map(1) == QuotientTower::cyclic_chain({2, 4, 8}).map(1));
  CHECK(load_tower("S3").size() == 1);
  CHECK(load_tower(kSpecs + "/tower_d4_z2.json").level(1).order() == 8);
  CHECK_THROWS_AS(load_tower("Z2<S3"), SpecParseError);
  CHECK_THROWS_AS(tower_from_json(Json::parse(R"({"levels": ["Z2", "Z3"], "maps": [["0", "1", "0"]]})")),
                  SpecParseError);
}

TEST_CASE("representation specs") {
  const auto laurent = load_rep(kSpecs + "/cubic_laurent.json");
  REQUIRE(laurent.rep);
  CHECK(laurent.rep->rank() == 2);
  CHECK(determinant(laurent.rep->z_images()[0]) == k_constant(1, 3));

  const auto z2 = load_rep(kSpecs + "/cycle2_z2.json");
  REQUIRE(z2.rep);
  CHECK(z2.rep->factors()[0].images[1] == scalar_matrix(-1, 3));
  CHECK(z2.rep->factors()[1].group.is_trivial());

  const auto sign = load_rep(kSpecs + "/z2_sign.json");
  REQUIRE(sign.quotient);
  REQUIRE(sign.curve);
  CHECK(sign.quotient->image(1) == scalar_matrix(-1, 3));

  const auto s3 = load_rep(kSpecs + "/s3_permutation.json");
  REQUIRE(s3.quotient);
  const auto& g = s3.quotient->group();
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      CHECK(s3.quotient->image(g.mul(a, b)) == s3.quotient->image(a) * s3.quotient->image(b));

  // A missing prime is filled in only when a default is given.
  Json j = load_json_file(kSpecs + "/cubic_scalar.json");
  j.erase("prime");
  CHECK_THROWS_AS(rep_from_json(j), SpecParseError);
  CHECK(rep_from_json(j, {}, 5).rep->prime() == 5);
}

TEST_CASE("representation spec errors") {
  auto bad = [](const char* text) { return rep_from_json(Json::parse(text)); };
  // Not invertible.
  CHECK_THROWS_AS(bad(R"({"curve": "nodal_cubic", "prime": 3, "rank": 1, "z": [[["0"]]]})"), SpecParseError);
  // Wrong number of z images.
  CHECK_THROWS_AS(bad(R"({"curve": "cycle:2", "prime": 3, "rank": 1, "z": []})"), SpecParseError);
  // Not a homomorphism: the generator of Z2 must square to one.
  CHECK_THROWS_AS(bad(R"({"curve": "nodal_cubic", "prime": 5, "rank": 1, "z": [[["1"]]],
      "factors": [{"group": "Z2", "generators": ["1"], "images": [[["2"]]]}]})"),
                  SpecParseError);
  CHECK_THROWS_AS(bad(R"({"curve": "nodal_cubic", "prime": 4, "rank": 1, "z": [[["1"]]]})"), SpecParseError);
  CHECK_THROWS_AS(bad(R"({"kind": "other", "prime": 3, "rank": 1})"), SpecParseError);
  // Finite quotient data that is not surjective.
  CHECK_THROWS_AS(bad(R"({"kind": "finite_quotient", "group": "Z4", "prime": 5, "rank": 1, "z": ["2"],
      "factor_generators": [[]], "images": {"1": [["2"]]}})"),
                  SpecParseError);
  CHECK_THROWS_AS(bad(R"({"curve": "nodal_cubic", "prime": 3, "rank": 1, "z": [[["1"]]], "factors": [{"group": "Z2"}]})"),
                  SpecParseError);
}
