#include <catch_amalgamated.hpp>

#include "twcech/io.hpp"

using namespace twcech;

TEST_CASE("scalars round trip") {
  const Integer big("123456789012345678901234567890");
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_from_json(integer_to_json(Integer(-7))) == -7);
  CHECK(integer_to_json(Integer(-7)) == Json(-7));
  CHECK(rational_from_json(rational_to_json(Rational(-3, 8))) == Rational(-3, 8));
  CHECK(rational_from_json(Json("5")) == 5);
  CHECK(circle_to_json(Circle(Rational(-1, 3))) == Json("2/3 mod 1"));
  CHECK_THROWS_AS(integer_from_json(Json("x1")), SchemaError);
  CHECK_THROWS_AS(rational_from_json(Json(true)), SchemaError);
}

TEST_CASE("instances round trip") {
  for (const auto& name : example_names()) {
    const auto in = make_example(name);
    const auto j = instance_to_json(in);
    CHECK(j["schema"] == kInstanceSchema);
    const auto back = instance_from_json(j);
    CHECK(back.instance.nerve.facets() == in.nerve.facets());
    CHECK(back.instance.twist.F == in.twist.F);
    CHECK(back.instance.setup.has_value() == in.setup.has_value());
    if (in.setup) CHECK(back.instance.setup->s == in.setup->s);
    CHECK(instance_to_json(back.instance) == j);
  }
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_json("{"), SchemaError);
  CHECK_THROWS_AS(instance_from_json(parse_json(R"({"schema":"other/1"})")), SchemaError);
  CHECK_THROWS_AS(nerve_from_json(parse_json(R"({"facets":[[0,"a"]]})")), SchemaError);
  CHECK_THROWS_AS(nerve_from_json(parse_json(R"({})")), SchemaError);
  const auto s2 = Nerve::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK_THROWS_AS(
      twist_from_json(s2, parse_json(R"({"n":1,"support":[{"simplex":[0,1,2],"value":[1,2]}]})")),
      SchemaError);
  CHECK_THROWS_AS(
      twist_from_json(s2, parse_json(R"({"n":1,"support":[{"simplex":[0,1,4],"value":[1]}]})")),
      NotInNerve);
  const auto d3 = Nerve::from_facets({{0, 1, 2, 3}});
  CHECK_THROWS_AS(
      twist_from_json(d3, parse_json(R"({"n":1,"support":[{"simplex":[0,1,2],"value":[1]}]})")),
      NotClosed);
}

TEST_CASE("groupoids") {
  const auto j = parse_json(R"({"group":[2],"set":["p","q"],"action":[[1,0]],
    "covers":[{"objects":[[0],[1]],"arrows":[[0,1,2,3]]}]})");
  const auto spec = groupoid_from_json(j);
  CHECK(spec.groupoid.groupoid.arrow_count() == 4);
  CHECK(spec.covers.size() == 1);
  CHECK(groupoid_from_json(groupoid_to_json(spec.groupoid, spec.covers)).covers.size() == 1);
  const auto trivial = groupoid_from_json(parse_json(R"({"group":[3],"set":["p"]})"));
  CHECK(trivial.covers.size() == 1);
  CHECK(trivial.groupoid.groupoid.arrow_count() == 3);
  CHECK_THROWS_AS(groupoid_from_json(parse_json(R"({"group":[2],"set":["p","q"],"action":[[0,0]]})")),
                  SchemaError);
  CHECK_THROWS_AS(groupoid_from_json(parse_json(
                      R"({"group":[2],"set":["p"],"covers":[{"objects":[[0]],"arrows":[[9]]}]})")),
                  SchemaError);
}

TEST_CASE("matrices and groups") {
  IntegerMatrix m(2, 3);
  m.set(0, 2, Integer(5));
  m.set(1, 0, Integer(-1));
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CohomologyGroup g;
  g.rank = 1;
  g.torsion = {Integer(2)};
  const auto gj = group_to_json(g);
  CHECK(gj["rank"] == 1);
  CHECK(gj["torsion"] == Json::array({2}));
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
