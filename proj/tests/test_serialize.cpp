#include <doctest.h>

#include "pbw/serialize.hpp"

using namespace pbw;

TEST_CASE("rationals") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
}

TEST_CASE("flag type round trip") {
  const FlagType t(5, {1, 3});
  CHECK(flag_type_from_json(to_json(t)) == t);
  CHECK_THROWS_AS(flag_type_from_json(Json::parse(R"({"n": 3})")), ValidationError);
  CHECK_THROWS_AS(flag_type_from_json(Json::parse(R"({"n": 3, "d": [2, 1]})")), ValidationError);
}

TEST_CASE("point set round trip") {
  const auto s = lattice_points(PolytopeSpec(FlagType(4, {1, 3}), Weight({1, 0, 1}), 1));
  const auto j = to_json(s);
  CHECK(j["points"][0].empty());
  CHECK(j["size"] == s.size());
  CHECK(point_set_from_json(j).points == s.points);
  const auto t = FlagType::full(3);
  const auto small = lattice_points(PolytopeSpec(t, Weight({1, 0}), 0));
  CHECK(to_json(small)["points"].dump() == R"([[],[[[3,1],1]],[[[2,1],1]]])");
}

TEST_CASE("point set rejects foreign coordinates") {
  const auto bad = Json::parse(R"({"flag_type": {"n": 3, "d": [1]}, "points": [[[[3, 2], 1]]]})");
  CHECK_THROWS_AS(point_set_from_json(bad), ValidationError);
  const auto neg = Json::parse(R"({"flag_type": {"n": 3, "d": [1]}, "points": [[[[3, 1], -1]]]})");
  CHECK_THROWS_AS(point_set_from_json(neg), ValidationError);
}

TEST_CASE("flag point round trip") {
  const auto U = fixed_point_subspaces(AdmissibleCollection(FlagType::full(3), {{3}, {1, 3}}));
  const auto j = to_json(U);
  CHECK(j["subspaces"]["1"].dump() == R"([["0/1"],["0/1"],["1/1"]])");
  const auto back = flag_point_from_json(j);
  CHECK(back.subspaces() == U.subspaces());
  auto broken = j;
  broken["subspaces"]["2"] = Json::parse(R"([["1/1", "0/1"], ["1/1", "0/1"], ["0/1", "0/1"]])");
  CHECK_THROWS_AS(flag_point_from_json(broken), ValidationError);
}

TEST_CASE("fiber and report JSON") {
  const auto f = fiber_fixed_point(AdmissibleCollection(FlagType::full(3), {{2}, {2, 3}}));
  const auto j = to_json(f);
  CHECK(j["linear_dim"] == 1);
  CHECK(j["projective_dim"] == 0);
  CHECK(j["basis"].dump() == "[[2,1]]");
  const RelationSpec spec(FlagType::full(3), Weight({1, 0}), 0, 3);
  const auto r = to_json(spec, hilbert_compare(spec));
  CHECK(r["match"] == true);
  CHECK(r["quotient_dims"].dump() == "[1,2,0,0]");
  CHECK(dilation_csv({2, 3, 4}) == "t,count\n1,2\n2,3\n3,4\n");
}
