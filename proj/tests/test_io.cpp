#include <gtest/gtest.h>

#include "isorep/error.hpp"
#include "isorep/io.hpp"

using namespace isorep;
using io::json;

TEST(Integers, SmallValuesAreNumbersLargeOnesStrings) {
  EXPECT_EQ(io::to_json(Int(-17)), json(-17));
  const Int big("123456789012345678901234567890");
  const json j = io::to_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(io::int_from_json(j), big);
  EXPECT_EQ(io::int_from_json(json("-42")), Int(-42));
  EXPECT_EQ(io::int_from_json(json(18446744073709551615ull)), Int("18446744073709551615"));
}

TEST(Integers, RejectsNonIntegers) {
  EXPECT_THROW(io::int_from_json(json(1.5)), InputError);
  EXPECT_THROW(io::int_from_json(json("12a")), InputError);
  EXPECT_THROW(io::int_from_json(json("")), InputError);
  EXPECT_THROW(io::int_from_json(json(true)), InputError);
  EXPECT_THROW(io::vector_from_json(json({{"x", 1}})), InputError);
  EXPECT_THROW(io::matrix_from_json(json::parse("[[1,2],[3]]"), 2), InputError);
}

TEST(Matrices, RoundTripAndEmptyWidth) {
  const IntMatrix m = IntMatrix::from_rows({{1, -2, 3}, {0, 4, 5}});
  EXPECT_EQ(io::matrix_from_json(io::to_json(m), 3), m);
  const IntMatrix e = io::matrix_from_json(json::array(), 4);
  EXPECT_EQ(e.rows(), 0u);
  EXPECT_EQ(e.cols(), 4u);
}

TEST(Complexes, RoundTripAndFaceClosure) {
  const CwComplex s = simplex(3);
  EXPECT_EQ(io::complex_from_json(io::to_json(s)), s);
  const json partial = json::parse(R"({"cells": [
      {"id": "a", "dim": 0}, {"id": "b", "dim": 0},
      {"id": "e", "dim": 1, "faces": ["a", "b"]},
      {"id": "f", "dim": 2, "faces": ["e"]}]})");
  const CwComplex c = io::complex_from_json(partial);
  EXPECT_EQ(c.cell("f").faces, (std::set<std::string>{"a", "b", "e"}));
  EXPECT_FALSE(c.simplicial());
}

TEST(Complexes, MalformedInput) {
  EXPECT_THROW(io::complex_from_json(json::parse("{}")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"cells": [{"dim": 0}]})")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"cells": [{"id": "a", "dim": "0"}]})")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"cells": [{"id": "a", "dim": 0, "faces": "b"}]})")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"cells": [{"id": "a", "dim": 0}], "simplicial": 1})")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"cells": [{"id": "a", "dim": 0}, {"id": "a", "dim": 0}]})")),
               InputError);
}

TEST(Tori, CanonicalisedOnLoad) {
  const TorusSubgroup h = io::torus_from_json(json::parse(R"({"ambient_rank": 2, "characters": [[2, -2], [3, -3]]})"), 0);
  EXPECT_EQ(h, subgroup_from_characters(2, IntMatrix::from_rows({{1, -1}})));
  EXPECT_EQ(io::to_json(h), json::parse(R"({"ambient_rank": 2, "characters": [[1, -1]]})"));
  EXPECT_TRUE(io::torus_from_json(json::object(), 3).is_full());
  EXPECT_THROW(io::torus_from_json(json::parse(R"({"ambient_rank": -1})"), 0), InputError);
  EXPECT_THROW(io::torus_from_json(json::parse(R"({"characters": [[1, 2, 3]]})"), 2), InputError);
}

TEST(Groupoids, RoundTripIsByteStable) {
  const CellularGroupoid g = hirzebruch();
  const json j = io::to_json(g);
  EXPECT_EQ(io::groupoid_from_json(j), g);
  EXPECT_EQ(io::to_json(io::groupoid_from_json(json::parse(j.dump()))).dump(), j.dump());
}

TEST(Groupoids, ErrorsNameTheCell) {
  json j = io::to_json(cp2_kappanotonto());
  j["groups"]["12"]["characters"] = json::parse("[[1]]");
  try {
    io::groupoid_from_json(j);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("cell '12'"), std::string::npos);
  }
  j.erase("ambient_rank");
  EXPECT_THROW(io::groupoid_from_json(j), InputError);
}

TEST(Families, RoundTrip) {
  const WeightFamily f = {{"0", make_vector({1, -2})}, {"1", make_vector({0, 0})}};
  EXPECT_EQ(io::family_from_json(io::to_json(f)), f);
  EXPECT_THROW(io::family_from_json(json::array()), InputError);
}

TEST(FiniteGroups, TableAndCatalog) {
  const FinGroup q = io::fingroup_from_json(json::parse(R"({"catalog": "quaternion"})"));
  EXPECT_EQ(q, FinGroup::quaternion());
  EXPECT_EQ(io::fingroup_from_json(io::to_json(q)), q);
  EXPECT_EQ(io::fingroup_from_json(json::parse(R"({"catalog": "cyclic", "n": 5})")).order(), 5);
  EXPECT_EQ(io::fingroup_from_json(json::parse(R"({"catalog": "dihedral", "n": 3})")).order(), 6);
  EXPECT_EQ(io::fingroup_from_json(json::parse(R"({"catalog": "symmetric", "n": 3})")), FinGroup::symmetric(3));
  EXPECT_EQ(io::fingroup_from_json(json::parse(R"({"catalog": "trivial"})")).order(), 1);
  EXPECT_EQ(io::fingroup_from_json(json::parse(R"({"order": 2, "table": [[0, 1], [1, 0]]})")), FinGroup::cyclic(2));
}

TEST(FiniteGroups, Malformed) {
  EXPECT_THROW(io::fingroup_from_json(json::parse(R"({"catalog": "cyclic"})")), InputError);
  EXPECT_THROW(io::fingroup_from_json(json::parse(R"({"catalog": "monster"})")), InputError);
  EXPECT_THROW(io::fingroup_from_json(json::parse(R"({"order": 3, "table": [[0, 1], [1, 0]]})")), InputError);
  EXPECT_THROW(io::fingroup_from_json(json::parse(R"({"table": [[0, 1], [1, "x"]]})")), InputError);
  EXPECT_THROW(io::fingroup_from_json(json::parse(R"({"table": [[0, 1], [1, 1]]})")), InputError);
}

TEST(Instances, SegmentFromJson) {
  const json j = json::parse(R"({
    "complex": {"cells": [{"id": "0", "dim": 0}, {"id": "1", "dim": 0}, {"id": "01", "dim": 1, "faces": ["0", "1"]}]},
    "vertex_groups": {"0": {"catalog": "trivial"}, "1": {"catalog": "trivial"}},
    "edge_groups": {"01": {"catalog": "cyclic", "n": 2}}
  })");
  const DoubleCosetInstance inst = io::instance_from_json(j);
  ASSERT_EQ(inst.edges.size(), 1u);
  const auto r = double_cosets(inst);
  EXPECT_EQ(r.count, 2u);
  const json out = io::to_json(inst, r);
  EXPECT_EQ(out["count"], 2);
  EXPECT_EQ(out["states"], 4);
  EXPECT_EQ(out["half_edges"], json::parse(R"([["0", "01"], ["1", "01"]])"));
  EXPECT_EQ(out["representatives"], json::parse("[[0, 0], [0, 1]]"));
}

TEST(Instances, ExplicitHoms) {
  json j = json::parse(R"({
    "complex": {"cells": [{"id": "0", "dim": 0}, {"id": "1", "dim": 0}, {"id": "01", "dim": 1, "faces": ["0", "1"]}]},
    "vertex_groups": {"0": {"catalog": "cyclic", "n": 2}, "1": {"catalog": "cyclic", "n": 4}},
    "edge_groups": {"01": {"catalog": "cyclic", "n": 4}},
    "homs": [{"vertex": "0", "edge": "01", "image": [0, 2]},
             {"vertex": "1", "edge": "01", "map": "identity"}]
  })");
  EXPECT_EQ(double_cosets(io::instance_from_json(j)).count, 1u);
  j["homs"][1]["map"] = "trivial";
  EXPECT_EQ(double_cosets(io::instance_from_json(j)).count, 2u);
  j["homs"][0]["image"] = json::parse("[0, 1]");
  EXPECT_THROW(io::instance_from_json(j), InputError);
  j["homs"][0]["image"] = json::parse("[0, 2]");
  j["homs"][1]["map"] = "identity";
  j["vertex_groups"]["1"] = json::parse(R"({"catalog": "cyclic", "n": 2})");
  EXPECT_THROW(io::instance_from_json(j), InputError);
  j["homs"].erase(1);
  EXPECT_THROW(io::instance_from_json(j), InputError);
}

TEST(H2Override, Parsing) {
  const CohomologyGroup h = io::parse_h2_override("free=2,torsion=6,4");
  EXPECT_EQ(h.free_rank, 2u);
  EXPECT_EQ(h.torsion, (std::vector<Int>{2, 12}));
  EXPECT_EQ(io::parse_h2_override("free=0"), CohomologyGroup{});
  EXPECT_EQ(io::parse_h2_override("free=1,torsion=").free_rank, 1u);
  EXPECT_THROW(io::parse_h2_override("torsion=2"), InputError);
  EXPECT_THROW(io::parse_h2_override("free=x"), InputError);
  EXPECT_THROW(io::parse_h2_override("free=1,3"), InputError);
  EXPECT_THROW(io::parse_h2_override("free=1,torsion=-2"), InputError);
}

TEST(Examples, ParametersAndErrors) {
  EXPECT_EQ(io::build_example("cp1", {{"chi", {2}}}), cp1(make_vector({2})));
  EXPECT_EQ(io::build_example("simplex_sphere", {{"characters", {{1, 0}, {0, 1}}}}),
            simplex_sphere(IntMatrix::from_rows({{1, 0}, {0, 1}})));
  EXPECT_THROW(io::build_example("nope", nullptr), InputError);
  EXPECT_THROW(io::build_example("segment", nullptr), InputError);
  EXPECT_THROW(io::build_example("cp1", json::array()), InputError);
  EXPECT_THROW(io::build_example("simplex_sphere", {{"characters", json::array()}}), InputError);
}

TEST(Results, RepGroupAndKappaEncodings) {
  const RepGroup r = rep_circle(cp2_kappanotonto());
  const json j = io::to_json(r);
  EXPECT_EQ(j["free_rank"], 3);
  EXPECT_EQ(j["torsion"], json::array());
  EXPECT_EQ(j["generators"].size(), 3u);
  const auto k = kappa_lift_rank1(cp2_kappanotonto(),
                                  {{"0", make_vector({-1, 2})}, {"1", make_vector({3, 2})}, {"2", make_vector({1, 4})}},
                                  {false, 24});
  const json jk = io::to_json(k);
  EXPECT_TRUE(jk["lift"].is_null());
  EXPECT_EQ(jk["message"], "no lift; 8 assignments checked");
}
