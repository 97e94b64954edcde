#include <gtest/gtest.h>

#include <random>

#include "isorep/error.hpp"
#include "isorep/groupoid.hpp"
#include "isorep/io.hpp"

using namespace isorep;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) { return IntMatrix::from_rows(rows); }

TorusSubgroup ker(std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
  return subgroup_from_characters(n, rows.size() == 0 ? IntMatrix(0, n) : M(rows));
}

CellularGroupoid with_group(const CellularGroupoid& g, const std::string& cell, const TorusSubgroup& h) {
  auto groups = g.groups();
  groups.at(cell) = h;
  return {g.complex(), g.ambient_rank(), groups};
}

}  // namespace

TEST(Validate, Cp2TriangleIsValid) {
  const CellularGroupoid g = cp2_kappanotonto();
  EXPECT_TRUE(validate_groupoid(g).empty());
  for (const char* v : {"0", "1", "2"}) EXPECT_TRUE(g.group(v).is_full());
  EXPECT_EQ(g.group("01"), ker(2, {{1, 0}}));
  EXPECT_EQ(g.group("02"), ker(2, {{0, 1}}));
  EXPECT_EQ(g.group("12"), ker(2, {{1, -1}}));
  EXPECT_EQ(g.group("012"), TorusSubgroup::trivial(2));
}

TEST(Validate, MonotonicityViolationNamesThePair) {
  const CellularGroupoid bad = with_group(cp2_kappanotonto(), "012", TorusSubgroup::full(2));
  const auto v = validate_groupoid(bad);
  ASSERT_EQ(v.size(), 3u);
  for (const auto& x : v) EXPECT_EQ(x.cell, "012");
  EXPECT_EQ(v[0].face, "01");
  EXPECT_EQ(v[1].face, "02");
  EXPECT_EQ(v[2].face, "12");
  EXPECT_THROW(require_valid(bad), DomainError);
}

TEST(Validate, ConstantAssignmentIsValid) {
  const CwComplex c = simplex(3);
  std::map<std::string, TorusSubgroup> groups;
  for (const auto& [id, cell] : c.cells()) groups.emplace(id, ker(2, {{1, 2}}));
  EXPECT_TRUE(validate_groupoid({c, 2, groups}).empty());
}

TEST(Validate, MissingGroupAndRankMismatch) {
  const CellularGroupoid g = cp2_kappanotonto();
  auto groups = g.groups();
  groups.erase("12");
  auto v = validate_groupoid({g.complex(), 2, groups});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].cell, "12");
  EXPECT_THROW(CellularGroupoid(g.complex(), 2, groups).group("12"), InputError);

  v = validate_groupoid(with_group(g, "01", TorusSubgroup::full(3)));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].cell, "01");
}

TEST(Toric, HirzebruchIsOneToric) {
  const CellularGroupoid g = hirzebruch();
  EXPECT_TRUE(validate_groupoid(g).empty());
  EXPECT_TRUE(is_zero_toric(g));
  ASSERT_TRUE(is_one_toric(g));
  const auto chi = *one_toric_characters(g);
  EXPECT_EQ(chi.at("e12"), make_vector({1, 0}));
  EXPECT_EQ(chi.at("e34"), make_vector({1, 0}));
  EXPECT_EQ(chi.at("e14"), make_vector({0, 1}));
  EXPECT_EQ(chi.at("e23"), make_vector({1, -1}));
  // I_12 = I_34 = 1 x S^1.
  EXPECT_EQ(g.group("e12"), g.group("e34"));
  EXPECT_EQ(g.group("e12").annihilator().basis(), M({{1, 0}}));
}

TEST(Toric, NonPrimitiveEdgeIsNotOneToric) {
  const CellularGroupoid g = cp1(make_vector({2}));
  EXPECT_TRUE(is_zero_toric(g));
  EXPECT_FALSE(is_one_toric(g));
  EXPECT_EQ(structure(g.group("01")).pi0, (std::vector<Int>{2}));
}

TEST(Toric, ProperVertexGroupIsNotZeroToric) {
  const CellularGroupoid g = simplex_sphere(M({{1, 0}, {0, 1}}));
  EXPECT_FALSE(is_zero_toric(g));
  EXPECT_FALSE(is_one_toric(g));
}

TEST(Builders, SimplexSphereOnInterval) {
  const CellularGroupoid g = simplex_sphere(M({{1, 0}, {0, 1}}));
  EXPECT_EQ(g.group("0"), ker(2, {{1, 0}}));
  EXPECT_EQ(g.group("1"), ker(2, {{0, 1}}));
  EXPECT_EQ(g.group("01"), TorusSubgroup::trivial(2));
}

TEST(Builders, QuotientGivesProjectiveSpaceGroupoid) {
  const TorusSubgroup diagonal = ker(3, {{1, -1, 0}, {0, 1, -1}});
  const CellularGroupoid base = simplex_sphere(IntMatrix::identity(3));
  const CellularGroupoid q = quotient(base, diagonal);
  EXPECT_TRUE(validate_groupoid(q).empty());
  for (const auto& [id, h] : q.groups()) EXPECT_TRUE(contains(h, base.group(id)));
  // Fixed points: Z e_i meets the sum-zero characters only in 0.
  for (const char* v : {"0", "1", "2"}) EXPECT_TRUE(q.group(v).is_full());
  EXPECT_EQ(q.group("01"), ker(3, {{1, -1, 0}}));
  EXPECT_EQ(q.group("12"), ker(3, {{0, 1, -1}}));
  EXPECT_EQ(q.group("012").dimension(), 1u);
  EXPECT_EQ(q.group("012"), diagonal);
  for (const auto& [id, h] : q.groups()) EXPECT_TRUE(contains(h, diagonal));
}

TEST(Builders, Cp1PrimitiveCharacterOnCircle) {
  const CellularGroupoid g = cp1(make_vector({1}));
  EXPECT_TRUE(g.group("0").is_full());
  EXPECT_TRUE(g.group("1").is_full());
  EXPECT_EQ(g.group("01"), TorusSubgroup::trivial(1));
}

TEST(Builders, InvalidSegmentIsRejected) {
  EXPECT_THROW(segment(ker(1, {{1}}), TorusSubgroup::full(1), TorusSubgroup::full(1)), DomainError);
}

TEST(Builders, AllExamplesValidateAndRoundTrip) {
  for (const char* name : {"simplex_sphere", "quotient", "cp1", "hirzebruch", "cp2_kappanotonto"}) {
    const CellularGroupoid g = io::build_example(name, nullptr);
    EXPECT_TRUE(validate_groupoid(g).empty()) << name;
    const CellularGroupoid back = io::groupoid_from_json(io::to_json(g));
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(io::to_json(back).dump(), io::to_json(g).dump()) << name;
  }
  const CellularGroupoid s = io::build_example("segment", {{"ambient_rank", 2}, {"h01", {{1, 0}}}});
  EXPECT_TRUE(validate_groupoid(s).empty());
  EXPECT_EQ(io::groupoid_from_json(io::to_json(s)), s);
}

TEST(Skeleton, RestrictionPreservesValidity) {
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    IntMatrix chars(4, 3);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 3; ++c) chars(r, c) = static_cast<long>(rng() % 5) - 2;
    const CellularGroupoid g = simplex_sphere(chars);
    for (int k = 0; k <= 3; ++k) {
      const CellularGroupoid r = restrict_to_skeleton(g, k);
      EXPECT_TRUE(validate_groupoid(r).empty());
      EXPECT_EQ(r.complex(), skeleton(g.complex(), k));
    }
  }
}
