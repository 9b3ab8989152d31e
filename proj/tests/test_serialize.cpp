#include <gtest/gtest.h>

#include "pdt/bounded_search.hpp"
#include "pdt/error.hpp"
#include "pdt/serialize.hpp"
#include "support.hpp"

namespace pdt {
namespace {

using test::vec;
using test::X;

TEST(Json, PolynomialsLowestDegreeFirst) {
  EXPECT_EQ(to_json(X * X - 3).dump(), "[-3,0,1]");
  EXPECT_EQ(to_json(ZxPoly()).dump(), "[]");
  EXPECT_EQ(poly_from_json(Json::parse("[4, 0, -1]")), 4 - X * X);
  EXPECT_EQ(poly_from_json(Json::parse("[0, 0]")), ZxPoly());
  EXPECT_THROW(poly_from_json(Json::parse("[1.5]")), Error);
  EXPECT_THROW(poly_from_json(Json::parse("\"x\"")), Error);
}

TEST(Json, BigIntegersTravelAsStrings) {
  ZxPoly big(1);
  for (int k = 0; k < 70; ++k) big = big * 2;
  const Json j = to_json(big + X);
  EXPECT_TRUE(j[0].is_string());
  EXPECT_EQ(poly_from_json(j), big + X);
  EXPECT_EQ(poly_from_json(Json::parse("[\"-123456789012345678901234567890\"]")).coeffs().front(),
            Integer("-123456789012345678901234567890"));
}

TEST(Json, RandomPolynomialsRoundTrip) {
  test::Rng rng(81);
  for (int k = 0; k < 200; ++k) {
    const ZxVector v = rng.vector(3, 4, 1000);
    EXPECT_EQ(vector_from_json(Json::parse(to_json(v).dump()), 3), v);
  }
}

TEST(Json, SemimoduleAndLattice) {
  const auto s = test::plane();
  const Json j = semimodule_to_json(s);
  EXPECT_EQ(j.dump(), R"({"ambient":2,"generators":[[[0,1],[1]],[[0,1],[2]],[[0,1],[3]]]})");
  EXPECT_EQ(semimodule_from_json(j, Bounds{2, 12}).generators(), s.generators());
  EXPECT_THROW(semimodule_from_json(Json::parse(R"({"ambient":3,"generators":[[[1],[2]]]})"), Bounds{2, 12}),
               Error);
  const Lattice l = lattice_from_json(lattice_to_json(s.md()));
  EXPECT_TRUE(lattice_equal(l, s.md()));
}

TEST(Json, FanRoundTrip) {
  const Fan f = projective_fan(test::simplex_points(2), 2);
  const Fan g = fan_from_json(fan_to_json(f), Bounds{2, 12});
  ASSERT_EQ(g.size(), f.size());
  EXPECT_EQ(g.gluing_map(), f.gluing_map());
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(g.cone(i).generators(), f.cone(i).generators());
  EXPECT_THROW(fan_from_json(Json::parse(R"({"cones":[]})"), Bounds{2, 12}), Error);
}

TEST(Json, DivisorsUseClassIds) {
  const auto s = test::plane();
  const DivisorContext ctx(Fan::single(s), default_bounds(s.generators()));
  const WeilDivisor d{{ZxPoly(1), X}};
  const Json j = divisor_to_json(ctx, d);
  EXPECT_EQ(j.dump(), R"({"classes":[{"id":1,"coeff":[1]},{"id":3,"coeff":[0,1]}]})");
  EXPECT_EQ(divisor_from_json(ctx, j), d);
  EXPECT_THROW(divisor_from_json(ctx, Json::parse(R"({"classes":[{"id":0,"coeff":[1]}]})")), Error);
}

TEST(Json, ElementsAndBounds) {
  const auto f = element_from_json(Json::parse(R"([{"exponent":[[0,1],[1]],"coeff":"-3/6"},{"exponent":[[],[1]]}])"), 2);
  ASSERT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.terms()[0].coefficient, mpq_class(-1, 2));
  EXPECT_EQ(f.terms()[1].coefficient, mpq_class(1));
  EXPECT_EQ(bounds_from_json(to_json(Bounds{3, 7})), (Bounds{3, 7}));
  EXPECT_THROW(bounds_from_json(Json::parse(R"({"max_deg":1,"coeff_box":-1})")), Error);
}

TEST(Json, PresentationFields) {
  const ModulePresentation p(ZxMatrix::from_rows({vec({0, 1, 2}), vec({2, 1, 0})}, 3));
  const Json j = to_json(p);
  EXPECT_EQ(j["gens"], 2);
  EXPECT_EQ(j["relations"].dump(), "[[[],[1],[2]],[[2],[1],[]]]");
  EXPECT_EQ(j["shape"], "Z[x]/(2)");
}

}  // namespace
}  // namespace pdt
