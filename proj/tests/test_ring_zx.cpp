#include <gtest/gtest.h>

#include "pdt/error.hpp"
#include "pdt/rational_function.hpp"
#include "pdt/serialize.hpp"
#include "pdt/zx_poly.hpp"
#include "support.hpp"

namespace pdt {
namespace {

using test::X;

TEST(OrderSign, LeadingCoefficientDecides) {
  EXPECT_EQ(order_sign(ZxPoly()), OrderSign::Zero);
  EXPECT_EQ(order_sign(X - 5), OrderSign::Positive);
  EXPECT_EQ(order_sign(-X + 100), OrderSign::Negative);
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(X, ZxPoly(2)), Comparison::Greater);
  EXPECT_EQ(compare(X - 1, X - 2), Comparison::Greater);
  EXPECT_EQ(compare(X * X - 3, X * X - 3), Comparison::Equal);
  EXPECT_EQ(compare(-X, ZxPoly(-1000)), Comparison::Less);
}

TEST(Compare, AgreesWithEvaluationBeyondRoots) {
  test::Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const ZxPoly f = rng.poly(3, 9);
    const ZxPoly g = rng.poly(3, 9);
    const int s = test::sign_by_evaluation(f - g);
    const Comparison expect = s > 0 ? Comparison::Greater : s < 0 ? Comparison::Less : Comparison::Equal;
    EXPECT_EQ(compare(f, g), expect) << f << " vs " << g;
  }
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ((X + 1) * (X - 1), X * X - 1);
  const ZxPoly zero = (X - 1) + (-X + 1);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(zero.coeffs().empty());
  EXPECT_EQ(ZxPoly(2) * (X + 2), ZxPoly({4, 2}));
}

TEST(Arithmetic, ProductMatchesEvaluation) {
  test::Rng rng(12);
  for (int k = 0; k < 300; ++k) {
    const ZxPoly f = rng.poly(4, 20);
    const ZxPoly g = rng.poly(4, 20);
    for (long at : {-3L, 0L, 2L, 17L}) {
      const Integer a(at);
      EXPECT_EQ((f * g).evaluate(a), f.evaluate(a) * g.evaluate(a));
      EXPECT_EQ((f + g).evaluate(a), f.evaluate(a) + g.evaluate(a));
      EXPECT_EQ((f - g).evaluate(a), f.evaluate(a) - g.evaluate(a));
    }
  }
}

TEST(Arithmetic, BigCoefficientsStayExact) {
  ZxPoly f = X + 1;
  for (int k = 0; k < 6; ++k) f = f * f;  // (x+1)^64
  EXPECT_EQ(f.degree(), 64);
  EXPECT_EQ(f.coeff(32), Integer("1832624140942590534"));
  EXPECT_EQ(f.evaluate(1), Integer("18446744073709551616"));
}

TEST(ContentPrimitive, Examples) {
  auto a = content_primitive(ZxPoly({4, 2}));
  EXPECT_EQ(a.content, 2);
  EXPECT_EQ(a.primitive, X + 2);
  auto b = content_primitive(X * X - 1);
  EXPECT_EQ(b.content, 1);
  EXPECT_EQ(b.primitive, X * X - 1);
  auto c = content_primitive(ZxPoly({0, -6}));
  EXPECT_EQ(c.content, 6);
  EXPECT_EQ(c.primitive, -X);
  EXPECT_THROW(content_primitive(ZxPoly()), Error);
}

TEST(Division, ExactQuotients) {
  EXPECT_EQ(*divide_exact(X * X - 1, X + 1), X - 1);
  EXPECT_FALSE(divide_exact(X, ZxPoly(2)).has_value());
  EXPECT_FALSE(divide_exact(X, ZxPoly()).has_value());
  EXPECT_EQ(gcd(ZxPoly({4, 2}), ZxPoly({6, 3})), X + 2);
  EXPECT_EQ(gcd(ZxPoly(), ZxPoly()), ZxPoly());
}

TEST(PositiveCone, ClosedUnderSumAndProduct) {
  test::Rng rng(13);
  for (int k = 0; k < 1000; ++k) {
    const ZxPoly f = rng.positive_poly(3, 7);
    const ZxPoly g = rng.positive_poly(3, 7);
    EXPECT_TRUE(in_positive_cone(f + g));
    EXPECT_TRUE(in_positive_cone(f * g));
  }
}

TEST(Order, TotalAndTranslationInvariant) {
  test::Rng rng(14);
  for (int k = 0; k < 500; ++k) {
    const ZxPoly f = rng.poly(3, 5);
    const ZxPoly g = rng.poly(3, 5);
    const ZxPoly h = rng.poly(3, 5);
    EXPECT_EQ(compare(f, g), compare(f + h, g + h));
    const Comparison fg = compare(f, g);
    const Comparison gf = compare(g, f);
    EXPECT_EQ(fg == Comparison::Less, gf == Comparison::Greater);
    EXPECT_EQ(fg == Comparison::Equal, f == g);
    if (compare(f, g) != Comparison::Greater && compare(g, h) != Comparison::Greater) {
      EXPECT_NE(compare(f, h), Comparison::Greater);
    }
    EXPECT_EQ(order_sign(f * g), order_sign(f) * order_sign(g));
  }
}

TEST(Serialization, RoundTrip) {
  test::Rng rng(15);
  for (int k = 0; k < 200; ++k) {
    const ZxPoly f = rng.poly(5, 1000);
    EXPECT_EQ(poly_from_json(to_json(f)), f);
  }
  EXPECT_EQ(to_json(X - 2).dump(), "[-2,1]");
  EXPECT_EQ(to_json(ZxPoly()).dump(), "[]");
  const ZxPoly big = ZxPoly(Integer("123456789012345678901234567890")) * X;
  EXPECT_EQ(poly_from_json(to_json(big)), big);
  EXPECT_THROW(poly_from_json(Json::parse("[1, \"x\"]")), Error);
  EXPECT_THROW(poly_from_json(Json::parse("3")), Error);
}

TEST(RationalFunction, OrderedFieldBasics) {
  const RationalFunction a(X - 1, X + 1);
  const RationalFunction b(ZxPoly(2), ZxPoly(4));
  EXPECT_EQ(b.num(), ZxPoly(1));
  EXPECT_EQ(b.den(), ZxPoly(2));
  EXPECT_EQ(a * (RationalFunction(ZxPoly(1)) / a), RationalFunction(ZxPoly(1)));
  EXPECT_GT(a, RationalFunction(ZxPoly(0)));
  EXPECT_LT(RationalFunction(ZxPoly(1), -X), RationalFunction(ZxPoly(0)));
  EXPECT_EQ(a - a, RationalFunction(ZxPoly(0)));
}

}  // namespace
}  // namespace pdt
