#include <gtest/gtest.h>

#include "pdt/bounded_search.hpp"
#include "pdt/error.hpp"
#include "pdt/psigma_ideal.hpp"
#include "support.hpp"

namespace pdt {
namespace {

using test::vec;
using test::X;

Binomial binomial(ZxVector plus, ZxVector minus) {
  return Binomial{PSigmaMonomial(std::move(plus)), PSigmaMonomial(std::move(minus))};
}

TEST(Monomial, ExponentsMustBeInPositiveCone) {
  EXPECT_NO_THROW(PSigmaMonomial(vec({X - 5, 0, 3})));
  EXPECT_THROW(PSigmaMonomial(vec({1 - X, 0})), Error);
}

TEST(Binomials, FromLattice) {
  const auto h = binomials_from_lattice(Lattice(3, {vec({1, -2, 1})}));
  ASSERT_EQ(h.generators.size(), 1u);
  EXPECT_EQ(h.generators[0], binomial(vec({1, 0, 1}), vec({0, 2, 0})));

  EXPECT_TRUE(binomials_from_lattice(Lattice(3)).generators.empty());

  const auto hx = binomials_from_lattice(Lattice(2, {vec({X, -X})}));
  ASSERT_EQ(hx.generators.size(), 1u);
  EXPECT_EQ(hx.generators[0], binomial(vec({X, 0}), vec({0, X})));
}

TEST(Binomials, SignSplitRoundTrip) {
  test::Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const ZxVector v = rng.vector(4, 2, 5);
    const Binomial b = binomial_from_vector(v);
    EXPECT_EQ(b.exponent_difference(), v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_TRUE(b.plus.exponents()[i].is_zero() || b.minus.exponents()[i].is_zero());
    }
  }
}

TEST(ToricIdeal, FromPoints) {
  const auto h = toric_ideal_from_points(test::plane_gens(), 2);
  EXPECT_TRUE(lattice_equal(h.support, Lattice(3, {vec({1, -2, 1})})));
  ASSERT_EQ(h.generators.size(), 1u);
  const Binomial& g = h.generators[0];
  EXPECT_TRUE(g == binomial(vec({1, 0, 1}), vec({0, 2, 0})) || g == binomial(vec({0, 2, 0}), vec({1, 0, 1})));
  EXPECT_TRUE(is_toric(h.support));

  EXPECT_TRUE(toric_ideal_from_points(test::standard_basis(3), 3).generators.empty());

  const auto p = toric_ideal_from_points(test::simplex_points(2), 2);
  EXPECT_TRUE(lattice_equal(p.support, Lattice(3, {vec({1, 0, 0})})));
  ASSERT_EQ(p.generators.size(), 1u);
  EXPECT_EQ(p.generators[0], binomial(vec({1, 0, 0}), vec({0, 0, 0})));
}

TEST(ToricIdeal, GeneratorsAreSupportMembers) {
  test::Rng rng(42);
  for (int k = 0; k < 40; ++k) {
    std::vector<ZxVector> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(rng.vector(2, 1, 3));
    const auto h = toric_ideal_from_points(pts, 2);
    EXPECT_TRUE(is_toric(h.support));
    for (const auto& g : h.generators) EXPECT_TRUE(binomial_member(h, g));
  }
}

TEST(ToricIdeal, Membership) {
  const auto h = toric_ideal_from_points(test::plane_gens(), 2);
  EXPECT_TRUE(binomial_member(h, binomial(vec({2, 0, 2}), vec({0, 4, 0}))));
  EXPECT_FALSE(binomial_member(h, binomial(vec({1, 0, 0}), vec({0, 1, 0}))));
  EXPECT_TRUE(binomial_member(h, h.generators[0]));
  EXPECT_THROW(binomial_member(h, binomial(vec({1, 0}), vec({0, 1}))), Error);
}

TEST(ToricIdeal, MembershipInvariantUnderCommonFactor) {
  test::Rng rng(43);
  const auto h = toric_ideal_from_points(test::plane_gens(), 2);
  const std::vector<Binomial> samples{h.generators[0], binomial(vec({1, 0, 0}), vec({0, 1, 0})),
                                      binomial(vec({X, 0, X}), vec({0, 2 * X, 0}))};
  for (const auto& b : samples) {
    for (int k = 0; k < 20; ++k) {
      ZxVector m;
      for (int i = 0; i < 3; ++i) m.push_back(rng.positive_poly(2, 4));
      const Binomial shifted = binomial(b.plus.exponents() + m, b.minus.exponents() + m);
      EXPECT_EQ(binomial_member(h, shifted), binomial_member(h, b));
    }
  }
}

TEST(Homogeneity, Examples) {
  const auto h = is_homogeneous(test::plane_gens(), 2);
  EXPECT_TRUE(h.homogeneous);
  ASSERT_TRUE(h.witness);
  EXPECT_EQ(h.witness->first, vec({1, 0}));
  EXPECT_EQ(h.witness->second, X);

  EXPECT_FALSE(is_homogeneous(test::simplex_points(2), 2).homogeneous);
  EXPECT_TRUE(is_homogeneous(test::standard_basis(3), 3).homogeneous);
}

TEST(Homogeneity, WitnessesAreExact) {
  test::Rng rng(44);
  for (int k = 0; k < 60; ++k) {
    std::vector<ZxVector> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(rng.vector(2, 1, 3));
    const auto h = is_homogeneous(pts, 2);
    if (!h.witness) continue;
    EXPECT_TRUE(h.homogeneous);
    EXPECT_FALSE(h.witness->second.is_zero());
    for (const auto& u : pts) EXPECT_EQ(dot(u, h.witness->first), h.witness->second);
  }
}

TEST(SigmaDimension, Cases) {
  EXPECT_EQ(sigma_dimension(test::plane_gens(), 2, false), 2u);
  EXPECT_EQ(sigma_dimension(test::plane_gens(), 2, true), 1u);
  EXPECT_EQ(sigma_dimension(test::simplex_points(2), 2, true), 2u);
}

TEST(InvariantSubvariety, Examples) {
  const auto s = test::plane();
  const Bounds b = default_bounds(s.generators());
  const auto f1 = invariant_subvariety_ideal(s, Face{{0}, {}, 0}, b);
  EXPECT_EQ(f1.vanishing_coordinates, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(f1.face_generators, std::vector<ZxVector>{vec({X, 1})});

  const auto whole = invariant_subvariety_ideal(s, Face{{0, 1, 2}, {}, 0}, b);
  EXPECT_TRUE(whole.vanishing_coordinates.empty());
  EXPECT_EQ(whole.face_generators, s.generators());

  const auto point = invariant_subvariety_ideal(s, Face{{}, {}, 0}, b);
  EXPECT_EQ(point.vanishing_coordinates, (std::vector<std::size_t>{0, 1, 2}));

  try {
    invariant_subvariety_ideal(s, Face{{1}, {}, 0}, b);
    FAIL() << "expected NotAFace";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotAFace);
  }
}

}  // namespace
}  // namespace pdt
