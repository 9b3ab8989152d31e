#include <gtest/gtest.h>

#include "pdt/bounded_search.hpp"
#include "pdt/divisor.hpp"
#include "pdt/psigma_ideal.hpp"
#include "support.hpp"

namespace pdt {
namespace {

using test::vec;
using test::X;

ZxMatrix random_matrix(test::Rng& rng) {
  const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 3));
  const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 4));
  ZxMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.poly(2, 5);
  }
  // Force dependent columns now and then so kernels are not always trivial.
  if (cols > 1 && rng.integer(0, 2) == 0) {
    const ZxPoly g = rng.poly(1, 3);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, cols - 1) = g * m.at(i, 0);
  }
  return m;
}

TEST(RankLaw, RandomMatrices) {
  test::Rng rng(71);
  for (int k = 0; k < 250; ++k) {
    const ZxMatrix u = random_matrix(rng);
    const Lattice syz = syzygy_basis(u);
    const std::size_t r = test::rank_by_evaluation(u.column_list(), u.rows());
    EXPECT_EQ(rank_qx(u), r);
    EXPECT_EQ(test::rank_by_evaluation(syz.generators(), u.cols()) + r, u.cols());
    EXPECT_EQ(syz.generators().size(), u.cols() - r);
    for (const auto& z : syz.generators()) EXPECT_TRUE(is_zero(u * z));
    EXPECT_TRUE(is_toric(syz));
    const Lattice s1 = saturate(Lattice(u.rows(), u.column_list()));
    EXPECT_TRUE(lattice_equal(saturate(s1), s1));
  }
}

TEST(Complement, RankAndDoubleComplement) {
  test::Rng rng(72);
  for (int k = 0; k < 60; ++k) {
    const ZxMatrix u = random_matrix(rng);
    const Lattice l(u.rows(), u.column_list());
    const Lattice c = complement(l);
    EXPECT_EQ(c.rank() + l.rank(), u.rows());
    const Lattice cc = complement(c);
    EXPECT_TRUE(lattice_subset(l, cc));
    EXPECT_TRUE(lattice_equal(saturate(cc), cc));
    EXPECT_TRUE(lattice_equal(saturate(l), cc));
  }
}

TEST(CharValue, IndependentOfCertificate) {
  test::Rng rng(73);
  for (const auto& s : {test::plane(), test::space()}) {
    const auto fs = facets(s, default_bounds(s.generators()));
    for (const auto& facet : fs) {
      const auto nv = standard_normal_vector(s, facet);
      for (int k = 0; k < 30; ++k) {
        const ZxVector c = rng.vector(s.size(), 2, 4);
        const ZxVector u = combine(s.generators(), c, s.ambient());
        ZxVector perturbed = c;
        for (const auto& z : s.syz().generators()) perturbed = perturbed + scale(rng.poly(2, 4), z);
        EXPECT_EQ(char_value(s, nv, u, c), char_value(s, nv, u, perturbed));
        EXPECT_EQ(char_value(s, nv, u, c), char_value(s, nv, u));
      }
    }
  }
}

TEST(DivCharacter, HomomorphismLaws) {
  test::Rng rng(74);
  const auto s = test::space();
  const DivisorContext ctx(Fan::single(s), default_bounds(s.generators()));
  const auto pts = test::simplex_points(2);
  const DivisorContext p2(projective_fan(pts, 2), default_bounds(pts));
  for (int k = 0; k < 100; ++k) {
    const ZxVector u = combine(s.generators(), rng.vector(4, 2, 5), 3);
    const ZxVector v = combine(s.generators(), rng.vector(4, 2, 5), 3);
    const ZxPoly g = rng.poly(2, 5);
    EXPECT_EQ(div_character(ctx, u + v), div_character(ctx, u) + div_character(ctx, v));
    EXPECT_EQ(div_character(ctx, scale(g, u)), g * div_character(ctx, u));

    const ZxVector a = rng.vector(2, 2, 5);
    const ZxVector b = rng.vector(2, 2, 5);
    EXPECT_EQ(div_character(p2, a + b), div_character(p2, a) + div_character(p2, b));
    EXPECT_EQ(div_character(p2, scale(g, a)), g * div_character(p2, a));
  }
}

TEST(ToricIdeal, SupportIsSyzygyLattice) {
  test::Rng rng(75);
  for (int k = 0; k < 60; ++k) {
    const ZxMatrix u = random_matrix(rng);
    const auto h = toric_ideal_from_points(u);
    EXPECT_TRUE(lattice_equal(h.support, syzygy_basis(u)));
    for (const auto& b : h.generators) {
      EXPECT_TRUE(is_zero(u * b.exponent_difference()));
      EXPECT_TRUE(binomial_member(h, b));
    }
  }
}

TEST(Semimodule, MembershipVerdictsRespectCertificates) {
  test::Rng rng(76);
  const auto s = test::space();
  const Bounds b = default_bounds(s.generators());
  for (int k = 0; k < 60; ++k) {
    const ZxVector w = rng.vector(3, 2, 4);
    const auto r = sm_member(s, w, b);
    if (r.verdict.is_yes()) {
      ASSERT_TRUE(r.coefficients);
      EXPECT_TRUE(within_bounds(*r.coefficients, b));
      for (const auto& c : *r.coefficients) EXPECT_GE(test::sign_by_evaluation(c), 0);
      EXPECT_EQ(combine(s.generators(), *r.coefficients, 3), w);
    }
    // A member of S is never reported No.
    if (r.verdict.is_no()) {
      ZxVector g;
      for (int i = 0; i < 4; ++i) g.push_back(rng.positive_poly(1, 2));
      EXPECT_FALSE(sm_member(s, combine(s.generators(), g, 3), b).verdict.is_no());
    }
  }
}

}  // namespace
}  // namespace pdt
