#include <gtest/gtest.h>

#include <vector>

#include "sgr/duality.hpp"
#include "sgr/sampling.hpp"

namespace sgr {
namespace {

LaurentVector row_as_laurent(const GrassPoint& p, std::size_t r) {
  LaurentVector f(p.field());
  for (std::size_t c = 0; c < p.basis().cols(); ++c)
    f.set(static_cast<int>(c) - p.level(), p.basis().at(r, c));
  return f;
}

TEST(ResiduePairing, MonomialTable) {
  Field q = Field::rationals();
  const FieldElement one = FieldElement::one(q);
  auto pair_exps = [&](int a, int b) {
    return residue_pairing(LaurentVector::monomial(q, a, one),
                           LaurentVector::monomial(q, b, one));
  };
  EXPECT_EQ(pair_exps(-1, 0), FieldElement(q, 1));
  EXPECT_EQ(pair_exps(0, -1), FieldElement(q, -1));
  EXPECT_EQ(pair_exps(2, -3), FieldElement(q, -1));
  EXPECT_EQ(pair_exps(-3, 2), FieldElement(q, 1));
  EXPECT_TRUE(pair_exps(1, 1).is_zero());
  EXPECT_TRUE(pair_exps(0, 0).is_zero());
  EXPECT_TRUE(pair_exps(-2, 3).is_zero());
}

TEST(ResiduePairing, BilinearAndAntisymmetric) {
  Field q = Field::rationals();
  SeededRng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentVector f(q), g(q), h(q);
    for (int e = -4; e <= 4; ++e) {
      f.set(e, rng.element(q, 5));
      g.set(e, rng.element(q, 5));
      h.set(e, rng.element(q, 5));
    }
    EXPECT_EQ(residue_pairing(f, g), FieldElement::zero(q) - residue_pairing(g, f));
    EXPECT_EQ(residue_pairing(f + g, h), residue_pairing(f, h) + residue_pairing(g, h));
    EXPECT_TRUE(residue_pairing(f, f).is_zero());
  }
  Field f3 = Field::gf(3);
  EXPECT_THROW(residue_pairing(LaurentVector(q), LaurentVector(f3)), field_mismatch_error);
}

TEST(GramMatrix, LevelOnePinned) {
  Field q = Field::rationals();
  ExactMatrix g = gram_matrix(q, 1);
  EXPECT_TRUE(g.at(0, 0).is_zero());
  EXPECT_EQ(g.at(0, 1), FieldElement(q, -1));
  EXPECT_EQ(g.at(1, 0), FieldElement(q, 1));
  EXPECT_TRUE(g.at(1, 1).is_zero());
}

TEST(GramMatrix, MatchesPairingAndIsAntisymmetric) {
  Field q = Field::rationals();
  const FieldElement one = FieldElement::one(q);
  for (int level = 1; level <= 3; ++level) {
    ExactMatrix g = gram_matrix(q, level);
    const std::size_t n = 2 * static_cast<std::size_t>(level);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const int exp_r = static_cast<int>(r) - level;
        const int exp_c = static_cast<int>(c) - level;
        EXPECT_EQ(g.at(r, c),
                  residue_pairing(LaurentVector::monomial(q, exp_c, one),
                                  LaurentVector::monomial(q, exp_r, one)));
        EXPECT_EQ(g.at(r, c), FieldElement::zero(q) - g.at(c, r));
      }
    EXPECT_EQ(determinant(g), FieldElement(q, 1));
  }
}

TEST(Perp, WorkedLevelTwoPairs) {
  Field q = Field::rationals();
  GrassPoint a = GrassPoint::from_maya(FiniteIndexSet(2, {-2, 1}), q);
  GrassPoint b = GrassPoint::from_maya(FiniteIndexSet(2, {-1, 0}), q);
  EXPECT_EQ(perp(a), b);
  EXPECT_EQ(perp(b), a);
  GrassPoint vplus = GrassPoint::from_maya(FiniteIndexSet(2, {0, 1}), q);
  EXPECT_EQ(perp(vplus), vplus);
}

TEST(Perp, RowsActuallyPairToZero) {
  Field q = Field::rationals();
  SeededRng rng(19);
  for (int level = 1; level <= 3; ++level)
    for (int d = 0; d <= 2 * level; ++d) {
      GrassPoint p = random_point(q, level, d, rng);
      GrassPoint pp = perp(p);
      EXPECT_EQ(pp.dim(), 2 * level - d);
      for (std::size_t r = 0; r < p.basis().rows(); ++r)
        for (std::size_t s = 0; s < pp.basis().rows(); ++s)
          EXPECT_TRUE(
              residue_pairing(row_as_laurent(p, r), row_as_laurent(pp, s)).is_zero());
    }
}

TEST(Perp, InvolutionDimensionIndexExhaustiveGF3) {
  Field f3 = Field::gf(3);
  for (int level = 1; level <= 2; ++level) {
    int count = 0;
    for (int d = 0; d <= 2 * level; ++d)
      for (const GrassPoint& p : enumerate_points(f3, level, d)) {
        ++count;
        GrassPoint pp = perp(p);
        EXPECT_EQ(pp.dim(), 2 * level - d);
        EXPECT_EQ(perp(pp), p);
        EXPECT_EQ(index_of(pp), -index_of(p));
      }
    EXPECT_EQ(count, level == 1 ? 6 : 212);
  }
}

TEST(Perp, InvolutionRationalSamples) {
  Field q = Field::rationals();
  SeededRng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    GrassPoint p = random_point(q, 3, 3, rng);
    EXPECT_EQ(perp(perp(p)), p);
  }
}

TEST(GramTransport, SquaresToIdentityOnSubspaces) {
  Field q = Field::rationals();
  SeededRng rng(29);
  for (int d = 0; d <= 4; ++d) {
    GrassPoint p = random_point(q, 2, d, rng);
    EXPECT_EQ(gram_transport(gram_transport(p)), p);
    EXPECT_EQ(gram_transport(p).dim(), d);
  }
}

TEST(Annihilator, EqualsTransportedPerp) {
  Field f3 = Field::gf(3);
  for (int d = 0; d <= 4; ++d)
    for (const GrassPoint& p : enumerate_points(f3, 2, d)) {
      GrassPoint ann = annihilator(p);
      EXPECT_EQ(ann.dim(), 4 - d);
      EXPECT_EQ(ann, gram_transport(perp(p)));
    }
  Field q = Field::rationals();
  SeededRng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    GrassPoint p = random_point(q, 3, 2, rng);
    EXPECT_EQ(annihilator(p), gram_transport(perp(p)));
  }
}

TEST(Perp, IsotropicSubspacesNeverExceedLevelGF3) {
  /* W is isotropic when W is inside perp(W); the nonnegative-exponent half
     is isotropic of full level dimension, and nothing bigger is. */
  Field f3 = Field::gf(3);
  const int level = 2;
  int isotropic_of_level_dim = 0;
  for (int d = 0; d <= 4; ++d)
    for (const GrassPoint& p : enumerate_points(f3, level, d)) {
      const bool isotropic = subspace_contains(perp(p).basis(), p.basis());
      if (isotropic) EXPECT_LE(p.dim(), level);
      if (isotropic && p.dim() == level) ++isotropic_of_level_dim;
    }
  EXPECT_GT(isotropic_of_level_dim, 0);
  GrassPoint vplus = GrassPoint::from_maya(FiniteIndexSet(2, {0, 1}), f3);
  EXPECT_EQ(perp(vplus), vplus);
}

TEST(Perp, GF2StillInvolutesButFormIsSymmetric) {
  /* Over GF(2) the pairing degenerates to a symmetric form; the linear
     algebra still runs, and callers get the documented weaker guarantees. */
  Field f2 = Field::gf(2);
  ExactMatrix g = gram_matrix(f2, 2);
  EXPECT_EQ(g, g.transposed());
  for (const GrassPoint& p : enumerate_points(f2, 2, 2)) EXPECT_EQ(perp(perp(p)), p);
}

}  // namespace
}  // namespace sgr
