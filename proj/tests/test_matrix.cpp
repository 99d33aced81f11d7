#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "sgr/field.hpp"
#include "sgr/matrix.hpp"

using sgr::ExactMatrix;
using sgr::Field;
using sgr::FieldElement;

namespace {

ExactMatrix from_ints(Field f, std::size_t rows, std::size_t cols,
                      const std::vector<long long>& vals) {
  ExactMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = FieldElement(f, vals[r * cols + c]);
  return m;
}

std::string key(const ExactMatrix& m) {
  std::string s = std::to_string(m.rows()) + ";";
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s += m.at(r, c).str() + ",";
  return s;
}

/* Cofactor expansion, the independent oracle for the elimination-based
   determinant. */
FieldElement cofactor_det(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return FieldElement::one(m.field());
  if (n == 1) return m.at(0, 0);
  FieldElement acc = FieldElement::zero(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows_idx, cols_idx;
    for (std::size_t r = 1; r < n; ++r) rows_idx.push_back(r);
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols_idx.push_back(k);
    FieldElement term = m.at(0, c) * cofactor_det(m.submatrix(rows_idx, cols_idx));
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/* Every d x n matrix over GF(p) with entries counted in base p. */
std::vector<ExactMatrix> all_matrices(Field f, std::size_t rows, std::size_t cols) {
  const std::uint64_t p = f.modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) total *= p;
  std::vector<ExactMatrix> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    ExactMatrix m(f, rows, cols);
    std::uint64_t v = code;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        m.at(r, c) = FieldElement(f, static_cast<long long>(v % p));
        v /= p;
      }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST(Rref, WorkedRationalExample) {
  Field q = Field::rationals();
  ExactMatrix m = from_ints(q, 3, 4, {2, 4, -2, 6, 1, 2, 0, 2, 3, 6, -1, 7});
  sgr::RrefResult r = sgr::rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 2}));
  ExactMatrix expect = from_ints(q, 3, 4, {1, 2, 0, 2, 0, 0, 1, -1, 0, 0, 0, 0});
  EXPECT_EQ(r.matrix, expect);
}

TEST(Rref, CanonicalAcrossRowMixes) {
  Field q = Field::rationals();
  ExactMatrix a = from_ints(q, 2, 4, {1, 0, 1, 0, 0, 1, 0, 1});
  /* Same row space, scrambled presentation. */
  ExactMatrix b = from_ints(q, 3, 4, {3, 2, 3, 2, 1, 1, 1, 1, 5, 3, 5, 3});
  EXPECT_EQ(sgr::row_space(a), sgr::row_space(b));
}

TEST(Rref, RankEqualsTransposedRankExhaustiveGf2) {
  Field f2 = Field::gf(2);
  for (const ExactMatrix& m : all_matrices(f2, 3, 3))
    EXPECT_EQ(sgr::rank(m), sgr::rank(m.transposed())) << key(m);
}

TEST(Determinant, MatchesCofactorOracleExhaustive) {
  for (const ExactMatrix& m : all_matrices(Field::gf(2), 3, 3))
    EXPECT_EQ(sgr::determinant(m), cofactor_det(m));
  for (const ExactMatrix& m : all_matrices(Field::gf(3), 2, 2))
    EXPECT_EQ(sgr::determinant(m), cofactor_det(m));
}

TEST(Determinant, RationalValues) {
  Field q = Field::rationals();
  EXPECT_EQ(sgr::determinant(from_ints(q, 2, 2, {1, 2, 3, 4})), FieldElement(q, -2));
  EXPECT_EQ(sgr::determinant(from_ints(q, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})),
            FieldElement(q, -1));
  EXPECT_EQ(sgr::determinant(ExactMatrix::identity(q, 4)), FieldElement(q, 1));
  EXPECT_THROW(sgr::determinant(ExactMatrix(q, 2, 3)), sgr::invalid_argument_error);
}

TEST(Kernel, AnnihilatesAndComplementsRank) {
  Field q = Field::rationals();
  ExactMatrix m = from_ints(q, 2, 4, {1, 2, 3, 4, 2, 4, 6, 8});
  ExactMatrix k = sgr::kernel(m);
  EXPECT_EQ(k.rows() + sgr::rank(m), m.cols());
  ExactMatrix prod = m.multiplied(k.transposed());
  for (std::size_t r = 0; r < prod.rows(); ++r)
    for (std::size_t c = 0; c < prod.cols(); ++c)
      EXPECT_TRUE(prod.at(r, c).is_zero());
}

TEST(Kernel, ZeroRowMatrixHasFullKernel) {
  Field q = Field::rationals();
  ExactMatrix empty(q, 0, 3);
  EXPECT_EQ(sgr::kernel(empty), ExactMatrix::identity(q, 3));
  EXPECT_EQ(sgr::rank(empty), 0u);
}

/* dim(A + B) + dim(A ∩ B) = dim A + dim B, checked for every pair of
   subspaces of GF(2)^4.  Subspaces are enumerated by reducing every 4x4
   matrix and deduplicating canonical bases; there are 67 of them. */
TEST(Subspaces, GrassmannIdentityExhaustiveGf2Dim4) {
  Field f2 = Field::gf(2);
  std::set<std::string> seen;
  std::vector<ExactMatrix> spaces;
  for (const ExactMatrix& m : all_matrices(f2, 4, 4)) {
    ExactMatrix b = sgr::row_space(m);
    if (seen.insert(key(b)).second) spaces.push_back(std::move(b));
  }
  ASSERT_EQ(spaces.size(), 67u);
  for (const ExactMatrix& a : spaces)
    for (const ExactMatrix& b : spaces) {
      ExactMatrix sum = sgr::subspace_sum(a, b);
      ExactMatrix inter = sgr::subspace_intersect(a, b);
      EXPECT_EQ(sum.rows() + inter.rows(), a.rows() + b.rows());
      EXPECT_TRUE(sgr::subspace_contains(sum, a));
      EXPECT_TRUE(sgr::subspace_contains(sum, b));
      EXPECT_TRUE(sgr::subspace_contains(a, inter));
      EXPECT_TRUE(sgr::subspace_contains(b, inter));
    }
}

TEST(Subspaces, RationalIntersection) {
  Field q = Field::rationals();
  ExactMatrix a = from_ints(q, 2, 3, {1, 0, 0, 0, 1, 0});
  ExactMatrix b = from_ints(q, 2, 3, {0, 1, 0, 0, 0, 1});
  ExactMatrix inter = sgr::subspace_intersect(a, b);
  EXPECT_EQ(inter, from_ints(q, 1, 3, {0, 1, 0}));
  ExactMatrix sum = sgr::subspace_sum(a, b);
  EXPECT_EQ(sum, ExactMatrix::identity(q, 3));
}

TEST(Subspaces, MismatchErrors) {
  Field q = Field::rationals();
  EXPECT_THROW(sgr::subspace_sum(ExactMatrix(q, 1, 3), ExactMatrix(q, 1, 4)),
               sgr::ambient_mismatch_error);
  EXPECT_THROW(sgr::subspace_sum(ExactMatrix(q, 1, 3), ExactMatrix(Field::gf(2), 1, 3)),
               sgr::field_mismatch_error);
  ExactMatrix m(q, 1, 1);
  EXPECT_THROW(m.set(0, 0, FieldElement(Field::gf(2), 1)), sgr::field_mismatch_error);
}

TEST(InverseMatrix, RoundTripAndSingularDetection) {
  Field f5 = Field::gf(5);
  ExactMatrix m = from_ints(f5, 3, 3, {1, 2, 0, 0, 1, 3, 4, 0, 2});
  ExactMatrix inv = sgr::inverse_matrix(m);
  EXPECT_EQ(m.multiplied(inv), ExactMatrix::identity(f5, 3));
  EXPECT_EQ(inv.multiplied(m), ExactMatrix::identity(f5, 3));
  ExactMatrix sing = from_ints(f5, 2, 2, {1, 2, 2, 4});
  EXPECT_THROW(sgr::inverse_matrix(sing), sgr::not_invertible_error);
}
