#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/field.hpp"

namespace sgr {

/* Dense matrix over a single field.  Row-major, value semantics.  Zero rows
   or columns are legal (bases of the zero subspace are 0 x n matrices). */
class ExactMatrix {
 public:
  ExactMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols),
        entries_(rows * cols, FieldElement::zero(field)) {}

  static ExactMatrix identity(Field field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
    return m;
  }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElement& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  FieldElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  void set(std::size_t r, std::size_t c, const FieldElement& v) {
    if (v.field() != field_)
      throw field_mismatch_error("entry field " + v.field().name() +
                                 " differs from matrix field " + field_.name());
    entries_[r * cols_ + c] = v;
  }

  ExactMatrix transposed() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  ExactMatrix multiplied(const ExactMatrix& o) const {
    if (field_ != o.field_) throw field_mismatch_error("matrix product across fields");
    if (cols_ != o.rows_)
      throw ambient_mismatch_error("matrix product shape mismatch: " +
                                   std::to_string(cols_) + " vs " + std::to_string(o.rows_));
    ExactMatrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          p.at(r, c) += at(r, k) * o.at(k, c);
      }
    return p;
  }

  /* Rows of `o` appended below the rows of this matrix. */
  ExactMatrix stacked(const ExactMatrix& o) const {
    if (field_ != o.field_) throw field_mismatch_error("stack across fields");
    if (cols_ != o.cols_)
      throw ambient_mismatch_error("stack with different ambient dimensions");
    ExactMatrix s(field_, rows_ + o.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) s.at(r, c) = at(r, c);
    for (std::size_t r = 0; r < o.rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) s.at(rows_ + r, c) = o.at(r, c);
    return s;
  }

  ExactMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const {
    ExactMatrix s(field_, row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
      for (std::size_t c = 0; c < col_idx.size(); ++c)
        s.at(r, c) = at(row_idx[r], col_idx[c]);
    return s;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> entries_;
};

struct RrefResult {
  ExactMatrix matrix;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/* Reduced row echelon form: leftmost pivots, pivots normalized to 1, zeros
   above and below each pivot.  Deterministic, and canonical: two inputs with
   the same row space reduce to the same matrix. */
inline RrefResult rref(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(row, c), a.at(sel, c));
    const FieldElement inv = a.at(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const FieldElement f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= f * a.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

inline FieldElement determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols())
    throw invalid_argument_error("determinant of a non-square matrix");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  FieldElement det = FieldElement::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a.at(sel, col).is_zero()) ++sel;
    if (sel == n) return FieldElement::zero(m.field());
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(sel, c));
      det = -det;
    }
    det *= a.at(col, col);
    const FieldElement inv = a.at(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      const FieldElement f = a.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return det;
}

/* Canonical basis of the row space: the nonzero rows of the rref. */
inline ExactMatrix row_space(const ExactMatrix& m) {
  RrefResult r = rref(m);
  ExactMatrix b(m.field(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) b.at(i, c) = r.matrix.at(i, c);
  return b;
}

/* Canonical basis (as rows) of the right null space {x : m x = 0}. */
inline ExactMatrix kernel(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  ExactMatrix k(m.field(), free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t f = free_cols[i];
    k.at(i, f) = FieldElement::one(m.field());
    for (std::size_t j = 0; j < r.pivot_cols.size(); ++j)
      k.at(i, r.pivot_cols[j]) = -r.matrix.at(j, f);
  }
  return row_space(k);
}

inline void require_same_ambient(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field())
    throw field_mismatch_error("subspaces over different fields");
  if (a.cols() != b.cols())
    throw ambient_mismatch_error("subspaces of different ambient dimension: " +
                                 std::to_string(a.cols()) + " vs " + std::to_string(b.cols()));
}

inline ExactMatrix subspace_sum(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_ambient(a, b);
  return row_space(a.stacked(b));
}

/* Intersection of row spans.  A kernel vector (c, d) of [A; -B]^T stacked
   columnwise gives c A = d B, an element of the intersection; inputs are
   canonicalized first so the parametrization is injective. */
inline ExactMatrix subspace_intersect(const ExactMatrix& a_in, const ExactMatrix& b_in) {
  require_same_ambient(a_in, b_in);
  const ExactMatrix a = row_space(a_in);
  const ExactMatrix b = row_space(b_in);
  ExactMatrix negb = b;
  for (std::size_t r = 0; r < negb.rows(); ++r)
    for (std::size_t c = 0; c < negb.cols(); ++c) negb.at(r, c) = -negb.at(r, c);
  const ExactMatrix combos = kernel(a.stacked(negb).transposed());
  ExactMatrix inter(a.field(), combos.rows(), a.cols());
  for (std::size_t r = 0; r < combos.rows(); ++r)
    for (std::size_t k = 0; k < a.rows(); ++k) {
      if (combos.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < a.cols(); ++c)
        inter.at(r, c) += combos.at(r, k) * a.at(k, c);
    }
  return row_space(inter);
}

/* Does the row span of `space` contain every row of `candidate`? */
inline bool subspace_contains(const ExactMatrix& space, const ExactMatrix& candidate) {
  require_same_ambient(space, candidate);
  const std::size_t base = rank(space);
  return rank(space.stacked(candidate)) == base;
}

/* Inverse of a square matrix via [m | I] elimination. */
inline ExactMatrix inverse_matrix(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw invalid_argument_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = FieldElement::one(m.field());
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1)
    throw not_invertible_error("singular matrix");
  ExactMatrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.matrix.at(r, n + c);
  return inv;
}

}  // namespace sgr
