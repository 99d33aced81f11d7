#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/matrix.hpp"
#include "sgr/maya.hpp"

namespace sgr {

/* A d-dimensional subspace of the level-i window, the 2i-dimensional space
   with basis e_{-i}, ..., e_{i-1}.  Column c of the basis matrix is the
   coefficient of e_{c-i}.  The basis is validated to have full row rank and
   stored in rref canonical form, so equal subspaces compare equal
   structurally.  d = i is the index-zero stratum carrying Plucker
   coordinates; other d are legal and index_of reports d - i. */
class GrassPoint {
 public:
  GrassPoint(int level, const ExactMatrix& basis)
      : level_(level), basis_(row_space(basis)) {
    if (level < 1) throw invalid_argument_error("level must be positive");
    if (basis.cols() != 2 * static_cast<std::size_t>(level))
      throw ambient_mismatch_error("level " + std::to_string(level) + " window needs " +
                                   std::to_string(2 * level) + " columns, got " +
                                   std::to_string(basis.cols()));
    if (basis_.rows() != basis.rows())
      throw rank_deficient_error("basis rows are linearly dependent");
  }

  static GrassPoint from_maya(const FiniteIndexSet& t, Field field) {
    ExactMatrix m(field, t.level(), 2 * t.level());
    for (std::size_t r = 0; r < t.elements().size(); ++r)
      m.at(r, static_cast<std::size_t>(t.elements()[r] + t.level())) =
          FieldElement::one(field);
    return GrassPoint(t.level(), m);
  }

  int level() const { return level_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  Field field() const { return basis_.field(); }
  const ExactMatrix& basis() const { return basis_; }

  std::size_t column_of(int exponent) const {
    if (exponent < -level_ || exponent >= level_)
      throw invalid_argument_error("exponent " + std::to_string(exponent) +
                                   " outside level-" + std::to_string(level_) + " window");
    return static_cast<std::size_t>(exponent + level_);
  }

  friend bool operator==(const GrassPoint& a, const GrassPoint& b) {
    return a.level_ == b.level_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const GrassPoint& a, const GrassPoint& b) { return !(a == b); }

 private:
  int level_;
  ExactMatrix basis_;
};

/* Sparse vector of Plucker coordinates at one level: index set -> nonzero
   value.  At least one coordinate must be nonzero. */
class PluckerVector {
 public:
  PluckerVector(int level, Field field, std::map<FiniteIndexSet, FieldElement> coords)
      : level_(level), field_(field), coords_(std::move(coords)) {
    if (level < 1) throw invalid_argument_error("level must be positive");
    bool any = false;
    for (auto it = coords_.begin(); it != coords_.end();) {
      if (it->first.level() != level_)
        throw level_mismatch_error("coordinate label at level " +
                                   std::to_string(it->first.level()) +
                                   " in a level-" + std::to_string(level_) + " vector");
      if (it->second.field() != field_)
        throw field_mismatch_error("coordinate value field differs from vector field");
      if (it->second.is_zero()) {
        it = coords_.erase(it);
      } else {
        any = true;
        ++it;
      }
    }
    if (!any) throw invalid_argument_error("Plucker vector must have a nonzero coordinate");
  }

  int level() const { return level_; }
  Field field() const { return field_; }
  const std::map<FiniteIndexSet, FieldElement>& coordinates() const { return coords_; }

  FieldElement at(const FiniteIndexSet& t) const {
    if (t.level() != level_)
      throw level_mismatch_error("coordinate lookup at the wrong level");
    auto it = coords_.find(t);
    return it == coords_.end() ? FieldElement::zero(field_) : it->second;
  }

  /* Lexicographically smallest label with nonzero value. */
  const FiniteIndexSet& leading_support() const { return coords_.begin()->first; }

  PluckerVector scaled(const FieldElement& c) const {
    if (c.is_zero()) throw invalid_argument_error("scaling a Plucker vector by zero");
    std::map<FiniteIndexSet, FieldElement> out;
    for (const auto& [t, v] : coords_) out.emplace(t, v * c);
    return PluckerVector(level_, field_, std::move(out));
  }

  /* Equality up to a nonzero scalar. */
  bool proportional_to(const PluckerVector& o) const {
    if (level_ != o.level_ || field_ != o.field_) return false;
    if (coords_.size() != o.coords_.size()) return false;
    const FiniteIndexSet& lead = leading_support();
    auto it = o.coords_.find(lead);
    if (it == o.coords_.end()) return false;
    const FieldElement scale = it->second / coords_.at(lead);
    for (const auto& [t, v] : coords_) {
      auto jt = o.coords_.find(t);
      if (jt == o.coords_.end() || jt->second != v * scale) return false;
    }
    return true;
  }

  friend bool operator==(const PluckerVector& a, const PluckerVector& b) {
    return a.level_ == b.level_ && a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const PluckerVector& a, const PluckerVector& b) { return !(a == b); }

 private:
  int level_;
  Field field_;
  std::map<FiniteIndexSet, FieldElement> coords_;
};

/* All C(2i, i) maximal minors of the basis matrix; coordinate X_S is the
   minor on the columns named by S.  Requires the index-zero stratum d = i. */
inline PluckerVector plucker_vector(const GrassPoint& p) {
  if (p.dim() != p.level())
    throw wrong_component_error("Plucker coordinates need dim = level, got dim " +
                                std::to_string(p.dim()) + " at level " +
                                std::to_string(p.level()));
  std::vector<std::size_t> all_rows(p.basis().rows());
  for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
  std::map<FiniteIndexSet, FieldElement> coords;
  for (const FiniteIndexSet& s : enumerate_level(p.level())) {
    std::vector<std::size_t> cols;
    cols.reserve(s.elements().size());
    for (int e : s.elements()) cols.push_back(p.column_of(e));
    FieldElement minor = determinant(p.basis().submatrix(all_rows, cols));
    if (!minor.is_zero()) coords.emplace(s, std::move(minor));
  }
  /* Full row rank guarantees some maximal minor is nonzero. */
  return PluckerVector(p.level(), p.field(), std::move(coords));
}

/* index = dim(W ∩ E+) - (i - dim(projection of W onto E-)), where E+ is the
   span of the nonnegative-exponent window vectors and E- of the negative
   ones.  Both terms reduce to the rank r of the left half of the basis, so
   the value is always d - i; the two-term form is computed as stated. */
inline int index_of(const GrassPoint& p) {
  const int i = p.level();
  const ExactMatrix& b = p.basis();
  std::vector<std::size_t> all_rows(b.rows());
  for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
  std::vector<std::size_t> neg_cols;
  for (int e = -i; e < 0; ++e) neg_cols.push_back(p.column_of(e));
  const std::size_t proj_dim = rank(b.submatrix(all_rows, neg_cols));
  const std::size_t meet_plus = b.rows() - proj_dim;
  return static_cast<int>(meet_plus) - (i - static_cast<int>(proj_dim));
}

/* Does p lie in the chart labeled by t?  Membership is a nonzero coordinate
   at the complement of t, i.e. the complementary columns form an invertible
   minor. */
inline bool chart_membership(const GrassPoint& p, const FiniteIndexSet& t) {
  if (t.level() != p.level()) throw level_mismatch_error("chart label at the wrong level");
  if (p.dim() != p.level())
    throw wrong_component_error("chart membership needs dim = level");
  std::vector<std::size_t> all_rows(p.basis().rows());
  for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
  std::vector<std::size_t> cols;
  for (int e : t.complement_elements()) cols.push_back(p.column_of(e));
  return !determinant(p.basis().submatrix(all_rows, cols)).is_zero();
}

/* The same subspace seen in a wider window: old columns keep their
   exponents, and one new basis row e_n is added for each exponent
   n = i, ..., j-1 (the part of the upward tail that becomes visible). */
inline GrassPoint embed_level(const GrassPoint& p, int target_level) {
  const int i = p.level();
  if (target_level < i)
    throw invalid_argument_error("embed_level goes to a level >= the current one");
  if (p.dim() != i) throw wrong_component_error("embed_level needs dim = level");
  if (target_level == i) return p;
  const int j = target_level;
  ExactMatrix wide(p.field(), p.basis().rows() + (j - i), 2 * static_cast<std::size_t>(j));
  for (std::size_t r = 0; r < p.basis().rows(); ++r)
    for (std::size_t c = 0; c < p.basis().cols(); ++c)
      wide.at(r, c + (j - i)) = p.basis().at(r, c);
  for (int n = i; n < j; ++n)
    wide.at(p.basis().rows() + (n - i), static_cast<std::size_t>(n + j)) =
        FieldElement::one(p.field());
  return GrassPoint(j, wide);
}

/* The coordinate-relabeling sign of embed_level, measured on the coordinate
   point of t itself.  With ascending column order it is +1 for all (i, j);
   tests pin that. */
inline int embed_sign(int level, int target_level, Field field) {
  std::vector<int> elems;
  for (int n = 0; n < level; ++n) elems.push_back(n);
  FiniteIndexSet vac(level, elems);
  GrassPoint p = GrassPoint::from_maya(vac, field);
  PluckerVector v = plucker_vector(embed_level(p, target_level));
  FieldElement c = v.at(between_levels(vac, target_level));
  if (c.is_zero()) throw error("embed sign probe lost the vacuum coordinate");
  return c == FieldElement::one(field) ? 1 : -1;
}

}  // namespace sgr
