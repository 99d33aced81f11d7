#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/matrix.hpp"
#include "sgr/points.hpp"
#include "sgr/sampling.hpp"

namespace sgr {

namespace detail {

inline void require_same_frame(const GrassPoint& a, const GrassPoint& b) {
  if (a.level() != b.level())
    throw level_mismatch_error("points at levels " + std::to_string(a.level()) + " and " +
                               std::to_string(b.level()));
  if (a.field() != b.field())
    throw field_mismatch_error("points over " + a.field().name() + " and " +
                               b.field().name());
}

inline void require_middle_dimension(const GrassPoint& p) {
  if (p.dim() != p.level())
    throw wrong_component_error("projective geometry here needs dim = level, got dim " +
                                std::to_string(p.dim()));
}

/* Rows extending the bottom basis to the top: the top rows that increase
   the rank, greedily.  Returns gap = dim top - dim bottom rows. */
inline ExactMatrix complement_rows(const GrassPoint& bottom, const GrassPoint& top) {
  ExactMatrix grown = bottom.basis();
  ExactMatrix comp(bottom.field(), 0, bottom.basis().cols());
  for (std::size_t r = 0; r < top.basis().rows(); ++r) {
    ExactMatrix row(bottom.field(), 1, top.basis().cols());
    for (std::size_t c = 0; c < top.basis().cols(); ++c) row.at(0, c) = top.basis().at(r, c);
    if (rank(grown.stacked(row)) > rank(grown)) {
      grown = grown.stacked(row);
      comp = comp.stacked(row);
    }
  }
  return comp;
}

/* Dense matrix whose rows are the full coordinate vectors of the given
   points, columns ordered by enumerate_level. */
inline ExactMatrix coordinate_rows(const std::vector<GrassPoint>& points) {
  const int level = points.front().level();
  const Field field = points.front().field();
  const std::vector<FiniteIndexSet> labels = enumerate_level(level);
  ExactMatrix m(field, points.size(), labels.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const PluckerVector v = plucker_vector(points[r]);
    for (std::size_t c = 0; c < labels.size(); ++c) m.at(r, c) = v.at(labels[c]);
  }
  return m;
}

}  // namespace detail

/* The family of all middle-dimensional subspaces sandwiched between a fixed
   bottom and top, bottom \subset W \subset top with dim W = bottom + k.  A
   line in the coordinate projective space has gap 2 and k = 1; general
   families realize higher projective spaces. */
class PencilFamily {
 public:
  PencilFamily(GrassPoint bottom, GrassPoint top, int k)
      : bottom_(std::move(bottom)), top_(std::move(top)), k_(k) {
    detail::require_same_frame(bottom_, top_);
    if (!subspace_contains(top_.basis(), bottom_.basis()))
      throw invalid_argument_error("family bottom must lie inside its top");
    const int gap = top_.dim() - bottom_.dim();
    if (gap < 2) throw invalid_argument_error("family needs dimension gap at least 2");
    if (k_ < 1 || k_ >= gap)
      throw invalid_argument_error("family step k must lie strictly between 0 and the gap");
  }

  const GrassPoint& bottom() const { return bottom_; }
  const GrassPoint& top() const { return top_; }
  int k() const { return k_; }
  int gap() const { return top_.dim() - bottom_.dim(); }
  int level() const { return bottom_.level(); }
  Field field() const { return bottom_.field(); }

  friend bool operator==(const PencilFamily& a, const PencilFamily& b) {
    return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.k_ == b.k_;
  }
  friend bool operator!=(const PencilFamily& a, const PencilFamily& b) { return !(a == b); }

 private:
  GrassPoint bottom_, top_;
  int k_;
};

namespace detail {

inline void require_distinct_triple(const GrassPoint& p1, const GrassPoint& p2,
                                    const GrassPoint& p3) {
  require_same_frame(p1, p2);
  require_same_frame(p1, p3);
  require_middle_dimension(p1);
  require_middle_dimension(p2);
  require_middle_dimension(p3);
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw invalid_argument_error("collinearity needs pairwise distinct points");
}

}  // namespace detail

/* Subspace-level collinearity: the third point is squeezed between the
   intersection and the sum of the first two, with both inclusions of
   codimension one. */
inline bool collinear_geometric(const GrassPoint& p1, const GrassPoint& p2,
                                const GrassPoint& p3) {
  detail::require_distinct_triple(p1, p2, p3);
  const ExactMatrix inter = subspace_intersect(p1.basis(), p2.basis());
  const ExactMatrix sum = subspace_sum(p1.basis(), p2.basis());
  if (p3.dim() - static_cast<int>(inter.rows()) != 1) return false;
  if (static_cast<int>(sum.rows()) - p3.dim() != 1) return false;
  return subspace_contains(p3.basis(), inter) && subspace_contains(sum, p3.basis());
}

/* Coordinate-level collinearity: the three coordinate vectors span at most
   a projective line. */
inline bool collinear_plucker(const GrassPoint& p1, const GrassPoint& p2,
                              const GrassPoint& p3) {
  detail::require_distinct_triple(p1, p2, p3);
  return rank(detail::coordinate_rows({p1, p2, p3})) <= 2;
}

/* The line through two adjacent points, presented by the invariants of the
   pair: bottom = intersection, top = sum.  Any two distinct points of the
   family regenerate the same pair. */
inline PencilFamily pencil(const GrassPoint& p1, const GrassPoint& p2) {
  detail::require_same_frame(p1, p2);
  detail::require_middle_dimension(p1);
  detail::require_middle_dimension(p2);
  if (p1 == p2) throw invalid_argument_error("a pencil needs two distinct points");
  const ExactMatrix inter = subspace_intersect(p1.basis(), p2.basis());
  if (static_cast<int>(inter.rows()) != p1.level() - 1)
    throw non_adjacent_error("points meet in dimension " + std::to_string(inter.rows()) +
                             ", need " + std::to_string(p1.level() - 1));
  const ExactMatrix sum = subspace_sum(p1.basis(), p2.basis());
  return PencilFamily(GrassPoint(p1.level(), inter), GrassPoint(p1.level(), sum), 1);
}

/* All points of the family over a finite field: bottom extended by each
   k-dimensional subspace of the gap-dimensional complement. */
inline std::vector<GrassPoint> pencil_points(const PencilFamily& f) {
  if (!f.field().is_gf())
    throw invalid_argument_error("family enumeration needs a finite field");
  const ExactMatrix comp = detail::complement_rows(f.bottom(), f.top());
  std::vector<GrassPoint> out;
  for (const ExactMatrix& u :
       enumerate_subspaces(f.field(), static_cast<std::size_t>(f.gap()),
                           static_cast<std::size_t>(f.k())))
    out.emplace_back(f.level(), f.bottom().basis().stacked(u.multiplied(comp)));
  return out;
}

/* The pencil point with parameter [lambda : mu], for lines over any field:
   bottom extended by lambda a + mu b with (a, b) the complement basis. */
inline GrassPoint pencil_point_at(const PencilFamily& f, const FieldElement& lambda,
                                  const FieldElement& mu) {
  if (f.k() != 1 || f.gap() != 2)
    throw invalid_argument_error("parametric points are for lines (gap 2, k = 1)");
  if (lambda.field() != f.field() || mu.field() != f.field())
    throw field_mismatch_error("parameter field differs from the family field");
  if (lambda.is_zero() && mu.is_zero())
    throw invalid_argument_error("[0 : 0] is not a projective parameter");
  const ExactMatrix comp = detail::complement_rows(f.bottom(), f.top());
  ExactMatrix row(f.field(), 1, comp.cols());
  for (std::size_t c = 0; c < comp.cols(); ++c)
    row.at(0, c) = lambda * comp.at(0, c) + mu * comp.at(1, c);
  return GrassPoint(f.level(), f.bottom().basis().stacked(row));
}

enum class ReferenceStatus { ok, rank_degenerate, dimension_mismatch };

struct ReferenceSpaceResult {
  ReferenceStatus status;
  std::optional<PencilFamily> family;
};

/* n + 2 points of a reference for an n-dimensional projective space inside
   the coordinate projective space: every n+1 of the coordinate vectors must
   be independent with all n+2 spanning dimension n+1 (else rank_degenerate),
   and the sum and intersection of the subspaces must differ by n+1 (else
   dimension_mismatch).  On success the family (intersection, sum, k) with
   k = dim - dim intersection generates that projective space. */
inline ReferenceSpaceResult reference_space(const std::vector<GrassPoint>& points) {
  if (points.size() < 3)
    throw invalid_argument_error("a reference needs n + 2 >= 3 points");
  for (const GrassPoint& p : points) {
    detail::require_same_frame(points.front(), p);
    detail::require_middle_dimension(p);
  }
  const std::size_t n = points.size() - 2;
  const ExactMatrix rows = detail::coordinate_rows(points);
  if (rank(rows) != n + 1) return {ReferenceStatus::rank_degenerate, std::nullopt};
  std::vector<std::size_t> all_cols(rows.cols());
  for (std::size_t c = 0; c < all_cols.size(); ++c) all_cols[c] = c;
  for (std::size_t skip = 0; skip < points.size(); ++skip) {
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < points.size(); ++r)
      if (r != skip) kept.push_back(r);
    if (rank(rows.submatrix(kept, all_cols)) != n + 1)
      return {ReferenceStatus::rank_degenerate, std::nullopt};
  }
  ExactMatrix inter = points.front().basis();
  ExactMatrix sum = points.front().basis();
  for (std::size_t s = 1; s < points.size(); ++s) {
    inter = subspace_intersect(inter, points[s].basis());
    sum = subspace_sum(sum, points[s].basis());
  }
  if (sum.rows() - inter.rows() != n + 1)
    return {ReferenceStatus::dimension_mismatch, std::nullopt};
  const int level = points.front().level();
  const int k = level - static_cast<int>(inter.rows());
  return {ReferenceStatus::ok,
          PencilFamily(GrassPoint(level, inter), GrassPoint(level, sum), k)};
}

}  // namespace sgr
