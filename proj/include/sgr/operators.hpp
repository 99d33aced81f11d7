#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/laurent.hpp"
#include "sgr/matrix.hpp"
#include "sgr/plucker.hpp"
#include "sgr/points.hpp"
#include "sgr/restriction.hpp"

namespace sgr {

enum class OperatorKind { multiplication, banded };

/* A finitely presented operator on k((z)), one of two kinds.
   multiplication: multiply by a nonzero finite Laurent vector; order m is
   its lowest exponent.  banded: the identity everywhere except a finite
   stored block of entries (row exponent, column exponent) -> value, each
   within a band |row - col| <= bandwidth.  Stored entries replace the
   identity's; entries that merely restate it are dropped, so block() holds
   exactly the deviations.  Construction never requires invertibility; act
   and inverse check what they need and throw when it fails. */
class WindowOperator {
 public:
  static WindowOperator multiplication(const LaurentVector& unit) {
    if (unit.is_zero())
      throw invalid_argument_error("multiplication unit must be nonzero");
    return WindowOperator(unit.field(), unit, 0, {});
  }

  static WindowOperator banded(Field field, int bandwidth,
                               const std::map<std::pair<int, int>, FieldElement>& block) {
    if (bandwidth < 0) throw invalid_argument_error("bandwidth must be nonnegative");
    std::map<std::pair<int, int>, FieldElement> devs;
    for (const auto& [rc, value] : block) {
      const auto [r, c] = rc;
      if (value.field() != field)
        throw field_mismatch_error("block entry field differs from operator field");
      const int width = r >= c ? r - c : c - r;
      if (width > bandwidth)
        throw invalid_argument_error("block entry (" + std::to_string(r) + ", " +
                                     std::to_string(c) + ") outside bandwidth " +
                                     std::to_string(bandwidth));
      const bool is_delta = (r == c) ? value.is_one() : value.is_zero();
      if (!is_delta) devs.emplace(rc, value);
    }
    return WindowOperator(field, LaurentVector(field), bandwidth, std::move(devs));
  }

  OperatorKind kind() const { return kind_; }
  Field field() const { return field_; }

  const LaurentVector& unit() const {
    require_kind(OperatorKind::multiplication, "unit");
    return unit_;
  }

  /* Lowest exponent of the multiplication unit. */
  int order() const {
    require_kind(OperatorKind::multiplication, "order");
    return unit_.order();
  }

  int bandwidth() const {
    require_kind(OperatorKind::banded, "bandwidth");
    return bandwidth_;
  }

  const std::map<std::pair<int, int>, FieldElement>& block() const {
    require_kind(OperatorKind::banded, "block");
    return block_;
  }

  /* Smallest level >= the given one whose window supports a faithful
     action: multiplication spills |order| past the window edge, and a
     banded block must sit wholly inside the window so the tail columns
     stay untouched. */
  int required_level(int level) const {
    if (level < 1) throw invalid_argument_error("level must be positive");
    if (kind_ == OperatorKind::multiplication) {
      const int m = unit_.order();
      return level + (m >= 0 ? m : -m);
    }
    int needed = level;
    for (const auto& [rc, value] : block_) {
      const auto [r, c] = rc;
      needed = std::max({needed, r + 1, c + 1, -r, -c});
    }
    return needed;
  }

  /* The operator restricted to the level window as a 2L x 2L matrix, rows
     and columns indexed by exponents -L .. L-1: column c holds the window
     part of the image of e_c.  A banded block that does not fit inside the
     window is an overflow. */
  ExactMatrix window_matrix(int level) const {
    if (level < 1) throw invalid_argument_error("level must be positive");
    const std::size_t n = 2 * static_cast<std::size_t>(level);
    if (kind_ == OperatorKind::multiplication) {
      ExactMatrix w(field_, n, n);
      for (int c = -level; c < level; ++c)
        for (const auto& [m, coeff] : unit_.coefficients()) {
          const int r = c + m;
          if (r < -level || r >= level) continue;
          w.at(static_cast<std::size_t>(r + level), static_cast<std::size_t>(c + level)) =
              coeff;
        }
      return w;
    }
    ExactMatrix w = ExactMatrix::identity(field_, n);
    for (const auto& [rc, value] : block_) {
      const auto [r, c] = rc;
      if (r < -level || r >= level || c < -level || c >= level)
        throw window_overflow_error("block entry (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ") needs level " +
                                    std::to_string(required_level(1)));
      w.at(static_cast<std::size_t>(r + level), static_cast<std::size_t>(c + level)) = value;
    }
    return w;
  }

 private:
  WindowOperator(Field field, LaurentVector unit, int bandwidth,
                 std::map<std::pair<int, int>, FieldElement> block)
      : kind_(unit.is_zero() ? OperatorKind::banded : OperatorKind::multiplication),
        field_(field),
        unit_(std::move(unit)),
        bandwidth_(bandwidth),
        block_(std::move(block)) {}

  void require_kind(OperatorKind k, const std::string& what) const {
    if (kind_ != k)
      throw invalid_argument_error("operator kind has no " + what);
  }

  OperatorKind kind_;
  Field field_;
  LaurentVector unit_;
  int bandwidth_;
  std::map<std::pair<int, int>, FieldElement> block_;
};

namespace detail {

/* The point re-read in a wider window: columns keep their exponents, and a
   unit row is added for each tail exponent i, ..., j-1 that becomes
   visible.  Unlike embed_level this accepts any dimension. */
inline ExactMatrix widen_basis(const GrassPoint& p, int j) {
  const int i = p.level();
  ExactMatrix wide(p.field(), p.basis().rows() + static_cast<std::size_t>(j - i),
                   2 * static_cast<std::size_t>(j));
  for (std::size_t r = 0; r < p.basis().rows(); ++r)
    for (std::size_t c = 0; c < p.basis().cols(); ++c)
      wide.at(r, c + static_cast<std::size_t>(j - i)) = p.basis().at(r, c);
  for (int n = i; n < j; ++n)
    wide.at(p.basis().rows() + static_cast<std::size_t>(n - i),
            static_cast<std::size_t>(n + j)) = FieldElement::one(p.field());
  return wide;
}

}  // namespace detail

/* Apply the operator to a window point.  The result lives at the minimal
   sufficient level i', reported through its level; a caller-supplied cap
   below that is an overflow error.

   multiplication by a unit of order m: each basis row, as a Laurent vector,
   is multiplied and reduced modulo the new tail (exponents >= i + m drop,
   which is exact because the tail of the image equals that span), and one
   unit row is added per tail exponent in [i + m, i') that the wider window
   exposes.  The shift index moves by -m.

   banded: the point is widened to level i' and multiplied by the window
   matrix, whose block must be invertible.  Dimension and index are
   preserved. */
inline GrassPoint act(const WindowOperator& g, const GrassPoint& p,
                      std::optional<int> max_level = std::nullopt) {
  if (g.field() != p.field())
    throw field_mismatch_error("operator field differs from point field");
  const int i = p.level();
  const int ip = g.required_level(i);
  if (max_level && *max_level < ip)
    throw window_overflow_error("action needs level " + std::to_string(ip) +
                                " but the cap is " + std::to_string(*max_level));
  if (g.kind() == OperatorKind::banded) {
    const ExactMatrix w = g.window_matrix(ip);
    if (determinant(w).is_zero())
      throw not_invertible_error("banded operator block is singular");
    return GrassPoint(ip, detail::widen_basis(p, ip).multiplied(w.transposed()));
  }
  const int m = g.order();
  const std::size_t fill = static_cast<std::size_t>(ip - (i + m));
  ExactMatrix out(p.field(), p.basis().rows() + fill, 2 * static_cast<std::size_t>(ip));
  for (std::size_t r = 0; r < p.basis().rows(); ++r) {
    LaurentVector row(p.field());
    for (std::size_t c = 0; c < p.basis().cols(); ++c)
      row.set(static_cast<int>(c) - i, p.basis().at(r, c));
    const LaurentVector image = g.unit() * row;
    for (const auto& [e, coeff] : image.coefficients()) {
      if (e >= i + m) continue;
      out.at(r, static_cast<std::size_t>(e + ip)) = coeff;
    }
  }
  for (int n = i + m; n < ip; ++n)
    out.at(p.basis().rows() + static_cast<std::size_t>(n - (i + m)),
           static_cast<std::size_t>(n + ip)) = FieldElement::one(p.field());
  return GrassPoint(ip, out);
}

/* The induced action on coordinates at the minimal sufficient level: the
   input is pushed forward to level i', and v'[T] sums det(W[T, S]) * v[S]
   over the support, with W the window matrix.  W must be invertible there;
   operators that shift the index (multiplication with m != 0) are rejected
   by that check. */
inline PluckerVector act_on_plucker(const WindowOperator& g, const PluckerVector& v,
                                    std::optional<int> max_level = std::nullopt) {
  if (g.field() != v.field())
    throw field_mismatch_error("operator field differs from vector field");
  const int i = v.level();
  const int ip = g.required_level(i);
  if (max_level && *max_level < ip)
    throw window_overflow_error("action needs level " + std::to_string(ip) +
                                " but the cap is " + std::to_string(*max_level));
  const ExactMatrix w = g.window_matrix(ip);
  if (determinant(w).is_zero())
    throw not_invertible_error("window restriction at level " + std::to_string(ip) +
                               " is singular");
  const PluckerVector vv = (ip == i) ? v : pushforward_coords(v, ip);
  std::vector<std::pair<std::vector<std::size_t>, FieldElement>> support;
  for (const auto& [s, value] : vv.coordinates()) {
    std::vector<std::size_t> cols;
    for (int e : s.elements()) cols.push_back(static_cast<std::size_t>(e + ip));
    support.emplace_back(std::move(cols), value);
  }
  std::map<FiniteIndexSet, FieldElement> out;
  for (const FiniteIndexSet& t : enumerate_level(ip)) {
    std::vector<std::size_t> rows;
    for (int e : t.elements()) rows.push_back(static_cast<std::size_t>(e + ip));
    FieldElement acc = FieldElement::zero(v.field());
    for (const auto& [cols, value] : support)
      acc = acc + determinant(w.submatrix(rows, cols)) * value;
    if (!acc.is_zero()) out.emplace(t, acc);
  }
  return PluckerVector(ip, v.field(), std::move(out));
}

/* Column criterion for membership in the linear group's matrix shape: every
   column of the doubly infinite matrix has a lowest nonzero entry.
   Multiplication operators always qualify.  For banded ones only the stored
   columns can fail, by overriding the diagonal with zero and storing
   nothing else nonzero in the column. */
inline bool is_glC(const WindowOperator& g) {
  if (g.kind() == OperatorKind::multiplication) return true;
  std::set<int> touched;
  for (const auto& [rc, value] : g.block()) touched.insert(rc.second);
  for (int c : touched) {
    bool nonzero = g.block().find({c, c}) == g.block().end();
    if (!nonzero)
      for (const auto& [rc, value] : g.block())
        if (rc.second == c && !value.is_zero()) {
          nonzero = true;
          break;
        }
    if (!nonzero) return false;
  }
  return true;
}

namespace detail {

/* Bounding square [lo, hi] of the stored deviations. */
inline std::pair<int, int> block_extent(const WindowOperator& g) {
  int lo = 0, hi = -1;
  bool first = true;
  for (const auto& [rc, value] : g.block()) {
    const auto [r, c] = rc;
    if (first) {
      lo = std::min(r, c);
      hi = std::max(r, c);
      first = false;
    } else {
      lo = std::min({lo, r, c});
      hi = std::max({hi, r, c});
    }
  }
  return {lo, hi};
}

/* The deviation block materialized as a dense square on [lo, hi], identity
   filled. */
inline ExactMatrix block_square(const WindowOperator& g, int lo, int hi) {
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  ExactMatrix m = ExactMatrix::identity(g.field(), n);
  for (const auto& [rc, value] : g.block())
    m.at(static_cast<std::size_t>(rc.first - lo), static_cast<std::size_t>(rc.second - lo)) =
        value;
  return m;
}

inline WindowOperator banded_from_square(Field field, const ExactMatrix& square, int lo) {
  std::map<std::pair<int, int>, FieldElement> block;
  int width = 0;
  for (std::size_t r = 0; r < square.rows(); ++r)
    for (std::size_t c = 0; c < square.cols(); ++c) {
      const FieldElement& v = square.at(r, c);
      const bool is_delta = (r == c) ? v.is_one() : v.is_zero();
      if (is_delta) continue;
      const int rr = static_cast<int>(r) + lo, cc = static_cast<int>(c) + lo;
      block.emplace(std::make_pair(rr, cc), v);
      width = std::max(width, rr >= cc ? rr - cc : cc - rr);
    }
  return WindowOperator::banded(field, width, block);
}

}  // namespace detail

/* Inverse within the same finite presentation.  A banded operator inverts
   its stored block and keeps the identity tail.  A multiplication operator
   has a finitely supported inverse only when the unit is a monomial;
   anything else inverts to an infinite series and is rejected. */
inline WindowOperator inverse(const WindowOperator& g) {
  if (g.kind() == OperatorKind::multiplication) {
    const auto& coeffs = g.unit().coefficients();
    if (coeffs.size() != 1)
      throw unsupported_error(
          "inverse of a multi-term multiplication operator is not finitely supported");
    const auto& [m, c] = *coeffs.begin();
    return WindowOperator::multiplication(LaurentVector::monomial(g.field(), -m, c.inverse()));
  }
  if (g.block().empty()) return g;
  const auto [lo, hi] = detail::block_extent(g);
  const ExactMatrix inv = inverse_matrix(detail::block_square(g, lo, hi));
  return detail::banded_from_square(g.field(), inv, lo);
}

/* Composition g after h, staying within one kind; mixing the two kinds has
   no finite normal form here and is rejected. */
inline WindowOperator compose(const WindowOperator& g, const WindowOperator& h) {
  if (g.field() != h.field())
    throw field_mismatch_error("composing operators over different fields");
  if (g.kind() != h.kind())
    throw unsupported_error("composition across operator kinds is not supported");
  if (g.kind() == OperatorKind::multiplication)
    return WindowOperator::multiplication(g.unit() * h.unit());
  if (g.block().empty()) return h;
  if (h.block().empty()) return g;
  const auto [glo, ghi] = detail::block_extent(g);
  const auto [hlo, hhi] = detail::block_extent(h);
  const int lo = std::min(glo, hlo), hi = std::max(ghi, hhi);
  const ExactMatrix product =
      detail::block_square(g, lo, hi).multiplied(detail::block_square(h, lo, hi));
  return detail::banded_from_square(g.field(), product, lo);
}

}  // namespace sgr
