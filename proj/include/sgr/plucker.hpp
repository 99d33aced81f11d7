#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/maya.hpp"
#include "sgr/points.hpp"

namespace sgr {

/* One product X_left * X_right with an integer coefficient; left <= right
   lexicographically. */
struct RelationTerm {
  long long coeff;
  FiniteIndexSet left, right;

  friend bool operator==(const RelationTerm& a, const RelationTerm& b) {
    return a.coeff == b.coeff && a.left == b.left && a.right == b.right;
  }
  friend bool operator<(const RelationTerm& a, const RelationTerm& b) {
    if (a.left != b.left) return a.left < b.left;
    if (a.right != b.right) return a.right < b.right;
    return a.coeff < b.coeff;
  }
};

/* A quadratic form in the level-i Plucker coordinates, kept in canonical
   shape: within each term left <= right, terms sorted by label pair, merged,
   zero terms dropped, content (gcd of coefficients) divided out, and the
   leading coefficient positive.  Canonical shape makes structural equality
   the right deduplication key. */
class QuadraticRelation {
 public:
  static std::optional<QuadraticRelation> canonicalize(int level,
                                                       std::vector<RelationTerm> raw) {
    std::map<std::pair<FiniteIndexSet, FiniteIndexSet>, long long> merged;
    for (RelationTerm& t : raw) {
      if (t.left.level() != level || t.right.level() != level)
        throw level_mismatch_error("relation term at the wrong level");
      if (t.right < t.left) std::swap(t.left, t.right);
      merged[{t.left, t.right}] += t.coeff;
    }
    std::vector<RelationTerm> terms;
    for (const auto& [pair, c] : merged)
      if (c != 0) terms.push_back(RelationTerm{c, pair.first, pair.second});
    if (terms.empty()) return std::nullopt;
    long long content = 0;
    for (const RelationTerm& t : terms)
      content = std::gcd(content, t.coeff < 0 ? -t.coeff : t.coeff);
    const long long sign = terms.front().coeff < 0 ? -1 : 1;
    for (RelationTerm& t : terms) t.coeff /= sign * content;
    return QuadraticRelation(level, std::move(terms));
  }

  int level() const { return level_; }
  const std::vector<RelationTerm>& terms() const { return terms_; }

  friend bool operator==(const QuadraticRelation& a, const QuadraticRelation& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const QuadraticRelation& a, const QuadraticRelation& b) {
    if (a.level_ != b.level_) return a.level_ < b.level_;
    return a.terms_ < b.terms_;
  }

 private:
  QuadraticRelation(int level, std::vector<RelationTerm> terms)
      : level_(level), terms_(std::move(terms)) {}

  int level_;
  std::vector<RelationTerm> terms_;
};

/* The exchange relation for (S, S', k): start from X_S X_{S'}, then for each
   position l of S' subtract the product where s'_l moved into position k of
   S and s_k into position l of S'.  Unsorted tuples are read through
   sign_normalize (repeats kill the term).  Returns nothing when every term
   cancels. */
inline std::optional<QuadraticRelation> generate_relation(const FiniteIndexSet& s,
                                                          const FiniteIndexSet& sp,
                                                          int k) {
  if (s.level() != sp.level()) throw level_mismatch_error("exchange across levels");
  const int i = s.level();
  if (k < 0 || k >= i)
    throw invalid_argument_error("exchange position k must lie in [0, level)");
  std::vector<RelationTerm> raw;
  raw.push_back(RelationTerm{1, s, sp});
  for (int l = 0; l < i; ++l) {
    std::vector<int> left_raw = s.elements();
    left_raw[k] = sp.elements()[l];
    std::vector<int> right_raw = sp.elements();
    right_raw[l] = s.elements()[k];
    auto left = sign_normalize(i, left_raw);
    auto right = sign_normalize(i, right_raw);
    if (!left || !right) continue;
    raw.push_back(RelationTerm{-static_cast<long long>(left->second * right->second),
                               left->first, right->first});
  }
  return QuadraticRelation::canonicalize(i, std::move(raw));
}

/* Every distinct exchange relation at one level, canonically sorted.  The
   triple loop is C(2i,i)^2 * i, so this is for desk levels; the CLI streams
   instead of calling this beyond level 4. */
inline std::vector<QuadraticRelation> generate_all(int level) {
  const std::vector<FiniteIndexSet> sets = enumerate_level(level);
  std::set<QuadraticRelation> out;
  for (const FiniteIndexSet& s : sets)
    for (const FiniteIndexSet& sp : sets)
      for (int k = 0; k < level; ++k)
        if (auto r = generate_relation(s, sp, k)) out.insert(std::move(*r));
  return std::vector<QuadraticRelation>(out.begin(), out.end());
}

/* Memoized generate_all, shared by satisfies_all and chart_reconstruct. */
inline const std::vector<QuadraticRelation>& relations(int level) {
  static std::mutex mu;
  static std::map<int, std::vector<QuadraticRelation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(level);
  if (it == cache.end()) it = cache.emplace(level, generate_all(level)).first;
  return it->second;
}

inline FieldElement evaluate(const QuadraticRelation& r, const PluckerVector& v) {
  if (r.level() != v.level()) throw level_mismatch_error("relation and vector levels differ");
  FieldElement acc = FieldElement::zero(v.field());
  for (const RelationTerm& t : r.terms()) {
    const FieldElement a = v.at(t.left);
    if (a.is_zero()) continue;
    const FieldElement b = v.at(t.right);
    if (b.is_zero()) continue;
    acc += FieldElement(v.field(), t.coeff) * a * b;
  }
  return acc;
}

inline bool satisfies_all(const PluckerVector& v) {
  for (const QuadraticRelation& r : relations(v.level()))
    if (!evaluate(r, v).is_zero()) return false;
  return true;
}

/* Rebuild the point from its coordinates inside the chart where X_t is
   invertible: identity block on the columns of t, and the entry of row s
   (s in t) at column b is the sign-normalized coordinate of t with s
   replaced by b, divided by X_t. */
inline GrassPoint chart_reconstruct(const PluckerVector& v, const FiniteIndexSet& t) {
  if (t.level() != v.level()) throw level_mismatch_error("chart label at the wrong level");
  const int i = v.level();
  const FieldElement pivot = v.at(t);
  if (pivot.is_zero())
    throw not_in_chart_error("coordinate at the requested chart label is zero");
  if (!satisfies_all(v))
    throw not_decomposable_error("coordinates violate the quadratic relations");
  ExactMatrix m(v.field(), static_cast<std::size_t>(i), 2 * static_cast<std::size_t>(i));
  const FieldElement inv = pivot.inverse();
  for (std::size_t r = 0; r < static_cast<std::size_t>(i); ++r) {
    m.at(r, static_cast<std::size_t>(t.elements()[r] + i)) = FieldElement::one(v.field());
    for (int b = -i; b < i; ++b) {
      if (t.contains(b)) continue;
      std::vector<int> raw = t.elements();
      raw[r] = b;
      auto norm = sign_normalize(i, raw);
      /* b differs from every other entry of t, so only sorting happens. */
      const FieldElement c = v.at(norm->first);
      if (c.is_zero()) continue;
      FieldElement entry = c * inv;
      if (norm->second < 0) entry = -entry;
      m.at(r, static_cast<std::size_t>(b + i)) = entry;
    }
  }
  return GrassPoint(i, m);
}

/* Dimension over Q of the span of all generated relations, as vectors of
   coefficients over the C(2i,i)(C(2i,i)+1)/2 quadratic monomials. */
inline std::size_t relation_span_dimension(int level) {
  const std::vector<QuadraticRelation>& rels = relations(level);
  std::map<std::pair<FiniteIndexSet, FiniteIndexSet>, std::size_t> column;
  for (const QuadraticRelation& r : rels)
    for (const RelationTerm& t : r.terms())
      column.emplace(std::make_pair(t.left, t.right), column.size());
  const Field q = Field::rationals();
  ExactMatrix m(q, rels.size(), column.size());
  for (std::size_t ri = 0; ri < rels.size(); ++ri)
    for (const RelationTerm& t : rels[ri].terms())
      m.at(ri, column.at({t.left, t.right})) = FieldElement(q, t.coeff);
  return rank(m);
}

}  // namespace sgr
