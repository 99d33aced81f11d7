#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgr/errors.hpp"

namespace sgr {

/* A strictly increasing integer sequence that eventually agrees with
   j -> j, presented finitely: the negative integers it contains and the
   nonnegative integers it omits.  The sequence is

       (negatives in J, ascending) then (nonnegatives not in K, ascending).

   charge = |J| - |K|.  Diagrams of any charge are representable; the
   level-truncation operations require charge zero. */
class MayaDiagram {
 public:
  MayaDiagram(std::vector<int> included_negatives, std::vector<int> excluded_nonnegatives)
      : j_(std::move(included_negatives)), k_(std::move(excluded_nonnegatives)) {
    validate_sorted_strict(j_, "included negatives");
    validate_sorted_strict(k_, "excluded nonnegatives");
    for (int v : j_)
      if (v >= 0) throw invalid_argument_error("included set must be negative, got " + std::to_string(v));
    for (int v : k_)
      if (v < 0) throw invalid_argument_error("excluded set must be nonnegative, got " + std::to_string(v));
  }

  static MayaDiagram vacuum() { return MayaDiagram({}, {}); }

  const std::vector<int>& included_negatives() const { return j_; }
  const std::vector<int>& excluded_nonnegatives() const { return k_; }

  bool contains(int n) const {
    if (n < 0) return std::binary_search(j_.begin(), j_.end(), n);
    return !std::binary_search(k_.begin(), k_.end(), n);
  }

  /* As sets of integers. */
  bool subset_of(const MayaDiagram& o) const {
    return std::includes(o.j_.begin(), o.j_.end(), j_.begin(), j_.end()) &&
           std::includes(k_.begin(), k_.end(), o.k_.begin(), o.k_.end());
  }

  friend bool operator==(const MayaDiagram& a, const MayaDiagram& b) {
    return a.j_ == b.j_ && a.k_ == b.k_;
  }
  friend bool operator!=(const MayaDiagram& a, const MayaDiagram& b) { return !(a == b); }

 private:
  static void validate_sorted_strict(const std::vector<int>& v, const char* what) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] >= v[i])
        throw invalid_argument_error(std::string(what) + " must be strictly increasing");
  }

  std::vector<int> j_, k_;
};

inline int charge(const MayaDiagram& m) {
  return static_cast<int>(m.included_negatives().size()) -
         static_cast<int>(m.excluded_nonnegatives().size());
}

/* An i-element subset of the window [-i, i-1], the label of one Plucker
   coordinate at level i.  Ordered lexicographically on the element list
   (level compared first so mixed-level containers stay deterministic). */
class FiniteIndexSet {
 public:
  FiniteIndexSet(int level, std::vector<int> elements)
      : level_(level), elements_(std::move(elements)) {
    if (level < 1) throw invalid_argument_error("level must be positive");
    if (elements_.size() != static_cast<std::size_t>(level))
      throw invalid_argument_error("index set at level " + std::to_string(level) +
                                   " needs exactly " + std::to_string(level) + " elements");
    for (std::size_t i = 1; i < elements_.size(); ++i)
      if (elements_[i - 1] >= elements_[i])
        throw invalid_argument_error("index set elements must be strictly increasing");
    if (!elements_.empty() && (elements_.front() < -level || elements_.back() >= level))
      throw invalid_argument_error("index set elements must lie in [-level, level-1]");
  }

  int level() const { return level_; }
  const std::vector<int>& elements() const { return elements_; }

  bool contains(int n) const {
    return std::binary_search(elements_.begin(), elements_.end(), n);
  }

  /* The other i window indices, ascending. */
  std::vector<int> complement_elements() const {
    std::vector<int> out;
    out.reserve(level_);
    for (int n = -level_; n < level_; ++n)
      if (!contains(n)) out.push_back(n);
    return out;
  }

  friend bool operator==(const FiniteIndexSet& a, const FiniteIndexSet& b) {
    return a.level_ == b.level_ && a.elements_ == b.elements_;
  }
  friend bool operator!=(const FiniteIndexSet& a, const FiniteIndexSet& b) { return !(a == b); }
  friend bool operator<(const FiniteIndexSet& a, const FiniteIndexSet& b) {
    if (a.level_ != b.level_) return a.level_ < b.level_;
    return a.elements_ < b.elements_;
  }

 private:
  int level_;
  std::vector<int> elements_;
};

/* First i entries of the sequence, defined when the diagram has charge zero,
   contains every integer >= i and nothing below -i.  For charge zero those
   two containment conditions already force the first i entries into
   [-i, i-1]. */
inline std::optional<FiniteIndexSet> truncate(const MayaDiagram& m, int level) {
  if (level < 1) throw invalid_argument_error("level must be positive");
  if (charge(m) != 0)
    throw charge_error("truncation requires charge zero, got " + std::to_string(charge(m)));
  const std::vector<int>& j = m.included_negatives();
  const std::vector<int>& k = m.excluded_nonnegatives();
  if (!j.empty() && j.front() < -level) return std::nullopt;
  if (!k.empty() && k.back() >= level) return std::nullopt;
  std::vector<int> elems(j);
  for (int n = 0; n < level; ++n)
    if (m.contains(n)) elems.push_back(n);
  return FiniteIndexSet(level, std::move(elems));
}

/* The charge-zero diagram {s_0, ..., s_{i-1}, i, i+1, ...}: the unique
   section of truncation at this level. */
inline MayaDiagram pad(const FiniteIndexSet& t) {
  std::vector<int> j, k;
  for (int v : t.elements())
    if (v < 0) j.push_back(v);
  for (int n = 0; n < t.level(); ++n)
    if (!t.contains(n)) k.push_back(n);
  return MayaDiagram(std::move(j), std::move(k));
}

/* All C(2i, i) index sets at one level, lexicographically ordered. */
inline std::vector<FiniteIndexSet> enumerate_level(int level) {
  if (level < 1) throw invalid_argument_error("level must be positive");
  std::vector<FiniteIndexSet> out;
  std::vector<int> pick(level);
  for (int i = 0; i < level; ++i) pick[i] = -level + i;
  while (true) {
    out.emplace_back(level, pick);
    /* Largest value position i can hold is i, reached in the final
       combination {0, 1, ..., level-1}. */
    int i = level - 1;
    while (i >= 0 && pick[i] == i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < level; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

/* Label transport from level i up to level j: pad then truncate.  Always
   defined; concretely appends i, i+1, ..., j-1. */
inline FiniteIndexSet between_levels(const FiniteIndexSet& t, int target_level) {
  if (target_level < t.level())
    throw invalid_argument_error("between_levels goes to a level >= the current one");
  std::vector<int> elems = t.elements();
  for (int n = t.level(); n < target_level; ++n) elems.push_back(n);
  return FiniteIndexSet(target_level, std::move(elems));
}

/* Label transport down to a smaller level: defined when the padded diagram
   truncates there, i.e. the set contains i, ..., j-1 and nothing below -i. */
inline std::optional<FiniteIndexSet> restrict_level(const FiniteIndexSet& t, int target_level) {
  if (target_level > t.level())
    throw invalid_argument_error("restrict_level goes to a level <= the current one");
  return truncate(pad(t), target_level);
}

/* Interpret a raw entry list as a signed index set: absent on a repeated or
   out-of-window entry, otherwise the sorted set together with the sign of
   the sorting permutation. */
inline std::optional<std::pair<FiniteIndexSet, int>> sign_normalize(int level,
                                                                    const std::vector<int>& raw) {
  if (level < 1) throw invalid_argument_error("level must be positive");
  if (raw.size() != static_cast<std::size_t>(level))
    throw invalid_argument_error("raw list length must equal the level");
  for (int v : raw)
    if (v < -level || v >= level) return std::nullopt;
  std::vector<int> sorted = raw;
  int sign = 1;
  /* Insertion sort; each adjacent swap flips the sign. */
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i]) return std::nullopt;
  return std::make_pair(FiniteIndexSet(level, std::move(sorted)), sign);
}

}  // namespace sgr
