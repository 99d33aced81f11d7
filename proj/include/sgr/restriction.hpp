#pragma once

#include <optional>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/maya.hpp"
#include "sgr/plucker.hpp"
#include "sgr/points.hpp"

namespace sgr {

/* A nested pair of coordinate subspaces M ⊇ N, each named by the Maya
   diagram of its complementary chart; nesting makes outer a subset of inner
   as integer sets.  The finite quotient M/N is the window the restriction
   maps land in. */
class WindowPair {
 public:
  WindowPair(MayaDiagram outer, MayaDiagram inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.subset_of(inner_))
      throw invalid_argument_error("outer diagram must be a subset of the inner diagram");
  }

  /* M = the level window's ambient, N = its tail: outer {i, i+1, ...},
     inner {-i, -i+1, ...}. */
  static WindowPair standard(int level) {
    if (level < 1) throw invalid_argument_error("level must be positive");
    std::vector<int> k_outer, j_inner;
    for (int n = 0; n < level; ++n) k_outer.push_back(n);
    for (int n = -level; n < 0; ++n) j_inner.push_back(n);
    return WindowPair(MayaDiagram({}, std::move(k_outer)),
                      MayaDiagram(std::move(j_inner), {}));
  }

  const MayaDiagram& outer() const { return outer_; }
  const MayaDiagram& inner() const { return inner_; }

 private:
  MayaDiagram outer_, inner_;
};

/* Restriction of the global section labeled S to the window of the pair:
   defined exactly when outer ⊆ S ⊆ inner, in which case the window label is
   the finite difference S ∖ outer.  A zero-dimensional window (outer =
   inner) yields the empty list.  For the standard pair this agrees with
   truncate. */
inline std::optional<std::vector<int>> restrict_section(const MayaDiagram& s,
                                                        const WindowPair& w) {
  if (charge(s) != 0)
    throw charge_error("restriction applies to charge-zero section labels");
  if (!w.outer().subset_of(s) || !s.subset_of(w.inner())) return std::nullopt;
  std::vector<int> diff;
  for (int v : s.included_negatives())
    if (!w.outer().contains(v)) diff.push_back(v);
  for (int v : w.outer().excluded_nonnegatives())
    if (s.contains(v)) diff.push_back(v);
  std::sort(diff.begin(), diff.end());
  return diff;
}

/* Dual-basis contraction across a quotient by the first dbar basis vectors:
   a wedge of duals e*_{j_1} ∧ ... survives exactly when its first dbar
   indices are 1, ..., dbar, and then loses them.  Indices are 1-based in
   [1, dim]. */
inline std::optional<std::vector<int>> inner_contraction(const std::vector<int>& indices,
                                                         int dbar, int dim) {
  if (dbar < 0 || dbar > dim) throw invalid_argument_error("dbar must lie in [0, dim]");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > dim)
      throw invalid_argument_error("contraction index out of [1, dim]");
    if (i > 0 && indices[i - 1] >= indices[i])
      throw invalid_argument_error("contraction indices must be strictly increasing");
  }
  if (indices.size() < static_cast<std::size_t>(dbar)) return std::nullopt;
  for (int i = 0; i < dbar; ++i)
    if (indices[static_cast<std::size_t>(i)] != i + 1) return std::nullopt;
  return std::vector<int>(indices.begin() + dbar, indices.end());
}

/* Transport coordinates up a level: relabel every index set through
   between_levels, values untouched. */
inline PluckerVector pushforward_coords(const PluckerVector& v, int target_level) {
  if (target_level < v.level())
    throw invalid_argument_error("pushforward goes to a level >= the current one");
  std::map<FiniteIndexSet, FieldElement> out;
  for (const auto& [t, c] : v.coordinates()) out.emplace(between_levels(t, target_level), c);
  return PluckerVector(target_level, v.field(), std::move(out));
}

/* Transport coordinates down a level, keeping exactly the labels that
   restrict; absent when none survive. */
inline std::optional<PluckerVector> pullback_coords(const PluckerVector& v, int target_level) {
  if (target_level > v.level())
    throw invalid_argument_error("pullback goes to a level <= the current one");
  std::map<FiniteIndexSet, FieldElement> out;
  for (const auto& [t, c] : v.coordinates())
    if (auto down = restrict_level(t, target_level)) out.emplace(*down, c);
  if (out.empty()) return std::nullopt;
  return PluckerVector(target_level, v.field(), std::move(out));
}

/* The square that must commute: computing coordinates after embedding agrees
   with transporting the coordinates (projectively, and with the +1 embed
   sign in fact on the nose). */
inline bool check_embedding_diagram(const GrassPoint& p, int target_level) {
  const PluckerVector direct = plucker_vector(embed_level(p, target_level));
  const PluckerVector transported = pushforward_coords(plucker_vector(p), target_level);
  return direct.proportional_to(transported);
}

}  // namespace sgr
