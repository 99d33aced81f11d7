#pragma once

#include "sgr/errors.hpp"
#include "sgr/laurent.hpp"
#include "sgr/matrix.hpp"
#include "sgr/points.hpp"

namespace sgr {

/* Residue pairing of two finite Laurent vectors: the coefficient of z^{-1}
   in f(z) g(-z), i.e. sum of f_a g_b (-1)^b over a + b = -1.  It is
   antisymmetric in characteristic other than 2; over GF(2) it degenerates
   to a symmetric form and the module's geometric guarantees do not apply. */
inline FieldElement residue_pairing(const LaurentVector& f, const LaurentVector& g) {
  if (!(f.field() == g.field())) throw field_mismatch_error("pairing needs a common field");
  FieldElement acc = FieldElement::zero(f.field());
  for (const auto& [a, fa] : f.coefficients()) {
    const int b = -1 - a;
    const FieldElement gb = g.at(b);
    if (gb.is_zero()) continue;
    const FieldElement sign(f.field(), (b % 2 == 0) ? 1 : -1);
    acc = acc + fa * gb * sign;
  }
  return acc;
}

/* Matrix of the residue pairing on the level window, rows and columns both
   indexed by exponents -level .. level-1 in column order.  Nonzero exactly
   on the antidiagonal exp_r + exp_c = -1, with value (-1)^{exp_r}; at level
   1 this is [[0,-1],[1,0]]. */
inline ExactMatrix gram_matrix(const Field& field, int level) {
  if (level < 1) throw invalid_argument_error("level must be positive");
  const int n = 2 * level;
  ExactMatrix g(field, n, n);
  for (int r = 0; r < n; ++r) {
    const int exp_r = r - level;
    const int exp_c = -1 - exp_r;
    const int c = exp_c + level;
    if (c < 0 || c >= n) continue;
    g.set(r, c, FieldElement(field, (exp_r % 2 == 0) ? 1 : -1));
  }
  return g;
}

/* Orthogonal complement under the residue pairing, inside the same window:
   all window vectors pairing to zero against every row of p.  The pairing of
   row w against candidate x is (B G^T x) with B the basis matrix, so the
   complement is the kernel of B G^T.  Dimension is 2*level - dim p and the
   shift index negates. */
inline GrassPoint perp(const GrassPoint& p) {
  const ExactMatrix g = gram_matrix(p.field(), p.level());
  return GrassPoint(p.level(), kernel(p.basis().multiplied(g.transposed())));
}

/* Image of p under the pairing-induced identification of the window with its
   dual: each basis row w becomes the functional pairing(-, w), whose
   coordinate vector is w G. */
inline GrassPoint gram_transport(const GrassPoint& p) {
  const ExactMatrix g = gram_matrix(p.field(), p.level());
  return GrassPoint(p.level(), p.basis().multiplied(g));
}

/* Annihilator of p in the dual window: functionals vanishing on p, i.e. the
   kernel of the basis matrix.  Equals the gram transport of perp(p). */
inline GrassPoint annihilator(const GrassPoint& p) {
  return GrassPoint(p.level(), kernel(p.basis()));
}

}  // namespace sgr
