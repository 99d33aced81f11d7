#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/matrix.hpp"
#include "sgr/points.hpp"

namespace sgr {

/* Deterministic random source.  mt19937_64 output is pinned by the C++
   standard, and values are drawn by modulo rather than through
   implementation-defined distributions, so a seed fixes the byte stream on
   every platform. */
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /* Uniform-enough integer in [lo, hi]; modulo bias is irrelevant here. */
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  FieldElement element(Field f, long long bound) {
    if (f.is_rational()) return FieldElement(f, uniform(-bound, bound));
    return FieldElement(f, uniform(0, f.modulus() - 1));
  }

 private:
  std::mt19937_64 engine_;
};

/* Random d-dimensional point at the given level, resampled until the rows
   are independent.  Rational entries are drawn from [-bound, bound]. */
inline GrassPoint random_point(Field field, int level, int d, SeededRng& rng,
                               long long bound = 3) {
  if (d < 0 || d > 2 * level)
    throw invalid_argument_error("point dimension must lie in [0, 2*level]");
  while (true) {
    ExactMatrix m(field, static_cast<std::size_t>(d), 2 * static_cast<std::size_t>(level));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rng.element(field, bound);
    if (rank(m) == static_cast<std::size_t>(d)) return GrassPoint(level, m);
  }
}

/* Every d-dimensional subspace of GF(p)^n, one rref matrix each, generated
   directly from the echelon normal form: choose pivot columns, then fill
   the free entries (row r may be nonzero only right of its pivot and off
   the other pivots).  Count is the Gaussian binomial. */
inline std::vector<ExactMatrix> enumerate_subspaces(Field field, std::size_t ambient,
                                                    std::size_t d) {
  if (!field.is_gf())
    throw invalid_argument_error("exhaustive enumeration needs a finite field");
  if (d > ambient) throw invalid_argument_error("subspace dimension exceeds ambient");
  const std::uint64_t p = field.modulus();
  std::vector<ExactMatrix> out;

  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = pivots[r] + 1; c < ambient; ++c) {
        bool is_pivot = false;
        for (std::size_t k = 0; k < d; ++k)
          if (pivots[k] == c) is_pivot = true;
        if (!is_pivot) free_pos.emplace_back(r, c);
      }
    std::vector<std::uint64_t> fill(free_pos.size(), 0);
    while (true) {
      ExactMatrix m(field, d, ambient);
      for (std::size_t r = 0; r < d; ++r)
        m.at(r, pivots[r]) = FieldElement::one(field);
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        m.at(free_pos[i].first, free_pos[i].second) =
            FieldElement(field, static_cast<long long>(fill[i]));
      out.push_back(std::move(m));
      std::size_t i = 0;
      while (i < fill.size() && fill[i] == p - 1) fill[i++] = 0;
      if (i == fill.size()) break;
      ++fill[i];
    }
    if (d == 0) break;
    /* Next pivot combination in [0, ambient). */
    std::size_t i = d;
    while (i > 0 && pivots[i - 1] == ambient - d + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t t = i; t < d; ++t) pivots[t] = pivots[t - 1] + 1;
  }
  return out;
}

/* All d-dimensional points of the level-i window over a finite field. */
inline std::vector<GrassPoint> enumerate_points(Field field, int level, int d) {
  std::vector<GrassPoint> pts;
  for (ExactMatrix& m :
       enumerate_subspaces(field, 2 * static_cast<std::size_t>(level),
                           static_cast<std::size_t>(d)))
    pts.emplace_back(level, m);
  return pts;
}

}  // namespace sgr
