#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

/* Base class for everything this library throws on bad input or
   unsatisfiable requests.  Catching sgr::error is enough to separate
   library failures from genuine bugs (which surface as assertions or
   standard exceptions). */
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/* Arithmetic between elements of different fields, or matrices over
   different fields. */
struct field_mismatch_error : error {
  using error::error;
};

/* Subspace operations on matrices with different column counts. */
struct ambient_mismatch_error : error {
  using error::error;
};

/* Objects attached to different window levels were combined. */
struct level_mismatch_error : error {
  using error::error;
};

/* A Maya diagram of nonzero charge where charge zero is required. */
struct charge_error : error {
  using error::error;
};

/* A point whose dimension does not match the operation's component
   requirement (most operations on Plucker coordinates need d = i). */
struct wrong_component_error : error {
  using error::error;
};

/* A basis matrix with linearly dependent rows where a basis is required. */
struct rank_deficient_error : error {
  using error::error;
};

/* Requested chart coordinate is zero or absent. */
struct not_in_chart_error : error {
  using error::error;
};

/* Coordinate vector fails the quadratic relations, so it is not the
   Plucker image of any point. */
struct not_decomposable_error : error {
  using error::error;
};

/* Inverse of a singular element, matrix or operator block. */
struct not_invertible_error : error {
  using error::error;
};

/* An operator needs a larger window than the caller allowed; the message
   reports the minimal sufficient level. */
struct window_overflow_error : error {
  using error::error;
};

/* Pencil construction on a pair of subspaces whose intersection does not
   have codimension one in each. */
struct non_adjacent_error : error {
  using error::error;
};

/* Malformed textual or JSON input. */
struct parse_error : error {
  using error::error;
};

/* Operations outside the finite presentation (non-monomial unit inverse,
   mixed-kind composition, and similar). */
struct unsupported_error : error {
  using error::error;
};

/* Catch-all for argument values outside an operation's domain. */
struct invalid_argument_error : error {
  using error::error;
};

}  // namespace sgr
