#pragma once

#include <map>
#include <string>

#include "sgr/errors.hpp"
#include "sgr/field.hpp"

namespace sgr {

/* Finitely supported vector in k((z)): a map exponent -> nonzero
   coefficient.  Zero coefficients are never stored, so emptiness means the
   zero vector and order()/degree() are well defined exactly when nonzero. */
class LaurentVector {
 public:
  explicit LaurentVector(Field field) : field_(field) {}

  LaurentVector(Field field, std::map<int, FieldElement> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      if (it->second.field() != field_)
        throw field_mismatch_error("coefficient field differs from vector field");
      if (it->second.is_zero())
        it = coeffs_.erase(it);
      else
        ++it;
    }
  }

  static LaurentVector monomial(Field field, int exponent, const FieldElement& c) {
    LaurentVector v(field);
    v.set(exponent, c);
    return v;
  }

  Field field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, FieldElement>& coefficients() const { return coeffs_; }

  FieldElement at(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? FieldElement::zero(field_) : it->second;
  }

  void set(int exponent, const FieldElement& c) {
    if (c.field() != field_)
      throw field_mismatch_error("coefficient field differs from vector field");
    if (c.is_zero())
      coeffs_.erase(exponent);
    else
      coeffs_.insert_or_assign(exponent, c);
  }

  /* Lowest exponent with nonzero coefficient. */
  int order() const {
    if (is_zero()) throw invalid_argument_error("order of the zero vector");
    return coeffs_.begin()->first;
  }

  int degree() const {
    if (is_zero()) throw invalid_argument_error("degree of the zero vector");
    return coeffs_.rbegin()->first;
  }

  LaurentVector operator+(const LaurentVector& o) const {
    check(o);
    LaurentVector s = *this;
    for (const auto& [e, c] : o.coeffs_) s.set(e, s.at(e) + c);
    return s;
  }

  LaurentVector operator*(const LaurentVector& o) const {
    check(o);
    LaurentVector p(field_);
    for (const auto& [ea, ca] : coeffs_)
      for (const auto& [eb, cb] : o.coeffs_)
        p.set(ea + eb, p.at(ea + eb) + ca * cb);
    return p;
  }

  LaurentVector scaled(const FieldElement& c) const {
    if (c.field() != field_) throw field_mismatch_error("scalar field differs");
    LaurentVector s(field_);
    for (const auto& [e, v] : coeffs_) s.set(e, v * c);
    return s;
  }

  friend bool operator==(const LaurentVector& a, const LaurentVector& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentVector& a, const LaurentVector& b) { return !(a == b); }

 private:
  void check(const LaurentVector& o) const {
    if (field_ != o.field_)
      throw field_mismatch_error("mixed fields: " + field_.name() + " and " + o.field_.name());
  }

  Field field_;
  std::map<int, FieldElement> coeffs_;
};

}  // namespace sgr
