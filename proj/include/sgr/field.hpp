#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

#include "sgr/errors.hpp"

namespace sgr {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  /* Operands stay below 2^31, so the product fits in 64 bits. */
  return (a * b) % m;
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

/* Deterministic Miller-Rabin; the bases 2, 7, 61 decide primality for all
   inputs below 2^32. */
inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int k = 1; k < r; ++k) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

/* Coefficient field descriptor: the rationals or a prime field GF(p) with
   p < 2^31.  Value type, cheap to copy. */
class Field {
 public:
  static Field rationals() { return Field(0); }

  static Field gf(std::uint32_t p) {
    if (p >= (1u << 31))
      throw invalid_argument_error("GF modulus must be below 2^31, got " + std::to_string(p));
    if (!detail::is_prime_u32(p))
      throw invalid_argument_error("GF modulus must be prime, got " + std::to_string(p));
    return Field(p);
  }

  bool is_rational() const { return p_ == 0; }
  bool is_gf() const { return p_ != 0; }

  /* 0 for the rationals. */
  std::uint32_t modulus() const { return p_; }

  std::string name() const {
    return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
  }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/* An exact scalar: a rational in lowest terms with positive denominator, or
   a residue in [0, p).  Elements of different fields never mix; arithmetic
   across fields throws field_mismatch_error. */
class FieldElement {
 public:
  FieldElement(Field field, long long value) : field_(field) {
    if (field.is_rational()) {
      value_ = Rational(value);
    } else {
      const std::int64_t p = field.modulus();
      value_ = static_cast<std::uint32_t>(((value % p) + p) % p);
    }
  }

  FieldElement(Field field, Rational value) : field_(field) {
    if (!field.is_rational())
      throw field_mismatch_error("rational literal used for a " + field.name() + " element");
    value_ = std::move(value);
  }

  static FieldElement zero(Field field) { return FieldElement(field, 0); }
  static FieldElement one(Field field) { return FieldElement(field, 1); }

  Field field() const { return field_; }

  bool is_zero() const {
    if (field_.is_rational()) return rational() == 0;
    return residue() == 0;
  }

  bool is_one() const {
    if (field_.is_rational()) return rational() == 1;
    return residue() == 1 % field_.modulus();
  }

  const Rational& rational() const {
    if (!field_.is_rational()) throw field_mismatch_error("element is not rational");
    return std::get<Rational>(value_);
  }

  std::uint32_t residue() const {
    if (!field_.is_gf()) throw field_mismatch_error("element is not a GF(p) residue");
    return std::get<std::uint32_t>(value_);
  }

  FieldElement operator-() const {
    if (field_.is_rational()) return FieldElement(field_, Rational(-rational()));
    return make_gf(field_, residue() == 0 ? 0 : field_.modulus() - residue());
  }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    if (field_.is_rational()) return FieldElement(field_, Rational(rational() + o.rational()));
    std::uint64_t s = std::uint64_t(residue()) + o.residue();
    if (s >= field_.modulus()) s -= field_.modulus();
    return make_gf(field_, static_cast<std::uint32_t>(s));
  }

  FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

  FieldElement operator*(const FieldElement& o) const {
    check(o);
    if (field_.is_rational()) return FieldElement(field_, Rational(rational() * o.rational()));
    return make_gf(field_, static_cast<std::uint32_t>(
                               detail::mulmod_u64(residue(), o.residue(), field_.modulus())));
  }

  FieldElement inverse() const {
    if (is_zero()) throw not_invertible_error("inverse of zero in " + field_.name());
    if (field_.is_rational())
      return FieldElement(field_, Rational(1) / rational());
    /* Fermat: a^(p-2) mod p. */
    return make_gf(field_, static_cast<std::uint32_t>(detail::powmod_u64(
                               residue(), field_.modulus() - 2, field_.modulus())));
  }

  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) return false;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /* "a/b" in lowest terms (plain "a" for integers), or the residue. */
  std::string str() const {
    if (field_.is_gf()) return std::to_string(residue());
    const Rational& r = rational();
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
      s += "/" + boost::multiprecision::denominator(r).str();
    return s;
  }

 private:
  static FieldElement make_gf(Field f, std::uint32_t residue) {
    FieldElement e(f, 0);
    e.value_ = residue;
    return e;
  }

  void check(const FieldElement& o) const {
    if (field_ != o.field_)
      throw field_mismatch_error("mixed fields: " + field_.name() + " and " + o.field_.name());
  }

  Field field_;
  std::variant<Rational, std::uint32_t> value_;
};

}  // namespace sgr
