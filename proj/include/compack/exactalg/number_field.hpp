#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "compack/exactalg/algebraic_real.hpp"
#include "compack/exactalg/polynomial.hpp"

namespace compack {

/// The real number field Q(alpha) for an algebraic alpha, shared by all of
/// its elements. Refinements of alpha's isolator are cached.
class NumberField {
 public:
  explicit NumberField(AlgebraicReal generator);

  const AlgebraicReal& generator() const { return generator_; }
  const RationalPoly& modulus() const { return generator_.minpoly(); }
  int degree() const { return generator_.degree(); }

  /// Enclosure of alpha of width at most 2^-bits.
  DyadicInterval generator_enclosure(long bits) const;

  bool same_as(const NumberField& o) const;

 private:
  AlgebraicReal generator_;
  mutable std::mutex mutex_;
  mutable AlgebraicReal best_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const AlgebraicReal& generator);

/// Element of Q(alpha) stored as a polynomial in alpha of degree below
/// [Q(alpha):Q]. Elements without a field are rational constants and combine
/// with elements of any field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Rational& q);  // NOLINT(google-explicit-constructor)
  FieldElement(long q) : FieldElement(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(FieldPtr field, const RationalPoly& value);

  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  /// Representative polynomial in alpha, reduced modulo the minimal polynomial.
  const RationalPoly& poly() const { return value_; }

  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return value_.degree() <= 0; }
  Rational rational_value() const;

  FieldElement operator-() const { return {field_, -value_}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  /// Throws DegenerateInput on division by zero.
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return (a - b).is_zero(); }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement inverse() const;

  /// Exact sign of the real value.
  int sign() const;
  /// Enclosure of width at most 2^-bits.
  DyadicInterval enclose(long bits) const;
  double approx() const { return enclose(60).mid_double(); }

  std::string to_string(const std::string& var = "r") const;

 private:
  static FieldPtr common(const FieldElement& a, const FieldElement& b);

  FieldPtr field_;
  RationalPoly value_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline int sign(const FieldElement& x) { return x.sign(); }
inline DyadicInterval enclose(const FieldElement& x, long bits) { return x.enclose(bits); }

}  // namespace compack
