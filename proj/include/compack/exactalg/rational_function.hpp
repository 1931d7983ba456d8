#pragma once

#include <string>

#include "compack/exactalg/number_field.hpp"
#include "compack/exactalg/polynomial.hpp"

namespace compack {

/// Element of Q(r): a reduced quotient num/den with den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(make_poly({1})) {}
  RationalFunction(const Rational& q) : num_(RationalPoly::constant(q)), den_(make_poly({1})) {}  // NOLINT
  RationalFunction(long q) : RationalFunction(Rational(q)) {}  // NOLINT
  RationalFunction(const RationalPoly& num) : num_(num), den_(make_poly({1})) {}  // NOLINT
  RationalFunction(const RationalPoly& num, const RationalPoly& den);

  static RationalFunction variable() { return RationalFunction(make_poly({0, 1})); }

  const RationalPoly& numerator() const { return num_; }
  const RationalPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// f(1/r).
  RationalFunction reciprocal_substitution() const;

  Rational evaluate(const Rational& x) const;
  /// Value at the generator of a number field; throws if the denominator vanishes there.
  FieldElement evaluate(const FieldElement& x) const;

  std::string to_string(const std::string& var = "r") const;

 private:
  void normalize();

  RationalPoly num_;
  RationalPoly den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace compack
