#pragma once

#include <mpfr.h>

#include <string>

#include "compack/exactalg/rational.hpp"

namespace compack {

/// Closed interval [lo, hi] with dyadic endpoints held at a fixed binary
/// precision. Every operation rounds outward, so the exact result of the
/// operation applied to any members of the operands lies in the output.
class DyadicInterval {
 public:
  explicit DyadicInterval(long precision_bits = 64);
  DyadicInterval(const Rational& value, long precision_bits);
  DyadicInterval(const Rational& lo, const Rational& hi, long precision_bits);

  DyadicInterval(const DyadicInterval& other);
  DyadicInterval(DyadicInterval&& other) noexcept;
  DyadicInterval& operator=(const DyadicInterval& other);
  DyadicInterval& operator=(DyadicInterval&& other) noexcept;
  ~DyadicInterval();

  static DyadicInterval pi(long precision_bits);

  long precision() const { return prec_; }

  Rational lower() const;
  Rational upper() const;
  Rational width() const { return upper() - lower(); }
  Rational midpoint() const { return (lower() + upper()) / 2; }
  /// Endpoints rounded outward to double.
  double lower_double() const;
  double upper_double() const;
  double mid_double() const;

  bool contains(const Rational& x) const;
  bool contains(const DyadicInterval& inner) const;
  bool contains_zero() const;
  bool positive() const;  // lo > 0
  bool negative() const;  // hi < 0
  /// -1 / +1 when the sign is certain, 0 when the interval straddles or touches 0.
  int certain_sign() const;
  bool is_point() const;

  bool precedes(const DyadicInterval& o) const;  // hi < o.lo

  friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);
  /// Throws DegenerateInput when the divisor contains zero.
  friend DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b);
  DyadicInterval operator-() const;

  friend DyadicInterval operator+(const DyadicInterval& a, const Rational& b);
  friend DyadicInterval operator*(const DyadicInterval& a, const Rational& b);

  /// Square root; a negative lower endpoint is clamped to zero, so the caller
  /// must know the exact value is nonnegative. Throws if hi < 0.
  friend DyadicInterval sqrt(const DyadicInterval& a);
  /// Arc cosine; endpoints are clamped to [-1, 1] under the same contract.
  friend DyadicInterval acos(const DyadicInterval& a);
  friend DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);

  DyadicInterval with_precision(long precision_bits) const;

  std::string to_string(int digits = 12) const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  long prec_;
};

}  // namespace compack
