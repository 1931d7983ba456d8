#pragma once

#include <string>
#include <vector>

#include "compack/exactalg/interval.hpp"
#include "compack/exactalg/polynomial.hpp"

namespace compack {

/// Number of sign variations in the coefficient sequence (zeros skipped).
int sign_variations(const RationalPoly& p);

/// Upper bound on the number of roots of p in the open interval (a, b) by
/// Descartes' rule applied to the Moebius transform; exact when it is 0 or 1.
int descartes_bound(const RationalPoly& p, const Rational& a, const Rational& b);

/// A real algebraic number: an irreducible primitive minimal polynomial and
/// an isolating interval. Rational numbers carry a degree-one minpoly and a
/// point isolator; irrational ones an open interval (lo, hi) with rational
/// endpoints at which the minpoly has opposite nonzero signs.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rational(0)) {}
  explicit AlgebraicReal(const Rational& value);

  /// Validates irreducibility and that exactly one root lies in (lo, hi).
  static AlgebraicReal from_isolator(const RationalPoly& minpoly, const Rational& lo, const Rational& hi);

  /// The root of an irreducible polynomial nearest to `approx`, isolated
  /// within (approx - radius, approx + radius); throws if that window holds
  /// no root or more than one.
  static AlgebraicReal near(const RationalPoly& minpoly, const Rational& approx, const Rational& radius);

  const RationalPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return minpoly_.degree() == 1; }
  /// The exact value; only valid for rational numbers.
  Rational rational_value() const;

  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  /// Same number with isolator width at most `width` (width > 0).
  AlgebraicReal refined(const Rational& width) const;

  /// Outward-rounded enclosure of width at most 2^-bits.
  DyadicInterval enclose(long bits) const;
  /// Isolator as an interval at the given precision.
  DyadicInterval isolator(long precision_bits = 64) const;

  double approx() const;

  /// Exact sign of q(this).
  int sign_of(const RationalPoly& q) const;

  /// Exact three-way comparison.
  int compare(const AlgebraicReal& o) const;
  int compare(const Rational& q) const;

  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) == 0; }
  friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) != 0; }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) < 0; }

  std::string to_string(int digits = 12) const;

 private:
  AlgebraicReal(RationalPoly minpoly, Rational lo, Rational hi);
  void bisect();

  RationalPoly minpoly_;
  Rational lo_, hi_;
  int sign_lo_ = 0;  // sign of minpoly at lo_ (irrational case)
};

/// One AlgebraicReal per distinct real root of p in the open interval (a, b),
/// each carrying its irreducible factor of p; sorted ascending.
std::vector<AlgebraicReal> isolate_real_roots(const RationalPoly& p, const Rational& a, const Rational& b);

/// Roots of an irreducible p in (a, b), same contract as isolate_real_roots.
std::vector<AlgebraicReal> isolate_irreducible_roots(const RationalPoly& p, const Rational& a, const Rational& b);

/// Interval Horner evaluation of p over x.
DyadicInterval evaluate(const RationalPoly& p, const DyadicInterval& x);

}  // namespace compack
