#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "compack/exactalg/interval.hpp"
#include "compack/exactalg/rational.hpp"

namespace compack {

/// Element a + b√2 + c√3 + d√6 of the real field Q(√2, √3), exact.
class Biquadratic {
 public:
  Biquadratic() = default;
  Biquadratic(const Rational& a) : c_{a, 0, 0, 0} { c_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)
  Biquadratic(long a) : Biquadratic(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  Biquadratic(int a) : Biquadratic(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  Biquadratic(Rational a, Rational b, Rational c, Rational d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (auto& x : c_) x.canonicalize();
  }

  static Biquadratic sqrt2() { return {0, 1, 0, 0}; }
  static Biquadratic sqrt3() { return {0, 0, 1, 0}; }
  static Biquadratic sqrt6() { return {0, 0, 0, 1}; }

  /// Coordinates over the basis (1, √2, √3, √6).
  const std::array<Rational, 4>& coordinates() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

  Biquadratic operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  Biquadratic& operator+=(const Biquadratic& o);
  Biquadratic& operator-=(const Biquadratic& o);
  Biquadratic& operator*=(const Biquadratic& o);
  Biquadratic& operator/=(const Biquadratic& o);
  friend Biquadratic operator+(Biquadratic a, const Biquadratic& b) { return a += b; }
  friend Biquadratic operator-(Biquadratic a, const Biquadratic& b) { return a -= b; }
  friend Biquadratic operator*(Biquadratic a, const Biquadratic& b) { return a *= b; }
  friend Biquadratic operator/(Biquadratic a, const Biquadratic& b) { return a /= b; }

  /// Throws DegenerateInput for zero.
  Biquadratic inverse() const;

  /// Exact sign of the real value.
  int sign() const;

  friend bool operator==(const Biquadratic& a, const Biquadratic& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Biquadratic& a, const Biquadratic& b) { return !(a == b); }
  friend bool operator<(const Biquadratic& a, const Biquadratic& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Biquadratic& a, const Biquadratic& b) { return b < a; }
  friend bool operator<=(const Biquadratic& a, const Biquadratic& b) { return !(b < a); }
  friend bool operator>=(const Biquadratic& a, const Biquadratic& b) { return !(a < b); }

  /// Nonnegative square root when it lies in the field.
  std::optional<Biquadratic> sqrt() const;

  DyadicInterval enclose(long bits) const;
  /// Nearest-ish double; for filtering and display, never for decisions.
  double to_double() const;

  /// E.g. "1/2 + 3√2 - √6".
  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

}  // namespace compack

namespace Eigen {
template <>
struct NumTraits<compack::Biquadratic> : GenericNumTraits<compack::Biquadratic> {
  typedef compack::Biquadratic Real;
  typedef compack::Biquadratic NonInteger;
  typedef compack::Biquadratic Nested;
  typedef compack::Biquadratic Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace compack {

inline bool is_zero(const Biquadratic& x) { return x.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Biquadratic& x);

/// Square root of a rational when it is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

using Vec3 = Eigen::Matrix<Biquadratic, 3, 1>;
using Mat3 = Eigen::Matrix<Biquadratic, 3, 3>;

Vec3 make_vec(const Biquadratic& x, const Biquadratic& y, const Biquadratic& z);

inline Biquadratic dot(const Vec3& a, const Vec3& b) { return a(0) * b(0) + a(1) * b(1) + a(2) * b(2); }
inline Biquadratic squared_norm(const Vec3& a) { return dot(a, a); }
inline Biquadratic squared_distance(const Vec3& a, const Vec3& b) { return squared_norm(a - b); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return make_vec(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0));
}
inline Biquadratic triple_product(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// Lexicographic order on exact coordinates.
bool vec_less(const Vec3& a, const Vec3& b);

Eigen::Vector3d to_double(const Vec3& v);
std::string to_string(const Vec3& v);

}  // namespace compack


namespace compack {

class AlgebraicReal;

/// The same number as an element of Q(√2, √3), when it lies there and has
/// degree at most two.
std::optional<Biquadratic> to_biquadratic(const AlgebraicReal& x);

}  // namespace compack
