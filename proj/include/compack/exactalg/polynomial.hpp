#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "compack/errors.hpp"
#include "compack/exactalg/rational.hpp"

namespace compack {

namespace detail {
template <class T>
bool coefficient_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial with coefficients in a commutative ring T,
/// stored low degree to high. The zero polynomial has no coefficients.
///
/// T must be default-constructible to its zero and provide an `is_zero`
/// overload found by argument-dependent lookup. Nesting is allowed:
/// `Polynomial<Polynomial<Rational>>` is a bivariate polynomial whose outer
/// variable is the one a resultant eliminates.
template <class T>
class Polynomial {
 public:
  using Coefficient = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

  static Polynomial monomial(T value, std::size_t exponent) {
    std::vector<T> c(exponent + 1);
    c[exponent] = std::move(value);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  const std::vector<T>& coefficients() const { return c_; }

  /// Coefficient of x^k; zero beyond the degree.
  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(); }
  const T& operator[](std::size_t k) const { return c_[k]; }
  const T& leading() const { return c_.back(); }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (compack_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (compack_is_zero(b.c_[j])) continue;
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  /// Multiplication by a ring element.
  friend Polynomial scale(const Polynomial& a, const T& s) {
    std::vector<T> out(a.c_);
    for (auto& x : out) x = x * s;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Horner evaluation at x; U must absorb T by addition.
  template <class U>
  U evaluate(const U& x) const {
    if (c_.empty()) return x * T();
    U acc = x * T() + c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Multiply by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> out(k);
    out.insert(out.end(), c_.begin(), c_.end());
    return Polynomial(std::move(out));
  }

 private:
  static bool compack_is_zero(const T& x) { return detail::coefficient_is_zero(x); }

  void trim() {
    while (!c_.empty() && compack_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
bool is_zero(const Polynomial<T>& p) {
  return p.is_zero();
}

using RationalPoly = Polynomial<Rational>;
/// Polynomial in an outer variable X whose coefficients are polynomials in r.
using BivariatePoly = Polynomial<RationalPoly>;

// ---------------------------------------------------------------------------
// Operations over Q[x].

RationalPoly make_poly(std::initializer_list<long> coefficients_low_to_high);

RationalPoly derivative(const RationalPoly& p);

/// Euclidean division; throws DegenerateInput on a zero divisor.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator/(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator%(const RationalPoly& a, const RationalPoly& b);

/// True when b divides a exactly.
bool divides(const RationalPoly& b, const RationalPoly& a);

/// Monic greatest common divisor (zero only when both inputs are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// Extended Euclid: returns (g, s, t) with s a + t b = g, g monic.
struct ExtendedGcd {
  RationalPoly g, s, t;
};
ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b);

RationalPoly monic(const RationalPoly& p);

/// Canonical form: integer coefficients with unit content and positive
/// leading coefficient. The zero polynomial maps to itself.
RationalPoly primitive_part(const RationalPoly& p);
std::vector<Integer> integer_coefficients(const RationalPoly& p);
RationalPoly from_integers(const std::vector<Integer>& c);

/// p(a + b x).
RationalPoly compose_affine(const RationalPoly& p, const Rational& a, const Rational& b);

/// x^deg p(1/x).
RationalPoly reversed(const RationalPoly& p);

int sign_at(const RationalPoly& p, const Rational& x);

/// Human-readable form using the given variable name, highest degree first.
std::string to_string(const RationalPoly& p, const std::string& var = "X");

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace compack
