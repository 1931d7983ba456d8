#include "compack/geometry/biquadratic.hpp"

#include <cmath>
#include <sstream>

#include "compack/errors.hpp"
#include "compack/exactalg/algebraic_real.hpp"

namespace compack {

namespace {

// a + b√2 as a pair, for the tower Q(√2) ⊂ Q(√2, √3).
struct Quad2 {
  Rational a, b;
};

Quad2 mul(const Quad2& x, const Quad2& y) { return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a}; }
Quad2 sub(const Quad2& x, const Quad2& y) { return {x.a - y.a, x.b - y.b}; }
Quad2 add(const Quad2& x, const Quad2& y) { return {x.a + y.a, x.b + y.b}; }
Quad2 scale(const Quad2& x, const Rational& s) { return {x.a * s, x.b * s}; }
bool zero(const Quad2& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }

// Sign of a + b·sqrt(d) for a square-free rational d > 1 given signs of a and b.
int sign_with_root(int sa, int sb, int s_norm) {
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  if (s_norm == 0) return 0;
  return s_norm > 0 ? sa : sb;
}

int quad_sign(const Quad2& x) {
  const Rational norm = x.a * x.a - 2 * x.b * x.b;
  return sign_with_root(sgn(x.a), sgn(x.b), sgn(norm));
}

Quad2 quad_inverse(const Quad2& x) {
  const Rational norm = x.a * x.a - 2 * x.b * x.b;
  if (sgn(norm) == 0) throw DegenerateInput("division by zero in Q(√2, √3)");
  return {x.a / norm, -x.b / norm};
}

std::optional<Quad2> quad_sqrt(const Quad2& x) {
  if (sgn(x.b) == 0) {
    if (auto r = rational_sqrt(x.a)) return Quad2{*r, 0};
    if (auto r = rational_sqrt(x.a / 2)) return Quad2{0, *r};
    return std::nullopt;
  }
  // (u + v√2)^2 = u^2 + 2v^2 + 2uv√2, so u^2 = (a ± sqrt(a^2 - 2b^2)) / 2.
  const auto disc = rational_sqrt(x.a * x.a - 2 * x.b * x.b);
  if (!disc) return std::nullopt;
  for (const Rational& u2 : {Rational((x.a + *disc) / 2), Rational((x.a - *disc) / 2)}) {
    if (sgn(u2) <= 0) continue;
    const auto u = rational_sqrt(u2);
    if (!u) continue;
    Quad2 root{*u, x.b / (2 * *u)};
    if (quad_sign(root) < 0) root = {-root.a, -root.b};
    return root;
  }
  return std::nullopt;
}

// Splits x = P + Q√3 with P, Q in Q(√2).
std::pair<Quad2, Quad2> split(const Biquadratic& x) { return {{x[0], x[1]}, {x[2], x[3]}}; }
Biquadratic join(const Quad2& p, const Quad2& q) { return {p.a, p.b, q.a, q.b}; }

DyadicInterval root_of(long n, long prec) { return sqrt(DyadicInterval(Rational(n), prec)); }

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

Biquadratic& Biquadratic::operator+=(const Biquadratic& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Biquadratic& Biquadratic::operator-=(const Biquadratic& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Biquadratic& Biquadratic::operator*=(const Biquadratic& o) {
  const auto& [a, b, c, d] = c_;
  const auto& [e, f, g, h] = o.c_;
  // √2√3 = √6, √2√6 = 2√3, √3√6 = 3√2, √6√6 = 6.
  Biquadratic out(a * e + 2 * b * f + 3 * c * g + 6 * d * h,
                  a * f + b * e + 3 * c * h + 3 * d * g,
                  a * g + c * e + 2 * b * h + 2 * d * f,
                  a * h + d * e + b * g + c * f);
  *this = std::move(out);
  return *this;
}

Biquadratic& Biquadratic::operator/=(const Biquadratic& o) { return *this *= o.inverse(); }

Biquadratic Biquadratic::inverse() const {
  if (is_zero()) throw DegenerateInput("division by zero in Q(√2, √3)");
  const auto [p, q] = split(*this);
  // (P + Q√3)(P - Q√3) = P^2 - 3Q^2 in Q(√2).
  const Quad2 norm = sub(mul(p, p), scale(mul(q, q), 3));
  const Quad2 inv = quad_inverse(norm);
  return join(mul(p, inv), scale(mul(q, inv), -1));
}

int Biquadratic::sign() const {
  const auto [p, q] = split(*this);
  const int sp = quad_sign(p);
  const int sq = quad_sign(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sp == 0 ? sq : sp;
  return sign_with_root(sp, sq, quad_sign(sub(mul(p, p), scale(mul(q, q), 3))));
}

std::optional<Biquadratic> Biquadratic::sqrt() const {
  const int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return Biquadratic();
  const auto [p, q] = split(*this);
  std::optional<Biquadratic> out;
  if (zero(q)) {
    // Either R = sqrt(P), or R = 0 and S = sqrt(P / 3).
    if (auto r = quad_sqrt(p)) {
      out = join(*r, {0, 0});
    } else if (auto t = quad_sqrt(scale(p, Rational(1, 3)))) {
      out = join({0, 0}, *t);
    }
  } else {
    // (R + S√3)^2 = R^2 + 3S^2 + 2RS√3, so R^2 = (P ± sqrt(P^2 - 3Q^2)) / 2.
    const auto disc = quad_sqrt(sub(mul(p, p), scale(mul(q, q), 3)));
    if (!disc) return std::nullopt;
    for (const Quad2& r2 : {scale(add(p, *disc), Rational(1, 2)), scale(sub(p, *disc), Rational(1, 2))}) {
      if (quad_sign(r2) <= 0) continue;
      const auto r = quad_sqrt(r2);
      if (!r) continue;
      const Quad2 sq = mul(q, scale(quad_inverse(*r), Rational(1, 2)));
      out = join(*r, sq);
      break;
    }
  }
  if (!out) return std::nullopt;
  if (out->sign() < 0) out = -*out;
  if (*out * *out != *this) return std::nullopt;
  return out;
}

DyadicInterval Biquadratic::enclose(long bits) const {
  const long prec = bits + 64;
  const DyadicInterval s2 = root_of(2, prec);
  const DyadicInterval s3 = root_of(3, prec);
  const DyadicInterval s6 = root_of(6, prec);
  return DyadicInterval(c_[0], prec) + s2 * c_[1] + s3 * c_[2] + s6 * c_[3];
}

double Biquadratic::to_double() const {
  static const double roots[] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(6.0)};
  double out = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c_[i]) != 0) out += c_[i].get_d() * roots[i];
  }
  return out;
}

std::string Biquadratic::to_string() const {
  static const char* roots[] = {"", "√2", "√3", "√6"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& x = c_[i];
    if (sgn(x) == 0) continue;
    const bool negative = sgn(x) < 0;
    const Rational mag = negative ? Rational(-x) : x;
    std::string term;
    if (i == 0 || mag != 1) term = mag.get_str();
    term += roots[i];
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Biquadratic& x) { return os << x.to_string(); }

Vec3 make_vec(const Biquadratic& x, const Biquadratic& y, const Biquadratic& z) {
  Vec3 v;
  v << x, y, z;
  return v;
}

bool vec_less(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) {
    const int s = (a(i) - b(i)).sign();
    if (s != 0) return s < 0;
  }
  return false;
}

Eigen::Vector3d to_double(const Vec3& v) { return {v(0).to_double(), v(1).to_double(), v(2).to_double()}; }

std::string to_string(const Vec3& v) {
  return "(" + v(0).to_string() + ", " + v(1).to_string() + ", " + v(2).to_string() + ")";
}

}  // namespace compack

namespace compack {

std::optional<Biquadratic> to_biquadratic(const AlgebraicReal& x) {
  if (x.is_rational()) return Biquadratic(x.rational_value());
  if (x.degree() != 2) return std::nullopt;
  const RationalPoly& p = x.minpoly();
  const Rational a = p[2], b = p[1], c = p[0];
  const Rational disc = b * b - 4 * a * c;
  const std::array<Biquadratic, 4> roots{Biquadratic(1), Biquadratic::sqrt2(), Biquadratic::sqrt3(),
                                          Biquadratic::sqrt6()};
  const std::array<long, 4> radicands{1, 2, 3, 6};
  for (std::size_t m = 1; m < 4; ++m) {
    const auto s = rational_sqrt(Rational(disc / radicands[m]));
    if (!s) continue;
    for (int branch : {1, -1}) {
      const Biquadratic candidate = (Biquadratic(-b) + Biquadratic(Rational(branch * *s)) * roots[m]) / Biquadratic(Rational(2 * a));
      if (Biquadratic(x.lower()) < candidate && candidate < Biquadratic(x.upper())) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace compack
