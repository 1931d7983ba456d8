#include "compack/exactalg/polynomial.hpp"

#include <sstream>

namespace compack {

RationalPoly make_poly(std::initializer_list<long> coefficients_low_to_high) {
  std::vector<Rational> c;
  c.reserve(coefficients_low_to_high.size());
  for (long v : coefficients_low_to_high) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

RationalPoly derivative(const RationalPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rational(static_cast<long>(i));
  return RationalPoly(std::move(out));
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(a.size() - b.size() + 1);
  const Rational inv_lead = 1 / b.leading();
  const std::size_t db = b.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + db] * inv_lead;
    quo[k] = q;
    if (is_zero(q)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
  }
  rem.resize(db);
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly operator/(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).first; }
RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

bool divides(const RationalPoly& b, const RationalPoly& a) { return divmod(a, b).second.is_zero(); }

RationalPoly monic(const RationalPoly& p) {
  if (p.is_zero()) return p;
  return scale(p, Rational(1 / p.leading()));
}

namespace {

Integer content_of(const std::vector<Integer>& c) {
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(std::vector<Integer>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.empty()) return;
  Integer g = content_of(c);
  if (sgn(c.back()) < 0) g = -g;
  if (g != 1) {
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// Pseudo-remainder of a by b over Z, reduced to its primitive part.
std::vector<Integer> primitive_prem(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    a.pop_back();
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  }
  make_primitive(a);
  return a;
}

}  // namespace

std::vector<Integer> integer_coefficients(const RationalPoly& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& q : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& q : p.coefficients()) {
    Integer v = q.get_num() * (l / q.get_den());
    c.push_back(v);
  }
  make_primitive(c);
  return c;
}

RationalPoly from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> out;
  out.reserve(c.size());
  for (const auto& x : c) out.emplace_back(x);
  return RationalPoly(std::move(out));
}

RationalPoly primitive_part(const RationalPoly& p) { return from_integers(integer_coefficients(p)); }

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  std::vector<Integer> x = integer_coefficients(a);
  std::vector<Integer> y = integer_coefficients(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Integer> r = primitive_prem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(from_integers(x));
}

ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0 = RationalPoly::constant(Rational(1)), s1;
  RationalPoly t0, t1 = RationalPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPoly s2 = s0 - q * s1;
    RationalPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / r0.leading();
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

RationalPoly compose_affine(const RationalPoly& p, const Rational& a, const Rational& b) {
  // Horner in the ring Q[x] with x -> a + b x.
  const RationalPoly lin({a, b});
  RationalPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * lin + RationalPoly::constant(p[i]);
  return acc;
}

RationalPoly reversed(const RationalPoly& p) {
  std::vector<Rational> c(p.coefficients().rbegin(), p.coefficients().rend());
  return RationalPoly(std::move(c));
}

int sign_at(const RationalPoly& p, const Rational& x) { return sgn(p.evaluate(x)); }

std::string to_string(const RationalPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p[k];
    if (is_zero(c)) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0 || !unit) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << to_string(p); }

}  // namespace compack
