#include "compack/exactalg/rational_function.hpp"

#include "compack/errors.hpp"

namespace compack {

namespace {

RationalPoly evaluate_poly(const RationalPoly& p, const RationalPoly& x, const RationalPoly& modulus) {
  RationalPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = (acc * x + RationalPoly::constant(p[i])) % modulus;
  return acc;
}

}  // namespace

RationalFunction::RationalFunction(const RationalPoly& num, const RationalPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DegenerateInput("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = make_poly({1});
    return;
  }
  if (den_.degree() > 0) {
    const RationalPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = scale(num_, 1 / lead);
    den_ = scale(den_, 1 / lead);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DegenerateInput("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::reciprocal_substitution() const {
  if (is_zero()) return {};
  // num(1/r) / den(1/r) = r^(deg den - deg num) rev(num) / rev(den).
  const int shift = den_.degree() - num_.degree();
  RationalPoly n = reversed(num_);
  RationalPoly d = reversed(den_);
  if (shift > 0) n = n.shifted(static_cast<std::size_t>(shift));
  if (shift < 0) d = d.shifted(static_cast<std::size_t>(-shift));
  return RationalFunction(n, d);
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (sgn(d) == 0) throw DegenerateInput("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

FieldElement RationalFunction::evaluate(const FieldElement& x) const {
  if (!x.field()) return FieldElement(evaluate(x.rational_value()));
  const RationalPoly& m = x.field()->modulus();
  const FieldElement n(x.field(), evaluate_poly(num_, x.poly(), m));
  const FieldElement d(x.field(), evaluate_poly(den_, x.poly(), m));
  if (d.is_zero()) throw DegenerateInput("rational function evaluated at a pole");
  return n / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0) return compack::to_string(num_, var);
  return "(" + compack::to_string(num_, var) + ")/(" + compack::to_string(den_, var) + ")";
}

}  // namespace compack
