#include "compack/exactalg/number_field.hpp"

#include "compack/errors.hpp"

namespace compack {

NumberField::NumberField(AlgebraicReal generator) : generator_(std::move(generator)), best_(generator_) {}

DyadicInterval NumberField::generator_enclosure(long bits) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const Rational target = pow2(-bits);
  if (best_.width() > target) best_ = best_.refined(target);
  return best_.isolator(bits + 64);
}

bool NumberField::same_as(const NumberField& o) const {
  return this == &o || (generator_.minpoly() == o.generator_.minpoly() && generator_ == o.generator_);
}

FieldPtr make_field(const AlgebraicReal& generator) { return std::make_shared<const NumberField>(generator); }

FieldElement::FieldElement(const Rational& q) : value_(RationalPoly::constant(q)) {}

FieldElement::FieldElement(FieldPtr field, const RationalPoly& value) : field_(std::move(field)) {
  value_ = field_ ? value % field_->modulus() : value;
  if (!field_ && value_.degree() > 0) throw DegenerateInput("FieldElement: non-constant value without a field");
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (!field) throw DegenerateInput("FieldElement::generator needs a field");
  return {field, make_poly({0, 1})};
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw DegenerateInput("FieldElement is not rational");
  return value_.coefficient(0);
}

FieldPtr FieldElement::common(const FieldElement& a, const FieldElement& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (!a.field_->same_as(*b.field_)) throw MismatchedBase("arithmetic between different number fields");
  return a.field_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {FieldElement::common(a, b), a.value_ + b.value_}; }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {FieldElement::common(a, b), a.value_ - b.value_}; }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {FieldElement::common(a, b), a.value_ * b.value_}; }

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DegenerateInput("division by zero in a number field");
  if (is_rational()) return {field_, RationalPoly::constant(1 / value_[0])};
  const ExtendedGcd e = extended_gcd(value_, field_->modulus());
  // The modulus is irreducible, so gcd = 1 and s * value = 1.
  return {field_, e.s};
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(value_[0]);
  for (long bits = 32; bits <= (1L << 16); bits *= 2) {
    const int s = evaluate(value_, field_->generator_enclosure(bits)).certain_sign();
    if (s != 0) return s;
  }
  throw PrecisionExhausted("number field sign", 1L << 16);
}

DyadicInterval FieldElement::enclose(long bits) const {
  if (is_rational()) return DyadicInterval(value_.coefficient(0), bits + 64);
  const Rational target = pow2(-bits);
  for (long b = bits + 8;; b *= 2) {
    DyadicInterval out = evaluate(value_, field_->generator_enclosure(b).with_precision(b + 64));
    if (out.width() <= target) return out;
    if (b > (1L << 18)) throw PrecisionExhausted("number field enclosure", b);
  }
}

std::string FieldElement::to_string(const std::string& var) const {
  return compack::to_string(value_, var);
}

}  // namespace compack
