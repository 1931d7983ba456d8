#include "compack/exactalg/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "compack/errors.hpp"

namespace compack {

namespace {

// Upper bound on precision so that bits never overflow mpfr_prec_t.
long clamp_precision(long bits) { return std::clamp<long>(bits, MPFR_PREC_MIN + 1, 1L << 20); }

Rational mpfr_to_rational(const mpfr_t x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

}  // namespace

DyadicInterval::DyadicInterval(long precision_bits) : prec_(clamp_precision(precision_bits)) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

DyadicInterval::DyadicInterval(const Rational& value, long precision_bits)
    : DyadicInterval(value, value, precision_bits) {}

DyadicInterval::DyadicInterval(const Rational& lo, const Rational& hi, long precision_bits)
    : prec_(clamp_precision(precision_bits)) {
  if (lo > hi) throw DegenerateInput("DyadicInterval: lower endpoint exceeds upper endpoint");
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

DyadicInterval::DyadicInterval(const DyadicInterval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

DyadicInterval::DyadicInterval(DyadicInterval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

DyadicInterval& DyadicInterval::operator=(const DyadicInterval& other) {
  if (this == &other) return *this;
  prec_ = other.prec_;
  mpfr_set_prec(lo_, prec_);
  mpfr_set_prec(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

DyadicInterval& DyadicInterval::operator=(DyadicInterval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

DyadicInterval::~DyadicInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

DyadicInterval DyadicInterval::pi(long precision_bits) {
  DyadicInterval out(precision_bits);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Rational DyadicInterval::lower() const { return mpfr_to_rational(lo_); }
Rational DyadicInterval::upper() const { return mpfr_to_rational(hi_); }
double DyadicInterval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double DyadicInterval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double DyadicInterval::mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

bool DyadicInterval::contains(const Rational& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool DyadicInterval::contains(const DyadicInterval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool DyadicInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool DyadicInterval::positive() const { return mpfr_sgn(lo_) > 0; }
bool DyadicInterval::negative() const { return mpfr_sgn(hi_) < 0; }
int DyadicInterval::certain_sign() const { return positive() ? 1 : (negative() ? -1 : 0); }
bool DyadicInterval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
bool DyadicInterval::precedes(const DyadicInterval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  DyadicInterval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  DyadicInterval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

DyadicInterval DyadicInterval::operator-() const {
  DyadicInterval out(prec_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  const long prec = std::max(a.prec_, b.prec_);
  DyadicInterval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b) {
  if (b.contains_zero()) throw DegenerateInput("interval division by an interval containing zero");
  const long prec = std::max(a.prec_, b.prec_);
  DyadicInterval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

DyadicInterval operator+(const DyadicInterval& a, const Rational& b) { return a + DyadicInterval(b, a.prec_); }
DyadicInterval operator*(const DyadicInterval& a, const Rational& b) { return a * DyadicInterval(b, a.prec_); }

DyadicInterval sqrt(const DyadicInterval& a) {
  if (mpfr_sgn(a.hi_) < 0) throw DegenerateInput("square root of a negative interval");
  DyadicInterval out(a.prec_);
  if (mpfr_sgn(a.lo_) <= 0) {
    mpfr_set_zero(out.lo_, 1);
  } else {
    mpfr_sqrt(out.lo_, a.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

DyadicInterval acos(const DyadicInterval& a) {
  if (mpfr_cmp_si(a.lo_, 1) > 0 || mpfr_cmp_si(a.hi_, -1) < 0) {
    throw DegenerateInput("arc cosine of an interval outside [-1, 1]");
  }
  DyadicInterval out(a.prec_);
  mpfr_t t;
  mpfr_init2(t, a.prec_);
  // acos is decreasing: the lower bound comes from the upper endpoint.
  if (mpfr_cmp_si(a.hi_, 1) >= 0) {
    mpfr_set_zero(out.lo_, 1);
  } else {
    mpfr_acos(out.lo_, a.hi_, MPFR_RNDD);
  }
  if (mpfr_cmp_si(a.lo_, -1) <= 0) {
    mpfr_const_pi(out.hi_, MPFR_RNDU);
  } else {
    mpfr_acos(out.hi_, a.lo_, MPFR_RNDU);
  }
  mpfr_clear(t);
  return out;
}

DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b) {
  DyadicInterval out(std::max(a.prec_, b.prec_));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

DyadicInterval DyadicInterval::with_precision(long precision_bits) const {
  DyadicInterval out(precision_bits);
  mpfr_set(out.lo_, lo_, MPFR_RNDD);
  mpfr_set(out.hi_, hi_, MPFR_RNDU);
  return out;
}

std::string DyadicInterval::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  std::ostringstream os;
  mpfr_snprintf(buf.data(), buf.size(), "%.*RDg", digits, lo_);
  os << "[" << buf.data() << ", ";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RUg", digits, hi_);
  os << buf.data() << "]";
  return os.str();
}

}  // namespace compack
