#include "compack/exactalg/algebraic_real.hpp"

#include <algorithm>
#include <sstream>

#include "compack/errors.hpp"
#include "compack/exactalg/factor.hpp"

namespace compack {

namespace {

constexpr int kMaxBisections = 1 << 16;

int sign_of_rational(const Rational& q) { return sgn(q); }

}  // namespace

int sign_variations(const RationalPoly& p) {
  int count = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    const int s = sign_of_rational(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int descartes_bound(const RationalPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DegenerateInput("descartes_bound of the zero polynomial");
  if (!(a < b)) throw DegenerateInput("descartes_bound: empty interval");
  // Roots of p in (a, b) correspond to positive roots of (1+x)^n p((a + b x) / (1 + x)).
  const RationalPoly unit = compose_affine(p, a, b - a);
  return sign_variations(compose_affine(reversed(unit), 1, 1));
}

DyadicInterval evaluate(const RationalPoly& p, const DyadicInterval& x) {
  const long prec = x.precision();
  if (p.is_zero()) return DyadicInterval(Rational(0), prec);
  DyadicInterval acc(p.leading(), prec);
  for (std::size_t i = p.size() - 1; i-- > 0;) acc = acc * x + p[i];
  return acc;
}

AlgebraicReal::AlgebraicReal(const Rational& value)
    : minpoly_(primitive_part(RationalPoly{-value, Rational(1)})), lo_(value), hi_(value) {}

AlgebraicReal::AlgebraicReal(RationalPoly minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!is_rational()) sign_lo_ = sign_at(minpoly_, lo_);
}

AlgebraicReal AlgebraicReal::from_isolator(const RationalPoly& minpoly, const Rational& lo, const Rational& hi) {
  if (!(lo <= hi)) throw DegenerateInput("AlgebraicReal: isolator endpoints out of order");
  if (!is_irreducible(minpoly)) throw DegenerateInput("AlgebraicReal: minimal polynomial is not irreducible");
  const RationalPoly p = primitive_part(minpoly);
  if (p.degree() == 1) {
    const Rational root = -p[0] / p[1];
    if (root < lo || root > hi) throw DegenerateInput("AlgebraicReal: rational root outside isolator");
    return AlgebraicReal(root);
  }
  if (lo == hi || descartes_bound(p, lo, hi) != 1) {
    throw DegenerateInput("AlgebraicReal: isolator does not contain exactly one root");
  }
  return AlgebraicReal(p, lo, hi);
}

AlgebraicReal AlgebraicReal::near(const RationalPoly& minpoly, const Rational& approx, const Rational& radius) {
  return from_isolator(minpoly, approx - radius, approx + radius);
}

Rational AlgebraicReal::rational_value() const {
  if (!is_rational()) throw DegenerateInput("AlgebraicReal::rational_value on an irrational number");
  return lo_;
}

void AlgebraicReal::bisect() {
  Rational mid = (lo_ + hi_) / 2;
  if (sign_at(minpoly_, mid) == sign_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
  if (sgn(width) <= 0) throw DegenerateInput("refine: width must be positive");
  AlgebraicReal out = *this;
  if (out.is_rational()) return out;
  int steps = 0;
  while (out.width() > width) {
    out.bisect();
    if (++steps > kMaxBisections) throw PrecisionExhausted("refine", kMaxBisections);
  }
  return out;
}

DyadicInterval AlgebraicReal::isolator(long precision_bits) const {
  return DyadicInterval(lo_, hi_, precision_bits);
}

DyadicInterval AlgebraicReal::enclose(long bits) const {
  const AlgebraicReal r = refined(pow2(-bits));
  return DyadicInterval(r.lo_, r.hi_, bits + 64);
}

double AlgebraicReal::approx() const { return enclose(60).mid_double(); }

int AlgebraicReal::sign_of(const RationalPoly& q) const {
  const RationalPoly red = q % minpoly_;
  if (red.is_zero()) return 0;
  if (is_rational()) return sign_at(red, lo_);
  AlgebraicReal cur = *this;
  for (long bits = 32;; bits *= 2) {
    cur = cur.refined(pow2(-bits));
    const int s = evaluate(red, cur.isolator(2 * bits + 64)).certain_sign();
    if (s != 0) return s;
    if (bits > kMaxBisections) throw PrecisionExhausted("algebraic sign", bits);
  }
}

int AlgebraicReal::compare(const Rational& q) const {
  if (is_rational()) return sgn(lo_ - q);
  if (q <= lo_) return 1;
  if (q >= hi_) return -1;
  return sign_at(minpoly_, q) == sign_lo_ ? 1 : -1;
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
  if (o.is_rational()) return compare(o.lo_);
  if (is_rational()) return -o.compare(lo_);
  AlgebraicReal a = *this;
  AlgebraicReal b = o;
  const bool same_poly = a.minpoly_ == b.minpoly_;
  for (int steps = 0; steps < kMaxBisections; ++steps) {
    if (a.hi_ <= b.lo_) return -1;
    if (b.hi_ <= a.lo_) return 1;
    if (same_poly) {
      const Rational l = std::max(a.lo_, b.lo_);
      const Rational h = std::min(a.hi_, b.hi_);
      if (sign_at(a.minpoly_, l) != sign_at(a.minpoly_, h)) return 0;
    }
    a.bisect();
    b.bisect();
  }
  throw PrecisionExhausted("algebraic comparison", kMaxBisections);
}

std::string AlgebraicReal::to_string(int digits) const {
  std::ostringstream os;
  if (is_rational()) {
    os << lo_.get_str();
  } else {
    os << "root of " << compack::to_string(minpoly_) << " in " << enclose(4 * digits).to_string(digits);
  }
  return os.str();
}

std::vector<AlgebraicReal> isolate_irreducible_roots(const RationalPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw DegenerateInput("isolate_real_roots: empty domain");
  std::vector<AlgebraicReal> out;
  const RationalPoly f = primitive_part(p);
  if (f.degree() < 1) return out;
  if (f.degree() == 1) {
    const Rational root = -f[0] / f[1];
    if (a < root && root < b) out.emplace_back(root);
    return out;
  }
  std::vector<std::pair<Rational, Rational>> work{{a, b}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int v = descartes_bound(f, lo, hi);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back(AlgebraicReal::from_isolator(f, lo, hi));
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& x, const AlgebraicReal& y) { return x.lower() < y.lower(); });
  return out;
}

std::vector<AlgebraicReal> isolate_real_roots(const RationalPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DegenerateInput("isolate_real_roots of the zero polynomial");
  if (!(a < b)) throw DegenerateInput("isolate_real_roots: empty domain");
  std::vector<AlgebraicReal> out;
  for (const auto& f : factor_rational(p)) {
    for (auto& root : isolate_irreducible_roots(f.poly, a, b)) out.push_back(std::move(root));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace compack
