#include "properties.hpp"

#include <mpfr.h>

#include <random>
#include <vector>

#include "compack/exactalg/interval.hpp"
#include "compack/exactalg/radical.hpp"
#include "compack/exactalg/resultant.hpp"
#include "compack/necklace/dihedral.hpp"

namespace compack::testing {

namespace {

class Fuzz {
 public:
  explicit Fuzz(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
  Rational rational(long span = 1000) { return make_rational(integer(-span, span), integer(1, span)); }
  long precision() {
    static constexpr long kBits[] = {24, 53, 64, 113, 200};
    return kBits[integer(0, 4)];
  }

  // An interval containing q, sometimes a point.
  DyadicInterval around(const Rational& q, long bits) {
    if (chance(0.3)) return DyadicInterval(q, bits);
    return DyadicInterval(q - make_rational(1, integer(1, 1 << 20)), q + make_rational(1, integer(1, 1 << 20)), bits);
  }

 private:
  std::mt19937_64 gen_;
};

void fail(PropertyOutcome& out, const std::string& what) {
  if (out.failures++ == 0) out.first_failure = what;
}

Rational mpfr_reference(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Rational& x) {
  mpfr_t a;
  mpfr_init2(a, 400);
  mpfr_set_q(a, x.get_mpq_t(), MPFR_RNDN);
  f(a, a, MPFR_RNDN);
  Rational out;
  mpfr_get_q(out.get_mpq_t(), a);
  mpfr_clear(a);
  return out;
}

}  // namespace

PropertyOutcome interval_containment(long operations, std::uint64_t seed) {
  PropertyOutcome out{"interval containment", 0, 0, {}};
  Fuzz fz(seed);
  for (long n = 0; n < operations; ++n) {
    const long bits = fz.precision();
    const Rational a = fz.rational(), b = fz.rational();
    const DyadicInterval ia = fz.around(a, bits), ib = fz.around(b, bits);
    const int op = static_cast<int>(fz.integer(0, 7));
    ++out.instances;
    bool ok = true;
    std::string what;
    switch (op) {
      case 0:
        ok = (ia + ib).contains(Rational(a + b));
        what = "sum";
        break;
      case 1:
        ok = (ia - ib).contains(Rational(a - b));
        what = "difference";
        break;
      case 2:
        ok = (ia * ib).contains(Rational(a * b));
        what = "product";
        break;
      case 3:
        if (ib.contains_zero()) {
          ok = true;
        } else {
          ok = (ia / ib).contains(Rational(a / b));
        }
        what = "quotient";
        break;
      case 4:
        ok = (ia * b).contains(Rational(a * b)) && (ia + b).contains(Rational(a + b)) && (-ia).contains(Rational(-a));
        what = "scalar";
        break;
      case 5: {
        const Rational x = abs(a);
        const DyadicInterval ix = fz.around(x, bits);
        ok = sqrt(ix).contains(mpfr_reference(mpfr_sqrt, x));
        what = "sqrt";
        break;
      }
      case 6: {
        const Rational x = make_rational(fz.integer(-999, 999), 1000);
        ok = acos(fz.around(x, bits)).contains(mpfr_reference(mpfr_acos, x));
        what = "acos";
        break;
      }
      default: {
        // A short chain: (a + b) * a - b / (1 + b^2).
        const Rational exact = (a + b) * a - b / (1 + b * b);
        const DyadicInterval one(Rational(1), bits);
        ok = ((ia + ib) * ia - ib / (one + ib * ib)).contains(exact);
        what = "chain";
        break;
      }
    }
    if (!ok) fail(out, what + " of " + a.get_str() + ", " + b.get_str() + " at " + std::to_string(bits) + " bits");
  }
  const DyadicInterval pi = DyadicInterval::pi(64);
  ++out.instances;
  if (!pi.contains(mpfr_reference([](mpfr_ptr r, mpfr_srcptr, mpfr_rnd_t m) { return mpfr_const_pi(r, m); }, Rational(0)))) {
    fail(out, "pi");
  }
  return out;
}

PropertyOutcome resultant_soundness(long instances, std::uint64_t seed) {
  PropertyOutcome out{"resultant soundness", 0, 0, {}};
  Fuzz fz(seed);
  for (long n = 0; n < instances; ++n) {
    const long m = fz.integer(1, 4), k = fz.integer(1, 4);
    const Rational lf = make_rational(fz.integer(1, 9) * (fz.chance(0.5) ? 1 : -1), fz.integer(1, 5));
    const Rational lg = make_rational(fz.integer(1, 9), fz.integer(1, 5));
    std::vector<Rational> a, b;
    for (long i = 0; i < m; ++i) a.push_back(make_rational(fz.integer(-20, 20), fz.integer(1, 4)));
    for (long j = 0; j < k; ++j) b.push_back(make_rational(fz.integer(-20, 20), fz.integer(1, 4)));
    if (fz.chance(0.33)) b[static_cast<std::size_t>(fz.integer(0, k - 1))] = a[static_cast<std::size_t>(fz.integer(0, m - 1))];
    RationalPoly f = RationalPoly::constant(lf), g = RationalPoly::constant(lg);
    for (const auto& x : a) f = f * RationalPoly{-x, Rational(1)};
    for (const auto& y : b) g = g * RationalPoly{-y, Rational(1)};
    Rational expected = 1;
    for (long i = 0; i < k; ++i) expected *= lf;
    for (long j = 0; j < m; ++j) expected *= lg;
    bool shared = false;
    for (const auto& x : a) {
      for (const auto& y : b) {
        expected *= x - y;
        shared = shared || x == y;
      }
    }
    ++out.instances;
    const Rational got = resultant(f, g);
    if (got != expected || (got == 0) != shared) {
      fail(out, "Res(" + to_string(f) + ", " + to_string(g) + ") = " + got.get_str() + ", expected " + expected.get_str());
    }
  }
  return out;
}

PropertyOutcome radical_tower_laws(long instances, std::uint64_t seed) {
  PropertyOutcome out{"radical tower laws", 0, 0, {}};
  Fuzz fz(seed);
  using E = RadicalElement<Rational>;
  for (long n = 0; n < instances; ++n) {
    std::array<Rational, kTowerGenerators> squares;
    for (auto& s : squares) s = make_rational(fz.integer(1, 50), fz.integer(1, 7));
    const auto tower = make_tower<Rational>(squares, {"Z0", "Z1", "Z2", "Z3"});
    auto element = [&] {
      E e(tower, Rational(0));
      for (int mask = 0; mask < kTowerMonomials; ++mask) {
        if (fz.chance(0.6)) e += E::monomial(tower, mask, fz.rational(30));
      }
      return e;
    };
    const E a = element(), b = element(), c = element();
    ++out.instances;
    std::string broken;
    if ((a * b) * c != a * (b * c)) broken += " associativity";
    if (a * b != b * a) broken += " commutativity";
    if ((a + b) + c != a + (b + c) || a + b != b + a) broken += " addition";
    if (a * (b + c) != a * b + a * c) broken += " distributivity";
    // Each generator squares to its radicand.
    const int i = static_cast<int>(fz.integer(0, kTowerGenerators - 1));
    if (E::generator(tower, i) * E::generator(tower, i) != E(tower, squares[static_cast<std::size_t>(i)])) broken += " relation";
    if (!broken.empty()) fail(out, "instance " + std::to_string(n) + ":" + broken);
  }
  return out;
}

PropertyOutcome reciprocal_identity() {
  PropertyOutcome out{"reciprocal cosine identity", 3, 0, {}};
  for (PairType p : reciprocal_identity_failures()) fail(out, "pair type " + std::to_string(static_cast<int>(p)));
  return out;
}

}  // namespace compack::testing
