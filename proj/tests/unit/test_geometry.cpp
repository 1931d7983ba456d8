#include <doctest.h>

#include <cmath>
#include <random>

#include "compack/exactalg/algebraic_real.hpp"
#include "compack/geometry/biquadratic.hpp"

using namespace compack;

namespace {

Biquadratic random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto q = [&] { return make_rational(num(rng), den(rng)); };
  return {q(), q(), q(), q()};
}

double float_value(const Biquadratic& x) {
  return x[0].get_d() + x[1].get_d() * std::sqrt(2.0) + x[2].get_d() * std::sqrt(3.0) + x[3].get_d() * std::sqrt(6.0);
}

}  // namespace

TEST_CASE("biquadratic products of the basis") {
  const auto s2 = Biquadratic::sqrt2(), s3 = Biquadratic::sqrt3(), s6 = Biquadratic::sqrt6();
  CHECK(s2 * s2 == Biquadratic(2));
  CHECK(s3 * s3 == Biquadratic(3));
  CHECK(s2 * s3 == s6);
  CHECK(s6 * s6 == Biquadratic(6));
  CHECK(s6 * s2 == Biquadratic(2) * s3);
  CHECK((Biquadratic(1) + s2).to_string() == "1 + √2");
  CHECK(Biquadratic(Rational(1, 2), 3, 0, -1).to_string() == "1/2 + 3√2 - √6");
}

TEST_CASE("biquadratic square roots") {
  const auto s2 = Biquadratic::sqrt2(), s3 = Biquadratic::sqrt3(), s6 = Biquadratic::sqrt6();
  CHECK(*Biquadratic(6).sqrt() == s6);
  CHECK(*(Biquadratic(3) - Biquadratic(2) * s2).sqrt() == s2 - Biquadratic(1));
  CHECK(*Biquadratic(Rational(8, 3)).sqrt() == Biquadratic(0, 0, 0, Rational(2, 3)));
  CHECK(*(Biquadratic(5) + Biquadratic(2) * s6).sqrt() == s2 + s3);
  CHECK(*Biquadratic(Rational(4, 3)).sqrt() == Biquadratic(0, 0, Rational(2, 3), 0));
  CHECK_FALSE(s2.sqrt().has_value());
  CHECK_FALSE(Biquadratic(-1).sqrt().has_value());
  CHECK_FALSE(Biquadratic(5).sqrt().has_value());
  CHECK(Biquadratic(0).sqrt()->is_zero());
}

TEST_CASE("biquadratic field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Biquadratic(1));
    const auto sq = (a * a).sqrt();
    REQUIRE(sq.has_value());
    CHECK(*sq == (a.sign() < 0 ? -a : a));
  }
}

TEST_CASE("biquadratic sign agrees with floating point away from zero") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_element(rng);
    const double f = float_value(a);
    if (std::abs(f) < 1e-9) continue;
    CHECK(a.sign() == (f > 0 ? 1 : -1));
    CHECK(a.to_double() == doctest::Approx(f).epsilon(1e-12));
  }
  // 5 - 2√6 = (√3 - √2)^2 is tiny and positive; 2√6 - 5 the opposite.
  CHECK(Biquadratic(5, 0, 0, -2).sign() == 1);
  CHECK(Biquadratic(-5, 0, 0, 2).sign() == -1);
  CHECK(Biquadratic(0).sign() == 0);
  CHECK_THROWS_AS(Biquadratic(0).inverse(), DegenerateInput);
}

TEST_CASE("biquadratic enclosures are tight and sound") {
  const Biquadratic x(1, -1, 1, 0);
  const auto box = x.enclose(100);
  CHECK(box.width() <= pow2(-100));
  CHECK(box.to_string(15).find("1.3178") != std::string::npos);
}

TEST_CASE("algebraic reals of degree two map into the field") {
  const auto r = AlgebraicReal::near(make_poly({-1, 2, 1}), Rational(41, 100), Rational(1, 20));
  CHECK(*to_biquadratic(r) == Biquadratic(-1, 1, 0, 0));
  const auto t = AlgebraicReal::near(make_poly({1, -6, 1}), Rational(17, 100), Rational(1, 20));
  CHECK(*to_biquadratic(t) == Biquadratic(3, -2, 0, 0));
  const auto u = AlgebraicReal::near(make_poly({-2, 0, 3}), Rational(8, 10), Rational(1, 20));
  CHECK(*to_biquadratic(u) == Biquadratic(0, 0, 0, Rational(1, 3)));
  CHECK(*to_biquadratic(AlgebraicReal(Rational(2, 7))) == Biquadratic(Rational(2, 7)));
  CHECK_FALSE(to_biquadratic(AlgebraicReal::near(make_poly({-5, 0, 1}), Rational(22, 10), Rational(1, 10))).has_value());
  CHECK_FALSE(to_biquadratic(AlgebraicReal::near(make_poly({-2, 0, 0, 1}), Rational(126, 100), Rational(1, 10))).has_value());
}

TEST_CASE("vectors over the field") {
  const Vec3 a = make_vec(Biquadratic::sqrt2(), Biquadratic::sqrt2(), 0);
  const Vec3 b = make_vec(0, Biquadratic::sqrt2(), Biquadratic::sqrt2());
  CHECK(squared_norm(a) == Biquadratic(4));
  CHECK(squared_distance(a, b) == Biquadratic(4));
  CHECK(dot(a, b) == Biquadratic(2));
  const Vec3 n = cross(a, b);
  CHECK(dot(n, a).is_zero());
  CHECK(dot(n, b).is_zero());
  CHECK(triple_product(a, b, n) == squared_norm(n));
  CHECK(vec_less(b, a));
  CHECK_FALSE(vec_less(a, a));
  const Vec3 sum = a + b;  // Eigen expression on the exact scalar
  CHECK(sum(1) == Biquadratic(0, 2, 0, 0));
  CHECK(to_double(a).norm() == doctest::Approx(2.0));
}
