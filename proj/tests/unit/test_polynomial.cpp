#include <doctest.h>

#include "compack/exactalg/factor.hpp"
#include "compack/exactalg/polynomial.hpp"
#include "compack/exactalg/resultant.hpp"

using namespace compack;

TEST_CASE("polynomial arithmetic and canonical form") {
  const RationalPoly p = make_poly({-1, 2, 1});
  const RationalPoly q = make_poly({1, 1});
  CHECK((p * q).degree() == 3);
  auto [quo, rem] = divmod(p * q + make_poly({3}), q);
  CHECK(quo == p);
  CHECK(rem == make_poly({3}));
  CHECK(primitive_part(scale(p, Rational(-3, 7))) == p);
  CHECK(to_string(make_poly({1, -6, 0, 4, 1})) == "X^4 + 4X^3 - 6X + 1");
  CHECK(gcd(p * q, q * q) == q);
  CHECK(compose_affine(make_poly({0, 0, 1}), 1, 2) == make_poly({1, 4, 4}));
  CHECK(sign_at(p, Rational(1, 2)) > 0);
  CHECK(sign_at(p, 0) < 0);
}

TEST_CASE("extended gcd identity") {
  const RationalPoly a = make_poly({1, 0, 1}) * make_poly({2, 1});
  const RationalPoly b = make_poly({-1, 0, 0, 1}) * make_poly({2, 1});
  const auto e = extended_gcd(a, b);
  CHECK(e.g == make_poly({2, 1}));
  CHECK(e.s * a + e.t * b == e.g);
}

TEST_CASE("squarefree decomposition") {
  const RationalPoly f = make_poly({-1, 1});
  const RationalPoly g = make_poly({1, 0, 1});
  const auto d = squarefree_decomposition(f * g * g * g);
  REQUIRE(d.size() == 2);
  CHECK(d[0].poly == f);
  CHECK(d[0].multiplicity == 1);
  CHECK(d[1].poly == g);
  CHECK(d[1].multiplicity == 3);
  CHECK(squarefree_part(f * f * g) == f * g);
}

TEST_CASE("factorization over Q") {
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
  CHECK(is_irreducible(make_poly({1, 0, -10, 0, 1})));
  CHECK(is_irreducible(make_poly({1, -6, 1})));
  CHECK_FALSE(is_irreducible(make_poly({-1, 0, 1})));

  const RationalPoly a = make_poly({1, -6, 1, 4, 1});
  const RationalPoly b = make_poly({2, 9, -20, 4});
  const RationalPoly c = make_poly({-1, 2, 1});
  const RationalPoly d = make_poly({0, 1});
  const auto fs = factor_squarefree(scale(a * b * c * d, Rational(-5, 3)));
  REQUIRE(fs.size() == 4);
  CHECK(fs[0] == d);
  CHECK(fs[1] == c);
  CHECK(fs[2] == b);
  CHECK(fs[3] == a);

  const auto full = factor_rational(a * a * c);
  REQUIRE(full.size() == 2);
  CHECK(full[0].poly == c);
  CHECK(full[1].multiplicity == 2);
}

TEST_CASE("product of many linear and quadratic factors") {
  RationalPoly p = make_poly({1});
  std::vector<RationalPoly> expected;
  for (int k = 1; k <= 5; ++k) {
    expected.push_back(make_poly({-k, 2 * k + 1}));
    expected.push_back(make_poly({k + 1, 0, 0, 1}));
  }
  for (const auto& f : expected) p *= f;
  const auto fs = factor_squarefree(p);
  CHECK(fs.size() == expected.size());
  RationalPoly prod = make_poly({1});
  for (const auto& f : fs) {
    CHECK(is_irreducible(f));
    prod *= f;
  }
  CHECK(primitive_part(prod) == primitive_part(p));
}

TEST_CASE("resultant examples") {
  // p = X^2 - r, q = X - 1 as polynomials in X over Q[r].
  const BivariatePoly p{make_poly({0, -1}), RationalPoly{}, make_poly({1})};
  const BivariatePoly q{make_poly({-1}), make_poly({1})};
  CHECK(eliminate_outer(p, q) == make_poly({-1, 1}));
  const BivariatePoly s{make_poly({-2}), RationalPoly{}, make_poly({1})};
  CHECK(resultant(s, s).is_zero());
  CHECK_THROWS_AS(resultant(BivariatePoly{}, q), DegenerateInput);
}
