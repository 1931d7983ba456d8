#include "compack/necklace/dihedral.hpp"

namespace compack {

namespace {

using RF = RationalFunction;
using E = RadicalElement<RF>;

RF r_var() { return RF::variable(); }

SymbolicDihedralSet skew_set() {
  const RF r = r_var();
  const RF a = (RF(2) + r) * (RF(2) * r + RF(1));
  const auto t = make_tower<RF>({r / a, RF(3) * r * r + RF(6) * r - RF(1), RF(2) / a, -r * r + RF(6) * r + RF(3)},
                                {"X0", "X1", "X2", "X3"});
  const RF one_plus = RF(1) + r;
  SymbolicDihedralSet set{AngleContext::Skew, t, {}, {}};
  set.cos[LL] = E(t, (r * r + RF(2) * r - RF(1)) / (RF(2) * r * (RF(2) + r)));
  set.sin[LL] = E::monomial(t, 1 << 1, one_plus / (RF(2) * r * (RF(2) + r)));
  set.cos[LS] = E::generator(t, 0);
  set.sin[LS] = E::monomial(t, 1 << 2, one_plus);
  set.cos[SS] = E(t, (RF(1) + RF(2) * r - r * r) / (RF(2) * (RF(2) * r + RF(1))));
  set.sin[SS] = E::monomial(t, 1 << 3, one_plus / (RF(4) * r + RF(2)));
  return set;
}

SymbolicDihedralSet large_set() {
  const RF r = r_var();
  const RF q = RF(3) * r * (RF(2) + r);
  const auto t = make_tower<RF>({q, RF(3) * r * r + RF(6) * r - RF(1), RF(2), RF(2) * r}, {"Y0", "Y1", "Y2", "Y3"});
  SymbolicDihedralSet set{AngleContext::Large, t, {}, {}};
  set.cos[LL] = E(t, RF(Rational(1, 3)));
  set.sin[LL] = E::monomial(t, 1 << 2, RF(Rational(2, 3)));
  set.cos[LS] = E::monomial(t, 1 << 0, RF(1) / q);
  set.sin[LS] = E::monomial(t, (1 << 0) | (1 << 1), RF(1) / q);
  set.cos[SS] = E(t, (RF(2) - r) / (RF(2) + r));
  set.sin[SS] = E::monomial(t, 1 << 3, RF(2) / (RF(2) + r));
  return set;
}

SymbolicDihedralSet small_set() {
  const RF r = r_var();
  const RF q = RF(3) * (RF(1) + RF(2) * r);
  const auto t = make_tower<RF>({q, -r * r + RF(6) * r + RF(3), RF(2), RF(2) * r}, {"W0", "W1", "W2", "W3"});
  SymbolicDihedralSet set{AngleContext::Small, t, {}, {}};
  set.cos[LL] = E(t, (RF(2) * r - RF(1)) / (RF(2) * r + RF(1)));
  set.sin[LL] = E::monomial(t, 1 << 3, RF(2) / (RF(2) * r + RF(1)));
  set.cos[LS] = E::monomial(t, 1 << 0, r / q);
  set.sin[LS] = E::monomial(t, (1 << 0) | (1 << 1), RF(1) / q);
  set.cos[SS] = E(t, RF(Rational(1, 3)));
  set.sin[SS] = E::monomial(t, 1 << 2, RF(Rational(2, 3)));
  return set;
}

}  // namespace

SymbolicDihedralSet symbolic_dihedral_set(AngleContext ctx) {
  switch (ctx) {
    case AngleContext::Skew: return skew_set();
    case AngleContext::Large: return large_set();
    case AngleContext::Small: return small_set();
  }
  return skew_set();
}

RadicalElement<FieldElement> specialize(const RadicalElement<RationalFunction>& e, const TowerPtr<FieldElement>& tower,
                                        const FieldElement& r) {
  return e.map_coefficients<FieldElement>(tower, [&](const RF& f) { return f.evaluate(r); });
}

DihedralSetAt dihedral_set_at(AngleContext ctx, const AlgebraicReal& r) {
  const SymbolicDihedralSet sym = symbolic_dihedral_set(ctx);
  const FieldElement x = r.is_rational() ? FieldElement(r.rational_value()) : FieldElement::generator(make_field(r));
  std::array<FieldElement, kTowerGenerators> squares;
  for (int i = 0; i < kTowerGenerators; ++i) squares[static_cast<std::size_t>(i)] = sym.tower->square(i).evaluate(x);
  const auto tower = make_tower<FieldElement>(squares, sym.tower->names(), sym.tower->branches());
  DihedralSetAt out{ctx, tower, {}, {}};
  for (std::size_t p = 0; p < 3; ++p) {
    out.cos[p] = specialize(sym.cos[p], tower, x);
    out.sin[p] = specialize(sym.sin[p], tower, x);
  }
  return out;
}

std::vector<PairType> reciprocal_identity_failures() {
  const auto small = symbolic_dihedral_set(AngleContext::Small);
  const auto large = symbolic_dihedral_set(AngleContext::Large);
  const auto small_at = dihedral_set_at(AngleContext::Small, AlgebraicReal(Rational(1, 2)));
  const auto large_at = dihedral_set_at(AngleContext::Large, AlgebraicReal(Rational(2)));
  std::vector<PairType> failures;
  for (PairType p : {LL, LS, SS}) {
    const PairType q = p == LL ? SS : p == SS ? LL : LS;
    const auto a = radical_mul(small.cos[p], small.cos[p]);
    const auto b = radical_mul(large.cos[q], large.cos[q]);
    const bool squares = a.is_constant() && b.is_constant() &&
                         a.coefficient(0) == b.coefficient(0).reciprocal_substitution();
    const bool signs = exact_sign(small_at.cos[p]) == exact_sign(large_at.cos[q]);
    if (!squares || !signs) failures.push_back(p);
  }
  return failures;
}

}  // namespace compack
