#pragma once

#include <array>
#include <vector>

#include "compack/exactalg/algebraic_real.hpp"
#include "compack/exactalg/number_field.hpp"
#include "compack/exactalg/radical.hpp"
#include "compack/exactalg/rational_function.hpp"
#include "compack/necklace/word.hpp"

namespace compack {

/// Cosines and sines of the three dihedral angles of a context, indexed by
/// PairType, as elements of the context's radical tower over F. All sines
/// are nonnegative on the tower's branch (every generator positive).
template <class F>
struct DihedralCosineSet {
  AngleContext context;
  TowerPtr<F> tower;
  std::array<RadicalElement<F>, 3> cos;
  std::array<RadicalElement<F>, 3> sin;
};

using SymbolicDihedralSet = DihedralCosineSet<RationalFunction>;
using DihedralSetAt = DihedralCosineSet<FieldElement>;

/// The dihedral cosines and sines as functions of r.
///
/// Skew: generators X0..X3 with X0^2 = r/((2+r)(2r+1)), X1^2 = 3r^2+6r-1,
/// X2^2 = 2/((2+r)(1+2r)), X3^2 = -r^2+6r+3.
/// Large: Y0..Y3 with squares 3r(2+r), 3r^2+6r-1, 2, 2r.
/// Small: W0..W3 with squares 3(1+2r), -r^2+6r+3, 2, 2r.
SymbolicDihedralSet symbolic_dihedral_set(AngleContext ctx);

/// The same set specialized at a concrete radius ratio, over Q(r).
DihedralSetAt dihedral_set_at(AngleContext ctx, const AlgebraicReal& r);

/// Pair types p for which the small-context cosine of p at r differs from the
/// large-context cosine of the swapped pair (LL and SS exchanged) at 1/r.
/// Squares are compared as rational functions; signs at r = 1/2.
std::vector<PairType> reciprocal_identity_failures();

/// Evaluates a symbolic tower element in the specialized tower.
RadicalElement<FieldElement> specialize(const RadicalElement<RationalFunction>& e, const TowerPtr<FieldElement>& tower,
                                        const FieldElement& r);

/// cos and sin of n_LL * delta_LL + n_LS * delta_LS + n_SS * delta_SS,
/// expanded with the angle-addition formulas.
template <class F>
std::pair<RadicalElement<F>, RadicalElement<F>> cos_sin_of_sum(const DihedralCosineSet<F>& set,
                                                               const std::array<int, 3>& counts) {
  RadicalElement<F> c(set.tower, F(1));
  RadicalElement<F> s(set.tower, F());
  for (std::size_t p = 0; p < 3; ++p) {
    for (int n = 0; n < counts[p]; ++n) {
      RadicalElement<F> c2 = c * set.cos[p] - s * set.sin[p];
      RadicalElement<F> s2 = s * set.cos[p] + c * set.sin[p];
      c = std::move(c2);
      s = std::move(s2);
    }
  }
  return {c, s};
}

}  // namespace compack
