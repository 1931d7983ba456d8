#pragma once

#include <vector>

#include "compack/exactalg/polynomial.hpp"

namespace compack {

struct PolyFactor {
  RationalPoly poly;  // primitive, positive leading coefficient
  int multiplicity = 1;
};

/// Yun's algorithm: p = c * prod f_i^i with the f_i squarefree and pairwise
/// coprime. Factors are returned in primitive form, in order of multiplicity.
std::vector<PolyFactor> squarefree_decomposition(const RationalPoly& p);

/// Product of the distinct irreducible factors of p, primitive.
RationalPoly squarefree_part(const RationalPoly& p);

/// Irreducible factors over Q of a squarefree polynomial (Zassenhaus:
/// Cantor-Zassenhaus modulo a small prime, Hensel lifting, and exhaustive
/// recombination). Output is primitive and sorted by (degree, coefficients).
std::vector<RationalPoly> factor_squarefree(const RationalPoly& p);

/// Complete factorization over Q into primitive irreducible factors with
/// multiplicities; constant content is dropped.
std::vector<PolyFactor> factor_rational(const RationalPoly& p);

bool is_irreducible(const RationalPoly& p);

/// Deterministic ordering used for factor lists: degree, then integer coefficients.
bool poly_less(const RationalPoly& a, const RationalPoly& b);

}  // namespace compack
