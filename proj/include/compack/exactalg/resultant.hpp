#pragma once

#include <cstdint>
#include <vector>

#include "compack/errors.hpp"
#include "compack/exactalg/polynomial.hpp"

namespace compack {

/// Determinant over a commutative ring without divisions: Laplace expansion
/// memoized over column subsets, O(n 2^n) ring products. Meant for the small
/// Sylvester matrices that arise here (n <= 16).
template <class R>
R division_free_determinant(const std::vector<std::vector<R>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DegenerateInput("determinant of an empty matrix");
  if (n > 20) throw DegenerateInput("division_free_determinant: matrix too large");
  const std::uint32_t full = (1u << n) - 1;
  // minors[mask]: determinant of rows 0..popcount(mask)-1 restricted to columns in mask.
  std::vector<R> minors(std::size_t{1} << n);
  std::vector<bool> known(std::size_t{1} << n, false);
  for (std::uint32_t j = 0; j < n; ++j) {
    minors[1u << j] = m[0][j];
    known[1u << j] = !detail::coefficient_is_zero(m[0][j]);
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 2) continue;
    const auto& row = m[static_cast<std::size_t>(k - 1)];
    R acc{};
    bool any = false;
    int pos = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const std::uint32_t sub = mask & ~(1u << j);
      if (!detail::coefficient_is_zero(row[j]) && known[sub]) {
        R term = row[j] * minors[sub];
        if (((k - 1 + pos) & 1) != 0) term = -term;
        acc = any ? R(acc + term) : term;
        any = true;
      }
      ++pos;
    }
    if (any) {
      minors[mask] = acc;
      known[mask] = !detail::coefficient_is_zero(acc);
    }
  }
  return known[full] ? minors[full] : R{};
}

/// Sylvester matrix of p (degree m) and q (degree n), size (m+n) x (m+n).
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Polynomial<R>& p, const Polynomial<R>& q) {
  const int m = p.degree();
  const int n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<R>> s(size, std::vector<R>(size));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s[i][i + k] = p[static_cast<std::size_t>(m - k)];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = q[static_cast<std::size_t>(n - k)];
  }
  return s;
}

/// Resultant of p and q with respect to their (outer) variable, computed as
/// the determinant of the Sylvester matrix. Every common root of p and q is a
/// root of the result; it vanishes identically iff p and q share a factor of
/// positive degree.
template <class R>
R resultant(const Polynomial<R>& p, const Polynomial<R>& q) {
  if (p.is_zero() || q.is_zero()) throw DegenerateInput("resultant: polynomial is identically zero");
  if (p.degree() == 0 && q.degree() == 0) {
    throw DegenerateInput("resultant: both polynomials are constant in the eliminated variable");
  }
  // Res(c, q) = c^deg(q) for a constant c.
  if (p.degree() == 0 || q.degree() == 0) {
    const bool p_const = p.degree() == 0;
    const R& c = p_const ? p[0] : q[0];
    const int e = p_const ? q.degree() : p.degree();
    R out = c;
    for (int i = 1; i < e; ++i) out = out * c;
    return out;
  }
  return division_free_determinant(sylvester_matrix(p, q));
}

/// Eliminates the outer variable of two bivariate polynomials; the result is
/// a polynomial in the inner variable in canonical (primitive) form.
RationalPoly eliminate_outer(const BivariatePoly& p, const BivariatePoly& q);

}  // namespace compack
