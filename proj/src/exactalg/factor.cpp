#include "compack/exactalg/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "compack/errors.hpp"

namespace compack {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd prime below 2^31. Low degree first, trimmed.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct PrimeField {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly mod_sub(const PrimeField& F, ModPoly a, const ModPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

ModPoly mod_add(const PrimeField& F, ModPoly a, const ModPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  trim(a);
  return a;
}

ModPoly mod_mul(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

std::pair<ModPoly, ModPoly> mod_divmod(const PrimeField& F, ModPoly a, const ModPoly& b) {
  if (b.empty()) throw DegenerateInput("modular division by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  const u64 inv = F.inv(b.back());
  ModPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 c = F.mul(a[k + b.size() - 1], inv);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = F.sub(a[k + j], F.mul(c, b[j]));
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly mod_rem(const PrimeField& F, const ModPoly& a, const ModPoly& b) { return mod_divmod(F, a, b).second; }

ModPoly mod_monic(const PrimeField& F, ModPoly a) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, inv);
  return a;
}

ModPoly mod_gcd(const PrimeField& F, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = mod_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return mod_monic(F, a);
}

// (g, s, t) with s a + t b = g monic.
void mod_ext_gcd(const PrimeField& F, const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = mod_divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = mod_sub(F, s0, mod_mul(F, q, s1));
    ModPoly t2 = mod_sub(F, t0, mod_mul(F, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = F.inv(r0.back());
  for (auto& x : r0) x = F.mul(x, inv);
  for (auto& x : s0) x = F.mul(x, inv);
  for (auto& x : t0) x = F.mul(x, inv);
  g = r0;
  s = s0;
  t = t0;
}

// base^e mod m with a big exponent.
ModPoly mod_powmod(const PrimeField& F, ModPoly base, const Integer& e, const ModPoly& m) {
  ModPoly result = {1};
  base = mod_rem(F, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod_rem(F, mod_mul(F, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod_rem(F, mod_mul(F, result, base), m);
  }
  return result;
}

ModPoly mod_derivative(const PrimeField& F, const ModPoly& a) {
  ModPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(F.mul(a[i], i % F.p));
  trim(out);
  return out;
}

ModPoly reduce_mod_p(const std::vector<Integer>& f, u64 p) {
  ModPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

// Cantor-Zassenhaus equal-degree splitting of a monic squarefree product of
// irreducibles of degree d.
void equal_degree_split(const PrimeField& F, const ModPoly& g, int d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& x : a) x = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = mod_powmod(F, a, e, g);
    b = mod_sub(F, b, ModPoly{1});
    ModPoly h = mod_gcd(F, g, b);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, mod_divmod(F, g, h).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree f over F_p.
std::vector<ModPoly> factor_mod_p(const PrimeField& F, ModPoly f) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eedULL + F.p);
  const ModPoly x = {0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = mod_powmod(F, h, Integer(static_cast<unsigned long>(F.p)), f);
    ModPoly g = mod_gcd(F, f, mod_sub(F, h, x));
    if (deg(g) > 0) {
      equal_degree_split(F, g, d, rng, out);
      f = mod_divmod(F, f, g).first;
      h = mod_rem(F, h, f);
    }
  }
  if (deg(f) > 0) out.push_back(mod_monic(F, f));
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo m = p^k.

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& x : a) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return zmod(std::move(out), m);
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly out;
  for (u64 v : a) out.emplace_back(static_cast<unsigned long>(v));
  ztrim(out);
  return out;
}

ModPoly to_mod(const ZPoly& a, u64 p) { return reduce_mod_p(a, p); }

// Lifts F = G H (mod p) with G, H monic to F = G H (mod p^k), F monic mod p^k.
void hensel_lift_pair(const ZPoly& F, ZPoly& G, ZPoly& H, u64 p, int k) {
  const PrimeField fp{p};
  ModPoly g_mod = to_mod(G, p), h_mod = to_mod(H, p), gg, s, t;
  mod_ext_gcd(fp, g_mod, h_mod, gg, s, t);
  Integer pj = static_cast<unsigned long>(p);
  for (int j = 1; j < k; ++j) {
    const Integer next = pj * static_cast<unsigned long>(p);
    ZPoly prod = zmul(G, H, next);
    ZPoly e = F;
    if (prod.size() > e.size()) e.resize(prod.size(), Integer(0));
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    e = zmod(std::move(e), next);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    const ModPoly em = to_mod(e, p);
    auto [q, a] = mod_divmod(fp, mod_mul(fp, em, t), g_mod);
    ModPoly b = mod_add(fp, mod_mul(fp, em, s), mod_mul(fp, q, h_mod));
    ZPoly az = from_mod(a), bz = from_mod(b);
    if (az.size() > G.size()) G.resize(az.size(), Integer(0));
    if (bz.size() > H.size()) H.resize(bz.size(), Integer(0));
    for (std::size_t i = 0; i < az.size(); ++i) G[i] += pj * az[i];
    for (std::size_t i = 0; i < bz.size(); ++i) H[i] += pj * bz[i];
    G = zmod(std::move(G), next);
    H = zmod(std::move(H), next);
    pj = next;
  }
}

std::vector<ZPoly> hensel_lift_all(const ZPoly& F, const std::vector<ModPoly>& factors, u64 p, int k,
                                   const Integer& m) {
  if (factors.size() == 1) return {zmod(F, m)};
  const PrimeField fp{p};
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ModPoly g = {1}, h = {1};
  for (const auto& f : left) g = mod_mul(fp, g, f);
  for (const auto& f : right) h = mod_mul(fp, h, f);
  ZPoly G = from_mod(g), H = from_mod(h);
  hensel_lift_pair(F, G, H, p, k);
  std::vector<ZPoly> out = hensel_lift_all(G, left, p, k, m);
  std::vector<ZPoly> rest = hensel_lift_all(H, right, p, k, m);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Symmetric residues in (-m/2, m/2].
ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& x : a) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  ztrim(a);
  return a;
}

// Exact division over Z; returns false when b does not divide a.
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  const RationalPoly qa = from_integers(a), qb = from_integers(b);
  auto [quo, rem] = divmod(qa, qb);
  if (!rem.is_zero()) return false;
  q.clear();
  for (const auto& c : quo.coefficients()) {
    if (c.get_den() != 1) return false;
    q.push_back(c.get_num());
  }
  return true;
}

std::vector<RationalPoly> zassenhaus(const ZPoly& f_in) {
  ZPoly f = f_in;
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {from_integers(f)};

  // Choose among the first few admissible primes the one with fewest modular factors.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int admissible = 0;
  for (u64 p = 3; admissible < 8 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeField fp{p};
    ModPoly fm = reduce_mod_p(f, p);
    if (deg(fm) != n) continue;
    if (deg(mod_gcd(fp, fm, mod_derivative(fp, fm))) != 0) continue;
    ++admissible;
    std::vector<ModPoly> facs = factor_mod_p(fp, mod_monic(fp, fm));
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw Error("factor_squarefree: no admissible prime found");
  if (best.size() == 1) return {from_integers(f)};

  // Mignotte-style bound on the coefficients of any factor, times the leading coefficient.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= abs(f.back());
  bound *= 2;
  int k = 1;
  Integer m = static_cast<unsigned long>(best_p);
  while (m <= bound) {
    m *= static_cast<unsigned long>(best_p);
    ++k;
  }

  // Monic image of f modulo p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t());
  ZPoly F = f;
  for (auto& c : F) c *= lc_inv;
  F = zmod(std::move(F), m);
  std::vector<ZPoly> lifted = hensel_lift_all(F, best, best_p, k, m);

  std::vector<RationalPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand = {f.back()};
      for (auto i : idx) cand = zmul(cand, lifted[i], m);
      cand = symmetric(std::move(cand), m);
      ZPoly prim = integer_coefficients(from_integers(cand));
      ZPoly quo;
      if (!prim.empty() && prim.size() > 1 && zdivide(f, prim, quo)) {
        found.push_back(from_integers(prim));
        f = integer_coefficients(from_integers(quo));
        for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
        progress = true;
        break;
      }
      // Next s-subset in lexicographic order.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++s;
  }
  if (f.size() > 1) found.push_back(from_integers(f));
  return found;
}

}  // namespace

bool poly_less(const RationalPoly& a, const RationalPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<PolyFactor> squarefree_decomposition(const RationalPoly& p) {
  if (p.is_zero()) throw DegenerateInput("squarefree_decomposition of the zero polynomial");
  std::vector<PolyFactor> out;
  if (p.degree() == 0) return out;
  RationalPoly a = primitive_part(p);
  RationalPoly b = derivative(a);
  RationalPoly c = gcd(a, b);
  RationalPoly w = a / c;
  RationalPoly y = b / c;
  int i = 1;
  while (w.degree() > 0) {
    RationalPoly z = y - derivative(w);
    RationalPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({primitive_part(g), i});
    w = w / g;
    y = z / g;
    ++i;
  }
  return out;
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.is_zero()) throw DegenerateInput("squarefree_part of the zero polynomial");
  if (p.degree() <= 0) return make_poly({1});
  RationalPoly a = primitive_part(p);
  return primitive_part(a / gcd(a, derivative(a)));
}

std::vector<RationalPoly> factor_squarefree(const RationalPoly& p) {
  if (p.is_zero()) throw DegenerateInput("factor_squarefree of the zero polynomial");
  std::vector<RationalPoly> out;
  ZPoly f = integer_coefficients(p);
  if (f.size() <= 1) return out;
  // Split off the factor x, which the modular step cannot see through a zero constant term.
  if (sgn(f[0]) == 0) {
    out.push_back(make_poly({0, 1}));
    f.erase(f.begin());
    ZPoly g = integer_coefficients(from_integers(f));
    f = g;
  }
  if (f.size() > 1) {
    for (auto& q : zassenhaus(f)) out.push_back(primitive_part(q));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<PolyFactor> factor_rational(const RationalPoly& p) {
  std::vector<PolyFactor> out;
  for (const auto& sf : squarefree_decomposition(p)) {
    for (auto& q : factor_squarefree(sf.poly)) out.push_back({q, sf.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (poly_less(a.poly, b.poly)) return true;
    if (poly_less(b.poly, a.poly)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const RationalPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (gcd(p, derivative(p)).degree() > 0) return false;
  return factor_squarefree(p).size() == 1;
}

}  // namespace compack
