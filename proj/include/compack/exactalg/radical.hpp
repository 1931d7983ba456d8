#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>

#include "compack/errors.hpp"
#include "compack/exactalg/interval.hpp"
#include "compack/exactalg/resultant.hpp"

namespace compack {

inline constexpr int kTowerGenerators = 4;
inline constexpr int kTowerMonomials = 1 << kTowerGenerators;

/// Four square roots Z_i = sigma_i * sqrt(d_i) adjoined to a base field F.
/// `branch` fixes the sign sigma_i used whenever a real value is needed.
template <class F>
class RadicalTower {
 public:
  RadicalTower(std::array<F, kTowerGenerators> squares, std::array<std::string, kTowerGenerators> names,
               std::array<int, kTowerGenerators> branch = {1, 1, 1, 1})
      : squares_(std::move(squares)), names_(std::move(names)), branch_(branch) {
    for (int mask = 0; mask < kTowerMonomials; ++mask) {
      F prod(1);
      for (int i = 0; i < kTowerGenerators; ++i) {
        if (mask & (1 << i)) prod = prod * squares_[static_cast<std::size_t>(i)];
      }
      square_products_[static_cast<std::size_t>(mask)] = prod;
    }
  }

  const F& square(int i) const { return squares_[static_cast<std::size_t>(i)]; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int branch(int i) const { return branch_[static_cast<std::size_t>(i)]; }
  /// Product of d_i over the generators in `mask`.
  const F& square_product(int mask) const { return square_products_[static_cast<std::size_t>(mask)]; }

  const std::array<F, kTowerGenerators>& squares() const { return squares_; }
  const std::array<std::string, kTowerGenerators>& names() const { return names_; }
  const std::array<int, kTowerGenerators>& branches() const { return branch_; }

 private:
  std::array<F, kTowerGenerators> squares_;
  std::array<std::string, kTowerGenerators> names_;
  std::array<int, kTowerGenerators> branch_;
  std::array<F, kTowerMonomials> square_products_;
};

template <class F>
using TowerPtr = std::shared_ptr<const RadicalTower<F>>;

template <class F>
TowerPtr<F> make_tower(std::array<F, kTowerGenerators> squares, std::array<std::string, kTowerGenerators> names,
                       std::array<int, kTowerGenerators> branch = {1, 1, 1, 1}) {
  return std::make_shared<const RadicalTower<F>>(std::move(squares), std::move(names), branch);
}

/// Multilinear polynomial in the tower generators with coefficients in F:
/// coordinate `mask` multiplies the product of the generators whose bits are
/// set. Elements without a tower are constants of F.
template <class F>
class RadicalElement {
 public:
  RadicalElement() = default;
  RadicalElement(const F& constant) { c_[0] = constant; }  // NOLINT(google-explicit-constructor)
  RadicalElement(TowerPtr<F> tower, const F& constant) : tower_(std::move(tower)) { c_[0] = constant; }

  static RadicalElement generator(const TowerPtr<F>& tower, int i) {
    RadicalElement out(tower, F());
    out.c_[static_cast<std::size_t>(1 << i)] = F(1);
    return out;
  }

  static RadicalElement monomial(const TowerPtr<F>& tower, int mask, const F& coefficient) {
    RadicalElement out(tower, F());
    out.c_[static_cast<std::size_t>(mask)] = coefficient;
    return out;
  }

  const TowerPtr<F>& tower() const { return tower_; }
  const F& coefficient(int mask) const { return c_[static_cast<std::size_t>(mask)]; }
  const std::array<F, kTowerMonomials>& coordinates() const { return c_; }

  /// True when every coordinate vanishes. For dependent generators the value
  /// may vanish without this; use exact_sign for a value test.
  bool is_zero() const {
    for (const auto& x : c_) {
      if (!detail::coefficient_is_zero(x)) return false;
    }
    return true;
  }

  /// Bitmask of the generators that occur with a nonzero coefficient.
  int support() const {
    int used = 0;
    for (int mask = 0; mask < kTowerMonomials; ++mask) {
      if (!detail::coefficient_is_zero(c_[static_cast<std::size_t>(mask)])) used |= mask;
    }
    return used;
  }

  bool is_constant() const { return support() == 0; }

  RadicalElement operator-() const {
    RadicalElement out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend RadicalElement operator+(const RadicalElement& a, const RadicalElement& b) {
    RadicalElement out(common(a, b), F());
    for (std::size_t i = 0; i < kTowerMonomials; ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }

  friend RadicalElement operator-(const RadicalElement& a, const RadicalElement& b) {
    RadicalElement out(common(a, b), F());
    for (std::size_t i = 0; i < kTowerMonomials; ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }

  friend RadicalElement operator*(const RadicalElement& a, const RadicalElement& b) { return radical_mul(a, b); }

  RadicalElement& operator+=(const RadicalElement& o) { return *this = *this + o; }
  RadicalElement& operator-=(const RadicalElement& o) { return *this = *this - o; }
  RadicalElement& operator*=(const RadicalElement& o) { return *this = *this * o; }

  friend bool operator==(const RadicalElement& a, const RadicalElement& b) { return (a - b).is_zero(); }
  friend bool operator!=(const RadicalElement& a, const RadicalElement& b) { return !(a == b); }

  /// Product in canonical multilinear form: every Z_i^2 is replaced by d_i.
  /// Throws MismatchedBase when the operands live in different towers.
  friend RadicalElement radical_mul(const RadicalElement& a, const RadicalElement& b) {
    const TowerPtr<F> t = common(a, b);
    RadicalElement out(t, F());
    for (int i = 0; i < kTowerMonomials; ++i) {
      const F& x = a.c_[static_cast<std::size_t>(i)];
      if (detail::coefficient_is_zero(x)) continue;
      for (int j = 0; j < kTowerMonomials; ++j) {
        const F& y = b.c_[static_cast<std::size_t>(j)];
        if (detail::coefficient_is_zero(y)) continue;
        F term = x * y;
        const int overlap = i & j;
        if (overlap != 0) {
          if (!t) throw MismatchedBase("radical product of tower monomials without a tower");
          term = term * t->square_product(overlap);
        }
        auto& slot = out.c_[static_cast<std::size_t>(i ^ j)];
        slot = slot + term;
      }
    }
    return out;
  }

  /// Writes this = A + B * Z_i with A, B free of Z_i.
  std::pair<RadicalElement, RadicalElement> split(int i) const {
    RadicalElement a(tower_, F()), b(tower_, F());
    const int bit = 1 << i;
    for (int mask = 0; mask < kTowerMonomials; ++mask) {
      if (mask & bit) {
        b.c_[static_cast<std::size_t>(mask ^ bit)] = c_[static_cast<std::size_t>(mask)];
      } else {
        a.c_[static_cast<std::size_t>(mask)] = c_[static_cast<std::size_t>(mask)];
      }
    }
    return {a, b};
  }

  /// Applies f to every coordinate, moving the element into `target`.
  template <class G, class Map>
  RadicalElement<G> map_coefficients(const TowerPtr<G>& target, Map f) const {
    RadicalElement<G> out(target, G());
    for (int mask = 0; mask < kTowerMonomials; ++mask) {
      out = out + RadicalElement<G>::monomial(target, mask, f(c_[static_cast<std::size_t>(mask)]));
    }
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (int mask = 0; mask < kTowerMonomials; ++mask) {
      const F& x = c_[static_cast<std::size_t>(mask)];
      if (detail::coefficient_is_zero(x)) continue;
      if (!out.empty()) out += " + ";
      out += "(" + x.to_string() + ")";
      for (int i = 0; i < kTowerGenerators; ++i) {
        if (mask & (1 << i)) out += "*" + (tower_ ? tower_->name(i) : "Z" + std::to_string(i));
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  static TowerPtr<F> common(const RadicalElement& a, const RadicalElement& b) {
    if (!a.tower_) return b.tower_;
    if (!b.tower_) return a.tower_;
    if (a.tower_ != b.tower_) throw MismatchedBase("radical elements over different towers");
    return a.tower_;
  }

  TowerPtr<F> tower_;
  std::array<F, kTowerMonomials> c_{};
};

template <class F>
bool is_zero(const RadicalElement<F>& e) {
  return e.is_zero();
}

/// Eliminates Z_i from the equation e = 0: the resultant of A + B X and
/// X^2 - d_i with respect to X, where e = A + B Z_i.
template <class F>
RadicalElement<F> eliminate_generator(const RadicalElement<F>& e, int i) {
  if (!e.tower()) return e;
  auto [a, b] = e.split(i);
  if (b.is_zero()) return a;
  const Polynomial<RadicalElement<F>> linear{a, b};
  const Polynomial<RadicalElement<F>> quadratic{RadicalElement<F>(e.tower(), -e.tower()->square(i)),
                                                RadicalElement<F>(e.tower(), F()), RadicalElement<F>(e.tower(), F(1))};
  return resultant(linear, quadratic);
}

/// Exact sign of the real value of e on the tower's branch. F must provide
/// `sign`. Throws DegenerateInput when a generator in use has d_i < 0.
template <class F>
int exact_sign(const RadicalElement<F>& e) {
  const int used = e.support();
  if (used == 0) return sign(e.coefficient(0));
  int i = kTowerGenerators - 1;
  while (!(used & (1 << i))) --i;
  const auto& tower = *e.tower();
  const int sd = sign(tower.square(i));
  if (sd < 0) throw DegenerateInput("generator " + tower.name(i) + " is imaginary at this base");
  auto [a, b] = e.split(i);
  const int sa = exact_sign(a);
  if (sd == 0) return sa;
  const int sb = exact_sign(b) * tower.branch(i);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare |A| with |B Z_i| through A^2 - d_i B^2.
  const RadicalElement<F> norm = radical_mul(a, a) - radical_mul(radical_mul(b, b), RadicalElement<F>(e.tower(), tower.square(i)));
  const int sn = exact_sign(norm);
  if (sn == 0) return 0;
  return sn > 0 ? sa : sb;
}

template <class F>
bool value_is_zero(const RadicalElement<F>& e) {
  return exact_sign(e) == 0;
}

/// Outward enclosure of e on the tower's branch, of width at most 2^-bits.
/// F must provide `enclose(F, bits)`. Throws PrecisionExhausted if the width
/// cannot be reached below `max_bits`.
template <class F>
DyadicInterval enclose(const RadicalElement<F>& e, long bits, long max_bits = 4096) {
  const Rational target = pow2(-bits);
  for (long work = bits + 16; work <= max_bits + 64; work = work * 2) {
    const long prec = work + 64;
    std::array<DyadicInterval, kTowerGenerators> gens;
    const int used = e.support();
    for (int i = 0; i < kTowerGenerators; ++i) {
      if (!(used & (1 << i))) continue;
      const auto& tower = *e.tower();
      const int sd = sign(tower.square(i));
      if (sd < 0) throw DegenerateInput("generator " + tower.name(i) + " is imaginary at this base");
      DyadicInterval root = sqrt(enclose(tower.square(i), work).with_precision(prec));
      gens[static_cast<std::size_t>(i)] = tower.branch(i) > 0 ? root : -root;
    }
    DyadicInterval acc(Rational(0), prec);
    for (int mask = 0; mask < kTowerMonomials; ++mask) {
      const F& c = e.coefficient(mask);
      if (detail::coefficient_is_zero(c)) continue;
      DyadicInterval term = enclose(c, work).with_precision(prec);
      for (int i = 0; i < kTowerGenerators; ++i) {
        if (mask & (1 << i)) term = term * gens[static_cast<std::size_t>(i)];
      }
      acc = acc + term;
    }
    if (acc.width() <= target) return acc;
  }
  throw PrecisionExhausted("radical enclosure", max_bits);
}

}  // namespace compack
