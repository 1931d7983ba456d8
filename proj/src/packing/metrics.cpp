#include "compack/packing/metrics.hpp"

#include "compack/errors.hpp"
#include "compack/packing/tiling.hpp"

namespace compack {

std::string PackingMetrics::density_expression() const { return "π(" + density_over_pi.to_string() + ")"; }

Biquadratic close_packing_density_over_pi() { return {0, Rational(1, 6), 0, 0}; }

PackingMetrics density(const PackingModel& p, long bits) {
  PackingMetrics m;
  Biquadratic volume;
  for (const auto& s : p.motif()) {
    volume += Biquadratic(Rational(4, 3)) * s.radius * s.radius * s.radius;
    ++(s.kind == 'L' ? m.large : m.small);
  }
  m.density_over_pi = volume / p.cell_volume();
  const long prec = bits + 16;
  m.density = DyadicInterval::pi(prec) * m.density_over_pi.enclose(prec);
  for (const auto& t : contact_tetrahedra(p, contact_graph(p))) ++m.simplex_census[t.kinds];
  return m;
}

namespace {

// Angles θ with cos θ in {1, 1/2, 0, -1/2, -1}, as multiples of π.
std::optional<Rational> special_arccos_over_pi(const Rational& c) {
  if (c == 1) return Rational(0);
  if (c == Rational(1, 2)) return Rational(1, 3);
  if (c == 0) return Rational(1, 2);
  if (c == Rational(-1, 2)) return Rational(2, 3);
  if (c == -1) return Rational(1);
  return std::nullopt;
}

}  // namespace

SolidAngle contact_solid_angle(const AlgebraicReal& r, long bits) {
  if (r.compare(Rational(0)) <= 0) throw DegenerateInput("apex radius must be positive");
  const FieldElement radius = r.is_rational() ? FieldElement(r.rational_value()) : FieldElement::generator(make_field(r));
  const FieldElement apex_edge = radius + 1;
  // Law of cosines on the triangle apex, base, base with sides 1 + r, 1 + r, 2.
  const FieldElement cos_apex = FieldElement(1) - FieldElement(2) / (apex_edge * apex_edge);
  // Spherical law of cosines on the equilateral triangle cut out at the apex.
  const FieldElement cos_dihedral = cos_apex / (cos_apex + 1);

  SolidAngle out{cos_apex, cos_dihedral, std::nullopt, DyadicInterval(bits), std::nullopt, DyadicInterval(bits)};
  if (cos_dihedral.is_rational()) {
    if (const auto a = special_arccos_over_pi(cos_dihedral.rational_value())) out.pi_multiple = 3 * *a - 1;
  }
  for (long prec = bits; prec <= 4096; prec *= 2) {
    const DyadicInterval pi = DyadicInterval::pi(prec + 16);
    out.value = acos(cos_dihedral.enclose(prec + 16)) * Rational(3) - pi;
    if (out.value.certain_sign() <= 0) throw DegenerateInput("solid angle is not positive");
    out.copies = pi * Rational(4) / out.value;
    if (out.pi_multiple) {
      const Rational n = Rational(4) / *out.pi_multiple;
      out.divides_full_sphere = n.get_den() == 1;
      return out;
    }
    const Integer k = floor_of(out.copies.lower());
    if (out.copies.lower() > Rational(k) && out.copies.upper() < Rational(k + 1)) {
      out.divides_full_sphere = false;
      return out;
    }
  }
  return out;
}

SolidAngle solid_angle_at_small(const AlgebraicReal& r, long bits) {
  if (r.compare(Rational(0)) <= 0 || r.compare(Rational(1)) >= 0) throw DegenerateInput("small radius must lie in (0, 1)");
  return contact_solid_angle(r, bits);
}

}  // namespace compack
