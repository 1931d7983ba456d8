#pragma once

#include <map>
#include <optional>
#include <string>

#include "compack/exactalg/algebraic_real.hpp"
#include "compack/exactalg/interval.hpp"
#include "compack/exactalg/number_field.hpp"
#include "compack/packing/model.hpp"

namespace compack {

struct PackingMetrics {
  Biquadratic density_over_pi;  // density = π times this
  DyadicInterval density;
  int large = 0;
  int small = 0;
  std::map<std::string, int> simplex_census;  // contact tetrahedra per cell

  /// E.g. "π(5/3 - √2)".
  std::string density_expression() const;
};

/// Exact density (sphere volume per cell over cell volume) with an enclosure
/// of width at most 2^-bits.
PackingMetrics density(const PackingModel& p, long bits = 64);

/// Density of a close packing of equal spheres, π/√18, over π.
Biquadratic close_packing_density_over_pi();

/// Solid angle at the apex of a tetrahedron whose apex sphere (radius r)
/// touches three mutually tangent unit spheres.
struct SolidAngle {
  FieldElement cos_apex;     // cosine of the angle between two base centres seen from the apex
  FieldElement cos_dihedral; // cosine of the dihedral angle along an apex edge
  std::optional<Rational> pi_multiple;  // the angle over π, when exactly known
  DyadicInterval value;
  /// Whether copies of the angle fill 4π exactly; nullopt if undecided.
  std::optional<bool> divides_full_sphere;
  /// Enclosure of 4π over the angle.
  DyadicInterval copies;
};

/// Girard's formula: three times the dihedral angle minus π. Throws
/// DegenerateInput unless r > 0.
SolidAngle contact_solid_angle(const AlgebraicReal& r, long bits = 128);

/// contact_solid_angle restricted to a small apex, 0 < r < 1.
SolidAngle solid_angle_at_small(const AlgebraicReal& r, long bits = 128);

}  // namespace compack
