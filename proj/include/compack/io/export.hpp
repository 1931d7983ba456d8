#pragma once

#include <json.hpp>
#include <string>

#include "compack/necklace/radii.hpp"
#include "compack/packing/metrics.hpp"
#include "compack/packing/tiling.hpp"
#include "compack/shell/embed.hpp"

namespace compack {

using Json = nlohmann::ordered_json;

/// Decimal with `digits` significant digits, correctly rounded.
std::string decimal(const Rational& q, int digits);
std::string decimal(const Biquadratic& x, int digits);
/// Significant decimal digits carried by `bits` binary digits.
int digits_for_bits(long bits);

/// The same number isolated to width at most 2^-40.
AlgebraicReal tightened(const AlgebraicReal& x);
/// Decimal of an algebraic number, `digits` places after the point.
std::string approx_decimal(const AlgebraicReal& x, int digits = 6);

/// Four rational strings over the basis 1, √2, √3, √6.
Json field_json(const Biquadratic& x);
/// Integer coefficients, low degree first, with unit content.
Json poly_json(const RationalPoly& p);
Json interval_json(const DyadicInterval& x);

Json radius_json(const RadiusRecord& r, AngleContext ctx = AngleContext::Skew);
Json shell_json(const EmbeddedShell& s);
Json metrics_json(const PackingMetrics& m);

/// Extended XYZ: one line per sphere with decimal centre and radius, then the
/// exact values as 4-tuples over 1, √2, √3, √6 in a trailing comment.
std::string packing_xyz(const PackingModel& p, long precision_bits = 64);

/// The contact tetrahedra of one cell as an OFF surface mesh, four
/// triangles per tetrahedron.
std::string tiling_off(const PackingModel& p, const CompactVerdict& v);

}  // namespace compack
