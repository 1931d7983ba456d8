#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "compack/errors.hpp"
#include "compack/exactalg/algebraic_real.hpp"
#include "compack/geometry/biquadratic.hpp"
#include "compack/shell/complex.hpp"

namespace compack {

enum class ShapeClass { Cuboctahedron, TriangularOrthobicupola };

std::string to_string(ShapeClass c);

/// A complete shell with exact neighbor centers; the central large sphere
/// sits at the origin.
struct EmbeddedShell {
  ShellComplex complex;
  Biquadratic small_radius;
  std::vector<Vec3> coordinates;
  ShapeClass shape;

  /// Sphere radius of vertex v.
  Biquadratic radius(int v) const;
};

/// Folding the faces around some cycle of the complex returns a vertex to a
/// different position than it already had.
class ShellClosureError : public Error {
 public:
  ShellClosureError(const std::string& what, std::vector<int> cycle) : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

/// Exact coordinates of a complete shell with small radius r. A first face is
/// placed by hand and every further vertex is obtained by folding a face
/// across an edge whose endpoints are known. Throws DegenerateInput if r or a
/// coordinate leaves Q(√2, √3), ShellClosureError on inconsistent folds, and
/// Error when the result fails a distance check or matches no known shape.
EmbeddedShell embed_shell(const ShellComplex& s, const AlgebraicReal& r);

/// Every violated metric condition (center distances, tangencies, overlaps,
/// orientation); empty when the embedding is sound.
std::vector<std::string> embedding_violations(const EmbeddedShell& e);

/// Shape from the multiset of squared distances between large centers.
std::optional<ShapeClass> classify_large_centers(const std::vector<Vec3>& large);

/// Reference large-sphere centers at distance 2 from the origin.
std::vector<Vec3> reference_large_centers(ShapeClass c);

struct SixRing {
  std::array<int, 6> vertices;  // consecutive vertices are adjacent
  Vec3 normal;
};

/// Every set of six large neighbors coplanar with the center that closes up
/// into a cycle of adjacent spheres.
std::vector<SixRing> shell_ring_property(const EmbeddedShell& e);

/// For each vertex, the number of such rings through it (zero for small ones).
std::vector<int> rings_through_vertices(const EmbeddedShell& e);

/// OFF mesh of the shell; vertex labels are written as comments.
std::string to_off(const EmbeddedShell& e);

}  // namespace compack
