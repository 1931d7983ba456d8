#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "compack/packing/model.hpp"

namespace compack {

/// A translate of a motif sphere.
struct SiteRef {
  int index;
  Shift shift;
  auto operator<=>(const SiteRef&) const = default;
};

/// Four mutually tangent spheres; one representative per lattice translate.
struct Tetrahedron {
  std::array<SiteRef, 4> vertices;
  std::string kinds;  // small spheres first, e.g. "LLLL" or "SLLL"
  Biquadratic volume;
};

/// Every 4-clique of the contact graph, up to translation, in a fixed order.
std::vector<Tetrahedron> contact_tetrahedra(const PackingModel& p, const ContactGraph& g);

/// Exact test that two tetrahedra meet in the hull of their common
/// vertices (possibly empty); throws DegenerateInput on a flat one.
bool meet_face_to_face(const std::array<Vec3, 4>& a, const std::array<Vec3, 4>& b);

struct CompactVerdict {
  bool compact = false;
  std::string reason;  // empty when compact
  std::vector<Tetrahedron> tetrahedra;
  std::map<std::string, int> census;  // per cell, keyed by kinds
  Biquadratic tetra_volume;
  Biquadratic cell_volume;
  Biquadratic uncovered_volume;
  long exact_pair_tests = 0;
};

/// Decides whether the contact tetrahedra tile space face to face: they must
/// meet pairwise exactly in the hull of their shared vertices, and their
/// volumes must add up to the cell volume.
CompactVerdict verify_compact(const PackingModel& p);

}  // namespace compack
