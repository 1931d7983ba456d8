#pragma once

#include <array>
#include <optional>
#include <vector>

#include "compack/geometry/biquadratic.hpp"
#include "compack/packing/stacking.hpp"

namespace compack {

using Shift = std::array<int, 3>;

struct Sphere {
  Vec3 centre;
  Biquadratic radius;
  char kind;  // 'L' or 'S'
};

/// A periodic packing: a motif of spheres repeated over the lattice spanned
/// by the three columns of `lattice`.
class PackingModel {
 public:
  PackingModel(Mat3 lattice, std::vector<Sphere> motif);

  const Mat3& lattice() const { return lattice_; }
  const std::vector<Sphere>& motif() const { return motif_; }
  const Sphere& sphere(int i) const { return motif_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(motif_.size()); }
  int count(char kind) const;

  /// Centre of motif sphere i translated by the lattice vector with
  /// coordinates `shift`.
  Vec3 position(int i, const Shift& shift) const;
  Biquadratic cell_volume() const;

  /// Coordinates of p in the lattice basis.
  Vec3 fractional(const Vec3& p) const;
  /// p moved into the half-open unit cell, with the shift that was removed.
  std::pair<Vec3, Shift> reduce(const Vec3& p) const;

  /// A translate of a motif sphere near sphere i, with a floating-point
  /// squared distance that is only used to skip clear cases.
  struct Near {
    int index;
    Shift shift;
    double approx_sq;
  };
  /// Every translate of every motif sphere whose centre may lie within
  /// sqrt(max_sq) of position(i, 0), excluding that sphere itself.
  std::vector<Near> near(int i, double max_sq) const;

  Biquadratic distance_sq(int i, const Near& n) const;
  /// Sign of |position(i,0) - position(n)|^2 - threshold. Decided in floating
  /// point only when the gap exceeds 1e-6, far above rounding error;
  /// otherwise exactly.
  int compare_distance_sq(int i, const Near& n, const Biquadratic& threshold) const;

 private:
  Mat3 lattice_;
  Mat3 inverse_;
  Eigen::Matrix3d lattice_d_, inverse_d_;
  std::vector<Sphere> motif_;
  std::vector<Eigen::Vector3d> centres_d_;
};

/// Unit spheres on triangular layers at the positions named by `seq`, layer
/// spacing 2√6/3, one layer period per cell.
PackingModel build_close_packing(const StackingSequence& seq);

/// Face-centred cubic packing in its conventional cubic cell of side 2√2,
/// optionally with every octahedral hole filled.
PackingModel fcc_cubic_cell(bool filled);

/// Adds a sphere of radius √2 - 1 at every octahedral hole. Throws
/// DegenerateInput unless the input is a close packing of unit spheres.
PackingModel fill_octahedral_holes(const PackingModel& p);

struct Contact {
  int a, b;
  Shift shift;  // sphere b is translated by this lattice vector
};

/// Tangencies of a periodic packing. `contacts` lists each tangent pair once
/// up to translation; `neighbours[i]` lists every translate touching sphere i.
struct ContactGraph {
  std::vector<char> kinds;
  std::vector<Contact> contacts;
  std::vector<std::vector<Contact>> neighbours;

  int degree(int i) const { return static_cast<int>(neighbours[static_cast<std::size_t>(i)].size()); }
  int degree_to(int i, char kind) const;
};

/// Exact tangency census; throws DegenerateInput if two spheres overlap.
ContactGraph contact_graph(const PackingModel& p);

/// The small radius √2 - 1.
Biquadratic silver_radius();

}  // namespace compack
