#include "compack/packing/model.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "compack/errors.hpp"

namespace compack {

namespace {

Integer floor_of(const Biquadratic& x) {
  Integer k(std::floor(x.to_double()));
  while (Biquadratic(Rational(k)) > x) --k;
  while (Biquadratic(Rational(k + 1)) <= x) ++k;
  return k;
}

Vec3 column(const Mat3& m, int k) { return m.col(k); }

Biquadratic layer_height() { return Biquadratic(0, 0, 0, Rational(2, 3)); }

}  // namespace

Biquadratic silver_radius() { return {-1, 1, 0, 0}; }

PackingModel::PackingModel(Mat3 lattice, std::vector<Sphere> motif)
    : lattice_(std::move(lattice)), motif_(std::move(motif)) {
  if (lattice_.determinant().is_zero()) throw DegenerateInput("packing lattice is degenerate");
  inverse_ = lattice_.inverse();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      lattice_d_(r, c) = lattice_(r, c).to_double();
      inverse_d_(r, c) = inverse_(r, c).to_double();
    }
  }
  for (const auto& s : motif_) centres_d_.push_back(to_double(s.centre));
}

int PackingModel::count(char kind) const {
  return static_cast<int>(std::count_if(motif_.begin(), motif_.end(), [&](const Sphere& s) { return s.kind == kind; }));
}

Vec3 PackingModel::position(int i, const Shift& shift) const {
  Vec3 p = sphere(i).centre;
  for (int k = 0; k < 3; ++k) {
    if (shift[static_cast<std::size_t>(k)] != 0) p += column(lattice_, k) * Biquadratic(shift[static_cast<std::size_t>(k)]);
  }
  return p;
}

Biquadratic PackingModel::cell_volume() const {
  const Biquadratic d = lattice_.determinant();
  return d.sign() < 0 ? -d : d;
}

Vec3 PackingModel::fractional(const Vec3& p) const { return inverse_ * p; }

std::pair<Vec3, Shift> PackingModel::reduce(const Vec3& p) const {
  const Vec3 f = fractional(p);
  Shift s{};
  for (int k = 0; k < 3; ++k) s[static_cast<std::size_t>(k)] = static_cast<int>(floor_of(f(k)).get_si());
  Vec3 q = p;
  for (int k = 0; k < 3; ++k) q -= column(lattice_, k) * Biquadratic(s[static_cast<std::size_t>(k)]);
  return {q, s};
}

std::vector<PackingModel::Near> PackingModel::near(int i, double max_sq) const {
  const double reach = std::sqrt(max_sq);
  std::array<int, 3> range{};
  for (int k = 0; k < 3; ++k) {
    // |fractional offset| <= reach * |row k of the inverse| + 1 from the cell.
    range[static_cast<std::size_t>(k)] = static_cast<int>(std::ceil(reach * inverse_d_.row(k).norm() + 1.0 + 1e-9));
  }
  const Eigen::Vector3d& ci = centres_d_[static_cast<std::size_t>(i)];
  const double bound = max_sq + 1e-6;
  std::vector<Near> out;
  for (int j = 0; j < size(); ++j) {
    for (int a = -range[0]; a <= range[0]; ++a) {
      for (int b = -range[1]; b <= range[1]; ++b) {
        for (int c = -range[2]; c <= range[2]; ++c) {
          if (j == i && a == 0 && b == 0 && c == 0) continue;
          const Eigen::Vector3d pd = centres_d_[static_cast<std::size_t>(j)] + lattice_d_ * Eigen::Vector3d(a, b, c);
          const double d = (pd - ci).squaredNorm();
          if (d <= bound) out.push_back({j, {a, b, c}, d});
        }
      }
    }
  }
  return out;
}

Biquadratic PackingModel::distance_sq(int i, const Near& n) const {
  return squared_distance(position(n.index, n.shift), sphere(i).centre);
}

int PackingModel::compare_distance_sq(int i, const Near& n, const Biquadratic& threshold) const {
  const double gap = n.approx_sq - threshold.to_double();
  if (gap > 1e-6) return 1;
  if (gap < -1e-6) return -1;
  return (distance_sq(i, n) - threshold).sign();
}

PackingModel build_close_packing(const StackingSequence& seq) {
  const auto n = static_cast<long>(seq.size());
  Mat3 lattice;
  lattice.col(0) = make_vec(2, 0, 0);
  lattice.col(1) = make_vec(1, Biquadratic::sqrt3(), 0);
  lattice.col(2) = make_vec(0, 0, layer_height() * Biquadratic(n));
  const Biquadratic third = Biquadratic(0, 0, Rational(1, 3), 0);
  std::vector<Sphere> motif;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const long offset = seq[k] - 'A';
    const Vec3 c = make_vec(Biquadratic(offset), third * Biquadratic(offset), layer_height() * Biquadratic(static_cast<long>(k)));
    motif.push_back({c, 1, 'L'});
  }
  PackingModel raw(lattice, {});
  std::vector<Sphere> reduced;
  for (const auto& s : motif) reduced.push_back({raw.reduce(s.centre).first, s.radius, s.kind});
  return PackingModel(lattice, std::move(reduced));
}

PackingModel fcc_cubic_cell(bool filled) {
  const Biquadratic s2 = Biquadratic::sqrt2();
  const Biquadratic side = s2 * Biquadratic(2);
  Mat3 lattice = Mat3::Zero();
  for (int k = 0; k < 3; ++k) lattice(k, k) = side;
  std::vector<Sphere> motif{{make_vec(0, 0, 0), 1, 'L'},
                            {make_vec(s2, s2, 0), 1, 'L'},
                            {make_vec(s2, 0, s2), 1, 'L'},
                            {make_vec(0, s2, s2), 1, 'L'}};
  if (filled) {
    for (const Vec3& c : {make_vec(s2, 0, 0), make_vec(0, s2, 0), make_vec(0, 0, s2), make_vec(s2, s2, s2)}) {
      motif.push_back({c, silver_radius(), 'S'});
    }
  }
  return PackingModel(lattice, std::move(motif));
}

PackingModel fill_octahedral_holes(const PackingModel& p) {
  if (p.count('S') != 0 || p.count('L') == 0) throw DegenerateInput("hole filling expects unit spheres only");
  for (int i = 0; i < p.size(); ++i) {
    if (p.sphere(i).radius != Biquadratic(1)) throw DegenerateInput("hole filling expects unit spheres only");
    int touching = 0;
    for (const auto& n : p.near(i, 4)) {
      const int c = p.compare_distance_sq(i, n, 4);
      if (c < 0) throw DegenerateInput("spheres overlap");
      if (c == 0) ++touching;
    }
    if (touching != 12) throw DegenerateInput("not a close packing: a sphere has " + std::to_string(touching) + " contacts");
  }
  // An octahedral hole is the midpoint of opposite vertices of a regular
  // octahedron of edge 2, i.e. of two centres 2√2 apart with six centres at √2.
  std::vector<Vec3> holes;
  for (int i = 0; i < p.size(); ++i) {
    for (const auto& n : p.near(i, 8)) {
      if (p.compare_distance_sq(i, n, 8) != 0) continue;
      const Vec3 mid = (p.sphere(i).centre + p.position(n.index, n.shift)) * Biquadratic(Rational(1, 2));
      const Vec3 hole = p.reduce(mid).first;
      if (std::any_of(holes.begin(), holes.end(), [&](const Vec3& h) { return h == hole; })) continue;
      PackingModel probe(p.lattice(), [&] {
        auto m = p.motif();
        m.push_back({hole, silver_radius(), 'S'});
        return m;
      }());
      int at_contact = 0;
      bool clear = true;
      const int h = probe.size() - 1;
      for (const auto& m : probe.near(h, 4)) {
        const int c = probe.compare_distance_sq(h, m, 2);
        if (c < 0) clear = false;
        if (c == 0) ++at_contact;
      }
      if (clear && at_contact == 6) holes.push_back(hole);
    }
  }
  if (static_cast<int>(holes.size()) != p.size()) {
    throw DegenerateInput("not a close packing: found " + std::to_string(holes.size()) + " octahedral holes for " +
                          std::to_string(p.size()) + " spheres");
  }
  std::sort(holes.begin(), holes.end(), [&](const Vec3& a, const Vec3& b) { return vec_less(a, b); });
  auto motif = p.motif();
  for (const auto& h : holes) motif.push_back({h, silver_radius(), 'S'});
  return PackingModel(p.lattice(), std::move(motif));
}

int ContactGraph::degree_to(int i, char kind) const {
  const auto& n = neighbours[static_cast<std::size_t>(i)];
  return static_cast<int>(
      std::count_if(n.begin(), n.end(), [&](const Contact& c) { return kinds[static_cast<std::size_t>(c.b)] == kind; }));
}

ContactGraph contact_graph(const PackingModel& p) {
  ContactGraph g;
  g.neighbours.resize(static_cast<std::size_t>(p.size()));
  for (const auto& s : p.motif()) g.kinds.push_back(s.kind);
  for (int i = 0; i < p.size(); ++i) {
    for (const auto& n : p.near(i, 16)) {
      const Biquadratic sum = p.sphere(i).radius + p.sphere(n.index).radius;
      const int cmp = p.compare_distance_sq(i, n, sum * sum);
      if (cmp < 0) throw DegenerateInput("spheres " + std::to_string(i) + " and " + std::to_string(n.index) + " overlap");
      if (cmp != 0) continue;
      const Contact c{i, n.index, n.shift};
      g.neighbours[static_cast<std::size_t>(i)].push_back(c);
      // Keep one of the two directed copies of each tangency.
      const bool forward = i < n.index || (i == n.index && n.shift > Shift{0, 0, 0});
      if (forward) g.contacts.push_back(c);
    }
  }
  return g;
}

}  // namespace compack
