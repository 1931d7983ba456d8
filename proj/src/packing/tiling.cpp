#include "compack/packing/tiling.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "compack/errors.hpp"

namespace compack {

namespace {

SiteRef shifted(const SiteRef& v, const Shift& by) {
  return {v.index, {v.shift[0] + by[0], v.shift[1] + by[1], v.shift[2] + by[2]}};
}

Shift negate(const Shift& s) { return {-s[0], -s[1], -s[2]}; }

std::array<SiteRef, 4> canonical(std::array<SiteRef, 4> v) {
  std::array<SiteRef, 4> best{};
  bool first = true;
  for (const auto& anchor : std::array<SiteRef, 4>(v)) {
    std::array<SiteRef, 4> w;
    for (std::size_t k = 0; k < 4; ++k) w[k] = shifted(v[k], negate(anchor.shift));
    std::sort(w.begin(), w.end());
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

template <class S>
using Pt = std::array<S, 3>;

int sign_of(const Rational& x) { return sgn(x); }
int sign_of(const Biquadratic& x) { return x.sign(); }

template <class S>
Pt<S> minus(const Pt<S>& a, const Pt<S>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class S>
S dot3(const Pt<S>& a, const Pt<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
Pt<S> cross3(const Pt<S>& a, const Pt<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class S>
S triple3(const Pt<S>& a, const Pt<S>& b, const Pt<S>& c) {
  return dot3(a, cross3(b, c));
}

// Coordinates in which the exact tests run: the field itself, or rationals
// after dividing each axis by its common unit 1, √2, √3 or √6.
struct Frame {
  std::optional<std::array<int, 3>> unit;
};

Frame rational_frame(const PackingModel& p) {
  std::array<int, 3> unit{-1, -1, -1};
  const auto absorb = [&](int axis, const Biquadratic& x) {
    int used = -1;
    for (int b = 0; b < 4; ++b) {
      if (sgn(x[b]) == 0) continue;
      if (used >= 0) return false;
      used = b;
    }
    if (used < 0) return true;
    int& u = unit[static_cast<std::size_t>(axis)];
    if (u >= 0 && u != used) return false;
    u = used;
    return true;
  };
  for (int axis = 0; axis < 3; ++axis) {
    for (int c = 0; c < 3; ++c) {
      if (!absorb(axis, p.lattice()(axis, c))) return {};
    }
    for (const auto& s : p.motif()) {
      if (!absorb(axis, s.centre(axis))) return {};
    }
  }
  for (int& u : unit) u = std::max(u, 0);
  return {unit};
}

template <class S>
Pt<S> convert(const Vec3& v, const Frame& frame);

template <>
Pt<Rational> convert<Rational>(const Vec3& v, const Frame& frame) {
  const auto& u = *frame.unit;
  return {v(0)[u[0]], v(1)[u[1]], v(2)[u[2]]};
}

template <>
Pt<Biquadratic> convert<Biquadratic>(const Vec3& v, const Frame&) {
  return {v(0), v(1), v(2)};
}

struct Rough {
  std::array<SiteRef, 4> ids;
  std::array<Eigen::Vector3d, 4> pts;
  std::array<Eigen::Vector3d, 4> normal;  // outward normal of the face opposite vertex k
  std::array<double, 4> offset;
  Eigen::Vector3d lo, hi;
};

Rough make_rough(const PackingModel& p, const std::array<SiteRef, 4>& ids) {
  Rough r;
  r.ids = ids;
  for (std::size_t k = 0; k < 4; ++k) r.pts[k] = to_double(p.position(ids[k].index, ids[k].shift));
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& a = r.pts[(k + 1) % 4];
    Eigen::Vector3d n = (r.pts[(k + 2) % 4] - a).cross(r.pts[(k + 3) % 4] - a);
    if (n.dot(r.pts[k] - a) > 0) n = -n;
    r.normal[k] = n;
    r.offset[k] = n.dot(a);
  }
  r.lo = r.hi = r.pts[0];
  for (const auto& q : r.pts) {
    r.lo = r.lo.cwiseMin(q);
    r.hi = r.hi.cwiseMax(q);
  }
  return r;
}

// Some face plane of one solid has the other, moved by `off`, strictly
// beyond it by a margin far above floating-point error.
bool clearly_apart(const Rough& a, const Rough& b, const Eigen::Vector3d& off) {
  for (int pass = 0; pass < 2; ++pass) {
    const Rough& s = pass == 0 ? a : b;
    const Rough& t = pass == 0 ? b : a;
    const Eigen::Vector3d move = pass == 0 ? off : Eigen::Vector3d(-off);
    for (std::size_t k = 0; k < 4; ++k) {
      const double tol = 1e-6 * (1.0 + s.normal[k].norm());
      bool beyond = true;
      for (const auto& q : t.pts) beyond = beyond && s.normal[k].dot(q + move) > s.offset[k] + tol;
      if (beyond) return true;
    }
  }
  return false;
}

template <class S>
struct Solid {
  std::array<SiteRef, 4> ids;
  std::array<Pt<S>, 4> pts;
  std::array<Pt<S>, 4> normal;
  std::array<S, 4> offset;
};

template <class S>
Solid<S> make_solid(const PackingModel& p, const std::array<SiteRef, 4>& ids, const Frame& frame) {
  Solid<S> s;
  s.ids = ids;
  for (std::size_t k = 0; k < 4; ++k) s.pts[k] = convert<S>(p.position(ids[k].index, ids[k].shift), frame);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& a = s.pts[(k + 1) % 4];
    Pt<S> n = cross3(minus(s.pts[(k + 2) % 4], a), minus(s.pts[(k + 3) % 4], a));
    if (sign_of(dot3(n, minus(s.pts[k], a))) > 0) n = {-n[0], -n[1], -n[2]};
    s.normal[k] = n;
    s.offset[k] = dot3(n, a);
  }
  return s;
}

template <class S>
bool inside(const Solid<S>& s, const Pt<S>& x) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (sign_of(dot3(s.normal[k], x) - s.offset[k]) > 0) return false;
  }
  return true;
}

// Exact test that a and b meet in the hull of their shared vertices: every
// vertex of the intersection polytope (a vertex of one solid inside the
// other, or an edge of one crossing a face of the other) must be a convex
// combination of the shared vertices.
template <class S>
bool meet_properly(const Solid<S>& a, const Solid<S>& b) {
  std::array<bool, 4> shared{};
  for (std::size_t i = 0; i < 4; ++i) shared[i] = std::find(b.ids.begin(), b.ids.end(), a.ids[i]) != b.ids.end();
  const Pt<S> e1 = minus(a.pts[1], a.pts[0]), e2 = minus(a.pts[2], a.pts[0]), e3 = minus(a.pts[3], a.pts[0]);
  const S det = triple3(e1, e2, e3);
  const auto in_shared_hull = [&](const Pt<S>& x) {
    const Pt<S> d = minus(x, a.pts[0]);
    // Barycentric coordinates of x in a, scaled by det.
    const S l1 = triple3(d, e2, e3), l2 = triple3(e1, d, e3), l3 = triple3(e1, e2, d);
    const std::array<S, 4> lambda{det - l1 - l2 - l3, l1, l2, l3};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!shared[k] && sign_of(lambda[k]) != 0) return false;
    }
    return true;
  };
  for (int pass = 0; pass < 2; ++pass) {
    const Solid<S>& s = pass == 0 ? a : b;
    const Solid<S>& t = pass == 0 ? b : a;
    for (const auto& v : s.pts) {
      if (inside(t, v) && !in_shared_hull(v)) return false;
    }
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        const Pt<S> dir = minus(s.pts[j], s.pts[i]);
        for (std::size_t f = 0; f < 4; ++f) {
          const S denom = dot3(t.normal[f], dir);
          const int sd = sign_of(denom);
          if (sd == 0) continue;
          const S num = t.offset[f] - dot3(t.normal[f], s.pts[i]);
          // The crossing parameter num / denom must lie in [0, 1].
          if (sign_of(num) * sd < 0 || sign_of(denom - num) * sd < 0) continue;
          const S u = num / denom;
          const Pt<S> x{s.pts[i][0] + dir[0] * u, s.pts[i][1] + dir[1] * u, s.pts[i][2] + dir[2] * u};
          if (inside(t, x) && !in_shared_hull(x)) return false;
        }
      }
    }
  }
  return true;
}

template <class S>
std::string first_improper_pair(const PackingModel& p, const std::vector<Tetrahedron>& tets, const Frame& frame,
                                long& exact_tests) {
  std::vector<Rough> rough;
  std::vector<Solid<S>> solids;
  for (const auto& t : tets) {
    rough.push_back(make_rough(p, t.vertices));
    solids.push_back(make_solid<S>(p, t.vertices, frame));
  }
  Eigen::Matrix3d lattice;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) lattice(r, c) = p.lattice()(r, c).to_double();
  }
  const Eigen::Matrix3d inverse = lattice.inverse();
  // Solids span at most 4, so translates further than 8 apart cannot touch.
  std::array<int, 3> range{};
  for (int k = 0; k < 3; ++k) range[static_cast<std::size_t>(k)] = static_cast<int>(std::ceil(8.0 * inverse.row(k).norm())) + 1;
  for (std::size_t i = 0; i < solids.size(); ++i) {
    for (std::size_t j = i; j < solids.size(); ++j) {
      for (int a = -range[0]; a <= range[0]; ++a) {
        for (int b = -range[1]; b <= range[1]; ++b) {
          for (int c = -range[2]; c <= range[2]; ++c) {
            const Shift s{a, b, c};
            if (j == i && s <= Shift{0, 0, 0}) continue;
            const Eigen::Vector3d off = lattice * Eigen::Vector3d(a, b, c);
            if (((rough[j].lo + off).array() > rough[i].hi.array() + 1e-6).any() ||
                ((rough[j].hi + off).array() < rough[i].lo.array() - 1e-6).any()) {
              continue;
            }
            if (clearly_apart(rough[i], rough[j], off)) continue;
            std::array<SiteRef, 4> ids;
            for (std::size_t k = 0; k < 4; ++k) ids[k] = shifted(rough[j].ids[k], s);
            ++exact_tests;
            if (!meet_properly(solids[i], make_solid<S>(p, ids, frame))) {
              return "contact tetrahedra " + std::to_string(i) + " and " + std::to_string(j) + " (shifted by " +
                     std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                     ") overlap or meet improperly";
            }
          }
        }
      }
    }
  }
  return {};
}

}  // namespace

std::vector<Tetrahedron> contact_tetrahedra(const PackingModel& p, const ContactGraph& g) {
  std::vector<std::set<SiteRef>> touching(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    for (const auto& c : g.neighbours[static_cast<std::size_t>(i)]) touching[static_cast<std::size_t>(i)].insert({c.b, c.shift});
  }
  const auto tangent = [&](const SiteRef& x, const SiteRef& y) {
    const Shift rel{y.shift[0] - x.shift[0], y.shift[1] - x.shift[1], y.shift[2] - x.shift[2]};
    return touching[static_cast<std::size_t>(x.index)].count({y.index, rel}) > 0;
  };
  std::set<std::array<SiteRef, 4>> found;
  for (int i = 0; i < p.size(); ++i) {
    const std::vector<SiteRef> nb(touching[static_cast<std::size_t>(i)].begin(), touching[static_cast<std::size_t>(i)].end());
    for (std::size_t x = 0; x < nb.size(); ++x) {
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        if (!tangent(nb[x], nb[y])) continue;
        for (std::size_t z = y + 1; z < nb.size(); ++z) {
          if (tangent(nb[x], nb[z]) && tangent(nb[y], nb[z])) {
            found.insert(canonical({SiteRef{i, {0, 0, 0}}, nb[x], nb[y], nb[z]}));
          }
        }
      }
    }
  }
  std::vector<Tetrahedron> out;
  for (const auto& ids : found) {
    Tetrahedron t{ids, "", 0};
    Mat3 edges;
    const Vec3 origin = p.position(ids[0].index, ids[0].shift);
    for (int k = 0; k < 3; ++k) {
      const auto& v = ids[static_cast<std::size_t>(k + 1)];
      edges.col(k) = p.position(v.index, v.shift) - origin;
    }
    const Biquadratic det = edges.determinant();
    t.volume = (det.sign() < 0 ? -det : det) / Biquadratic(6);
    for (const auto& v : ids) t.kinds += p.sphere(v.index).kind;
    std::sort(t.kinds.begin(), t.kinds.end(), std::greater<>());
    out.push_back(std::move(t));
  }
  return out;
}

bool meet_face_to_face(const std::array<Vec3, 4>& a, const std::array<Vec3, 4>& b) {
  const auto solid = [](const std::array<Vec3, 4>& pts, const std::array<SiteRef, 4>& ids) {
    Solid<Biquadratic> s;
    s.ids = ids;
    for (std::size_t k = 0; k < 4; ++k) s.pts[k] = {pts[k](0), pts[k](1), pts[k](2)};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& o = s.pts[(k + 1) % 4];
      auto n = cross3(minus(s.pts[(k + 2) % 4], o), minus(s.pts[(k + 3) % 4], o));
      const int side = sign_of(dot3(n, minus(s.pts[k], o)));
      if (side == 0) throw DegenerateInput("flat tetrahedron");
      if (side > 0) n = {-n[0], -n[1], -n[2]};
      s.normal[k] = n;
      s.offset[k] = dot3(n, o);
    }
    return s;
  };
  std::array<SiteRef, 4> ia{}, ib{};
  for (int k = 0; k < 4; ++k) {
    ia[static_cast<std::size_t>(k)] = {k, {0, 0, 0}};
    ib[static_cast<std::size_t>(k)] = {4 + k, {0, 0, 0}};
    for (int m = 0; m < 4; ++m) {
      if (b[static_cast<std::size_t>(k)] == a[static_cast<std::size_t>(m)]) ib[static_cast<std::size_t>(k)] = {m, {0, 0, 0}};
    }
  }
  return meet_properly(solid(a, ia), solid(b, ib));
}

CompactVerdict verify_compact(const PackingModel& p) {
  CompactVerdict v;
  const ContactGraph g = contact_graph(p);
  v.tetrahedra = contact_tetrahedra(p, g);
  v.cell_volume = p.cell_volume();
  for (const auto& t : v.tetrahedra) {
    ++v.census[t.kinds];
    v.tetra_volume += t.volume;
  }
  v.uncovered_volume = v.cell_volume - v.tetra_volume;

  const Frame frame = rational_frame(p);
  const std::string failure = frame.unit ? first_improper_pair<Rational>(p, v.tetrahedra, frame, v.exact_pair_tests)
                                         : first_improper_pair<Biquadratic>(p, v.tetrahedra, frame, v.exact_pair_tests);
  if (!failure.empty()) {
    v.reason = failure;
  } else if (!v.uncovered_volume.is_zero()) {
    v.reason = "tetrahedra leave volume " + v.uncovered_volume.to_string() + " of " + v.cell_volume.to_string() +
               " per cell uncovered";
  }
  v.compact = v.reason.empty();
  return v;
}

}  // namespace compack
