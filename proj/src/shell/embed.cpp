#include "compack/shell/embed.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace compack {

namespace {

Biquadratic centre_distance_sq(const EmbeddedShell& e, int v) {
  const Biquadratic d = Biquadratic(1) + e.radius(v);
  return d * d;
}

Biquadratic contact_sq(const EmbeddedShell& e, int a, int b) {
  const Biquadratic d = e.radius(a) + e.radius(b);
  return d * d;
}

// The point W with |W|^2 = rw, |W - P|^2 = dp, |W - Q|^2 = dq and
// det(P, Q, W) > 0.
std::optional<Vec3> fold(const Vec3& p, const Vec3& q, const Biquadratic& rw, const Biquadratic& dp,
                         const Biquadratic& dq) {
  const Biquadratic pp = squared_norm(p), qq = squared_norm(q), pq = dot(p, q);
  const Biquadratic sp = (pp + rw - dp) / Biquadratic(2);
  const Biquadratic sq = (qq + rw - dq) / Biquadratic(2);
  const Biquadratic gram = pp * qq - pq * pq;
  if (gram.sign() <= 0) return std::nullopt;
  const Biquadratic alpha = (sp * qq - sq * pq) / gram;
  const Biquadratic beta = (sq * pp - sp * pq) / gram;
  const Vec3 base = p * alpha + q * beta;
  const Biquadratic height_sq = (rw - squared_norm(base)) / gram;
  if (height_sq.sign() <= 0) return std::nullopt;
  const auto gamma = height_sq.sqrt();
  if (!gamma) return std::nullopt;
  return Vec3(base + cross(p, q) * *gamma);
}

std::vector<int> path_to_root(const std::vector<int>& parent, int v) {
  std::vector<int> out{v};
  while (parent[static_cast<std::size_t>(v)] >= 0) {
    v = parent[static_cast<std::size_t>(v)];
    out.push_back(v);
  }
  return out;
}

// Cycle formed by the placement tree paths of a and b plus the edge b-a.
std::vector<int> tree_cycle(const std::vector<int>& parent, int a, int b) {
  auto pa = path_to_root(parent, a);
  auto pb = path_to_root(parent, b);
  while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
    pa.pop_back();
    pb.pop_back();
  }
  pb.pop_back();
  std::vector<int> cycle = pa;
  cycle.insert(cycle.end(), pb.rbegin(), pb.rend());
  return cycle;
}

std::vector<Biquadratic> distance_profile(const std::vector<Vec3>& pts) {
  std::vector<Biquadratic> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(squared_distance(pts[i], pts[j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(ShapeClass c) {
  return c == ShapeClass::Cuboctahedron ? "cuboctahedron" : "triangular_orthobicupola";
}

Biquadratic EmbeddedShell::radius(int v) const {
  return complex.labels()[static_cast<std::size_t>(v)] == 'L' ? Biquadratic(1) : small_radius;
}

std::vector<Vec3> reference_large_centers(ShapeClass c) {
  const Biquadratic s2 = Biquadratic::sqrt2(), s3 = Biquadratic::sqrt3();
  std::vector<Vec3> out;
  if (c == ShapeClass::Cuboctahedron) {
    for (int axis = 0; axis < 3; ++axis) {
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          std::array<Biquadratic, 3> v{0, 0, 0};
          v[static_cast<std::size_t>((axis + 1) % 3)] = s2 * Biquadratic(sa);
          v[static_cast<std::size_t>((axis + 2) % 3)] = s2 * Biquadratic(sb);
          out.push_back(make_vec(v[0], v[1], v[2]));
        }
      }
    }
    return out;
  }
  for (int sx : {1, -1}) out.push_back(make_vec(Biquadratic(2 * sx), 0, 0));
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) out.push_back(make_vec(Biquadratic(sx), s3 * Biquadratic(sy), 0));
  }
  const Biquadratic z = Biquadratic(0, 0, 0, Rational(2, 3));
  const Biquadratic third = Biquadratic(0, 0, Rational(1, 3), 0);
  for (int sz : {1, -1}) {
    out.push_back(make_vec(1, third, z * Biquadratic(sz)));
    out.push_back(make_vec(-1, third, z * Biquadratic(sz)));
    out.push_back(make_vec(0, third * Biquadratic(-2), z * Biquadratic(sz)));
  }
  return out;
}

std::optional<ShapeClass> classify_large_centers(const std::vector<Vec3>& large) {
  const auto profile = distance_profile(large);
  for (ShapeClass c : {ShapeClass::Cuboctahedron, ShapeClass::TriangularOrthobicupola}) {
    if (profile == distance_profile(reference_large_centers(c))) return c;
  }
  return std::nullopt;
}

EmbeddedShell embed_shell(const ShellComplex& s, const AlgebraicReal& r) {
  if (!s.is_complete()) throw DegenerateInput("only complete shells can be embedded");
  const auto small = to_biquadratic(r);
  if (!small || small->sign() <= 0) throw DegenerateInput("small radius " + r.to_string() + " is not in Q(√2, √3)");

  EmbeddedShell e{s, *small, {}, ShapeClass::Cuboctahedron};
  const int n = s.vertex_count();
  const auto& faces = s.faces();
  std::map<std::pair<int, int>, std::size_t> face_of_dart;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      face_of_dart[{faces[f][static_cast<std::size_t>(k)], faces[f][static_cast<std::size_t>((k + 1) % 3)]}] = f;
    }
  }

  // Seed: a face through a small vertex if there is one, small vertex first.
  std::size_t seed = 0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (std::any_of(faces[f].begin(), faces[f].end(), [&](int v) { return s.labels()[static_cast<std::size_t>(v)] == 'S'; })) {
      seed = f;
      break;
    }
  }
  ShellComplex::Face first = faces[seed];
  while (s.labels()[static_cast<std::size_t>(first[0])] != 'S' &&
         std::any_of(first.begin(), first.end(), [&](int v) { return s.labels()[static_cast<std::size_t>(v)] == 'S'; })) {
    std::rotate(first.begin(), first.begin() + 1, first.end());
  }

  std::vector<std::optional<Vec3>> pos(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  const auto [a, b, c] = first;
  const Biquadratic ra = centre_distance_sq(e, a), rb = centre_distance_sq(e, b);
  const auto xa = ra.sqrt();
  const Biquadratic xb = xa ? (ra + rb - contact_sq(e, a, b)) / (Biquadratic(2) * *xa) : Biquadratic(0);
  const auto yb = xa ? (rb - xb * xb).sqrt() : std::nullopt;
  if (!xa || !yb || yb->is_zero()) throw DegenerateInput("first face cannot be placed in Q(√2, √3)");
  pos[static_cast<std::size_t>(a)] = make_vec(*xa, 0, 0);
  pos[static_cast<std::size_t>(b)] = make_vec(xb, *yb, 0);
  parent[static_cast<std::size_t>(b)] = a;
  const auto pc = fold(*pos[static_cast<std::size_t>(a)], *pos[static_cast<std::size_t>(b)], centre_distance_sq(e, c),
                       contact_sq(e, a, c), contact_sq(e, b, c));
  if (!pc) throw DegenerateInput("first face cannot be placed in Q(√2, √3)");
  pos[static_cast<std::size_t>(c)] = *pc;
  parent[static_cast<std::size_t>(c)] = b;

  std::vector<bool> done(faces.size(), false);
  std::queue<std::size_t> queue;
  done[seed] = true;
  queue.push(seed);
  while (!queue.empty()) {
    const auto f = faces[queue.front()];
    queue.pop();
    for (int k = 0; k < 3; ++k) {
      const int x = f[static_cast<std::size_t>(k)], y = f[static_cast<std::size_t>((k + 1) % 3)];
      const std::size_t g = face_of_dart.at({y, x});
      if (done[g]) continue;
      done[g] = true;
      queue.push(g);
      int w = -1;
      for (int v : faces[g]) {
        if (v != x && v != y) w = v;
      }
      const auto folded = fold(*pos[static_cast<std::size_t>(y)], *pos[static_cast<std::size_t>(x)],
                               centre_distance_sq(e, w), contact_sq(e, y, w), contact_sq(e, x, w));
      if (!folded) {
        throw DegenerateInput("vertex " + std::to_string(w) + " cannot be folded into Q(√2, √3)");
      }
      auto& slot = pos[static_cast<std::size_t>(w)];
      if (!slot) {
        slot = *folded;
        parent[static_cast<std::size_t>(w)] = x;
      } else if (*slot != *folded) {
        throw ShellClosureError("folds around a cycle place vertex " + std::to_string(w) + " twice",
                                tree_cycle(parent, w, x));
      }
    }
  }
  for (const auto& p : pos) e.coordinates.push_back(*p);

  const auto violations = embedding_violations(e);
  if (!violations.empty()) throw Error("shell embedding fails: " + violations.front());
  std::vector<Vec3> large;
  for (int v = 0; v < n; ++v) {
    if (s.labels()[static_cast<std::size_t>(v)] == 'L') large.push_back(e.coordinates[static_cast<std::size_t>(v)]);
  }
  const auto shape = classify_large_centers(large);
  if (!shape) throw Error("embedded shell matches no known shape");
  e.shape = *shape;
  return e;
}

std::vector<std::string> embedding_violations(const EmbeddedShell& e) {
  std::vector<std::string> out;
  const int n = e.complex.vertex_count();
  if (static_cast<int>(e.coordinates.size()) != n) return {"coordinate count differs from vertex count"};
  const auto& c = e.coordinates;
  for (int v = 0; v < n; ++v) {
    if (squared_norm(c[static_cast<std::size_t>(v)]) != centre_distance_sq(e, v)) {
      out.push_back("vertex " + std::to_string(v) + " does not touch the central sphere");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Biquadratic d = squared_distance(c[static_cast<std::size_t>(a)], c[static_cast<std::size_t>(b)]);
      const Biquadratic t = contact_sq(e, a, b);
      const std::string pair = std::to_string(a) + "-" + std::to_string(b);
      if (e.complex.adjacent(a, b)) {
        if (d != t) out.push_back("adjacent pair " + pair + " is not tangent");
      } else if (d < t) {
        out.push_back("pair " + pair + " overlaps");
      }
    }
  }
  for (const auto& f : e.complex.faces()) {
    if (triple_product(c[static_cast<std::size_t>(f[0])], c[static_cast<std::size_t>(f[1])],
                       c[static_cast<std::size_t>(f[2])]).sign() <= 0) {
      out.push_back("face " + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) +
                    " is inverted");
    }
  }
  return out;
}

std::vector<SixRing> shell_ring_property(const EmbeddedShell& e) {
  const auto& labels = e.complex.labels();
  const auto& c = e.coordinates;
  std::vector<int> large;
  for (int v = 0; v < e.complex.vertex_count(); ++v) {
    if (labels[static_cast<std::size_t>(v)] == 'L') large.push_back(v);
  }
  std::set<std::vector<int>> seen;
  std::vector<SixRing> rings;
  for (std::size_t i = 0; i < large.size(); ++i) {
    for (std::size_t j = i + 1; j < large.size(); ++j) {
      const Vec3 normal = cross(c[static_cast<std::size_t>(large[i])], c[static_cast<std::size_t>(large[j])]);
      if (squared_norm(normal).is_zero()) continue;
      std::vector<int> members;
      for (int v : large) {
        if (dot(normal, c[static_cast<std::size_t>(v)]).is_zero()) members.push_back(v);
      }
      if (members.size() != 6 || !seen.insert(members).second) continue;
      std::map<int, std::vector<int>> nbrs;
      for (int u : members) {
        for (int v : members) {
          if (u != v && e.complex.adjacent(u, v)) nbrs[u].push_back(v);
        }
      }
      if (!std::all_of(members.begin(), members.end(), [&](int u) { return nbrs[u].size() == 2; })) continue;
      SixRing ring{{}, normal};
      int prev = -1, cur = members.front();
      for (std::size_t k = 0; k < 6; ++k) {
        ring.vertices[k] = cur;
        const auto& nb = nbrs[cur];
        const int next = (prev < 0) ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
        prev = cur;
        cur = next;
      }
      if (cur != ring.vertices[0]) continue;  // two triangles, not a hexagon
      rings.push_back(ring);
    }
  }
  std::sort(rings.begin(), rings.end(), [](const SixRing& x, const SixRing& y) { return x.vertices < y.vertices; });
  return rings;
}

std::vector<int> rings_through_vertices(const EmbeddedShell& e) {
  std::vector<int> out(static_cast<std::size_t>(e.complex.vertex_count()), 0);
  for (const auto& ring : shell_ring_property(e)) {
    for (int v : ring.vertices) ++out[static_cast<std::size_t>(v)];
  }
  return out;
}

std::string to_off(const EmbeddedShell& e) {
  std::ostringstream os;
  os << "OFF\n";
  os << "# shape " << to_string(e.shape) << ", small radius " << e.small_radius.to_string() << "\n";
  for (int v = 0; v < e.complex.vertex_count(); ++v) {
    os << "# vertex " << v << " " << e.complex.labels()[static_cast<std::size_t>(v)] << " "
       << to_string(e.coordinates[static_cast<std::size_t>(v)]) << "\n";
  }
  os << e.complex.vertex_count() << " " << e.complex.faces().size() << " 0\n";
  os << std::setprecision(17);
  for (const auto& p : e.coordinates) {
    const auto d = to_double(p);
    os << d.x() << " " << d.y() << " " << d.z() << "\n";
  }
  for (const auto& f : e.complex.faces()) os << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
  return os.str();
}

}  // namespace compack
