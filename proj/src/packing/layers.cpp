#include "compack/packing/layers.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <set>

#include "compack/errors.hpp"
#include "compack/exactalg/polynomial.hpp"

namespace compack {

namespace {

struct Neighbourhood {
  std::vector<Vec3> large, small;
};

Neighbourhood neighbourhood(const PackingModel& p, const ContactGraph& g, int i) {
  Neighbourhood n;
  const Vec3& c = p.sphere(i).centre;
  for (const auto& e : g.neighbours[static_cast<std::size_t>(i)]) {
    const Vec3 d = p.position(e.b, e.shift) - c;
    (p.sphere(e.b).kind == 'L' ? n.large : n.small).push_back(d);
  }
  return n;
}

bool contains(const std::vector<Vec3>& pts, const Vec3& x) {
  return std::any_of(pts.begin(), pts.end(), [&](const Vec3& q) { return q == x; });
}

bool congruent(const EmbeddedShell& ref, const Neighbourhood& n) {
  std::vector<Vec3> ref_large, ref_small;
  for (int v = 0; v < ref.complex.vertex_count(); ++v) {
    (ref.complex.labels()[static_cast<std::size_t>(v)] == 'L' ? ref_large : ref_small)
        .push_back(ref.coordinates[static_cast<std::size_t>(v)]);
  }
  if (ref_large.size() != n.large.size() || ref_small.size() != n.small.size()) return false;
  // A triangle of touching large neighbours in the reference.
  std::array<int, 3> tri{-1, -1, -1};
  for (const auto& f : ref.complex.faces()) {
    if (std::all_of(f.begin(), f.end(), [&](int v) { return ref.complex.labels()[static_cast<std::size_t>(v)] == 'L'; })) {
      tri = f;
      break;
    }
  }
  if (tri[0] < 0) return false;
  Mat3 basis;
  for (int k = 0; k < 3; ++k) basis.col(k) = ref.coordinates[static_cast<std::size_t>(tri[static_cast<std::size_t>(k)])];
  const Mat3 inverse = basis.inverse();
  const Biquadratic edge(4);
  const auto& L = n.large;
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = 0; b < L.size(); ++b) {
      if (b == a || squared_distance(L[a], L[b]) != edge) continue;
      for (std::size_t c = 0; c < L.size(); ++c) {
        if (c == a || c == b || squared_distance(L[a], L[c]) != edge || squared_distance(L[b], L[c]) != edge) continue;
        Mat3 image;
        image.col(0) = L[a];
        image.col(1) = L[b];
        image.col(2) = L[c];
        const Mat3 m = image * inverse;
        if (m.transpose() * m != Mat3::Identity()) continue;
        const bool all = std::all_of(ref_large.begin(), ref_large.end(), [&](const Vec3& x) { return contains(L, m * x); }) &&
                         std::all_of(ref_small.begin(), ref_small.end(), [&](const Vec3& x) { return contains(n.small, m * x); });
        if (all) return true;
      }
    }
  }
  return false;
}

// Normals of the planes through the origin holding six of the large
// neighbours, scaled so the first nonzero coordinate is 1.
std::vector<Vec3> ring_normals(const std::vector<Vec3>& large) {
  std::vector<Vec3> out;
  for (std::size_t a = 0; a < large.size(); ++a) {
    for (std::size_t b = a + 1; b < large.size(); ++b) {
      Vec3 n = cross(large[a], large[b]);
      int lead = 0;
      while (lead < 3 && n(lead).is_zero()) ++lead;
      if (lead == 3) continue;
      n = n * n(lead).inverse();
      if (contains(out, n)) continue;
      const auto on_plane = std::count_if(large.begin(), large.end(), [&](const Vec3& x) { return dot(n, x).is_zero(); });
      if (on_plane == 6) out.push_back(n);
    }
  }
  std::sort(out.begin(), out.end(), [](const Vec3& x, const Vec3& y) { return vec_less(x, y); });
  return out;
}

Rational rational_part(const Biquadratic& x, const char* what) {
  if (!x.is_rational()) throw Error(std::string("layer structure not found: ") + what + " is irrational");
  return x[0];
}

Rational fraction(const Rational& q) { return q - Rational(floor_of(q)); }

}  // namespace

const std::vector<EmbeddedShell>& reference_shells() {
  static const std::vector<EmbeddedShell> shells = [] {
    const std::set<NecklaceWord> large{NecklaceWord::parse("LLLSLS"), NecklaceWord::parse("LLSLLS")};
    const std::set<NecklaceWord> small{NecklaceWord::parse("LLLL")};
    const auto r = AlgebraicReal::near(make_poly({-1, 2, 1}), Rational(414, 1000), Rational(1, 100));
    std::vector<EmbeddedShell> out;
    for (const auto& s : complete_shells(large, small, 12)) out.push_back(embed_shell(s, r));
    return out;
  }();
  return shells;
}

std::map<int, ShapeClass> classify_shells(const PackingModel& p) {
  const ContactGraph g = contact_graph(p);
  std::map<int, ShapeClass> out;
  for (int i = 0; i < p.size(); ++i) {
    if (p.sphere(i).kind != 'L') continue;
    const Neighbourhood n = neighbourhood(p, g, i);
    bool matched = false;
    for (const auto& ref : reference_shells()) {
      if (congruent(ref, n)) {
        out[i] = ref.shape;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error("sphere " + std::to_string(i) + " with " + std::to_string(n.large.size()) + " large and " +
                  std::to_string(n.small.size()) + " small neighbours matches no shell");
    }
  }
  return out;
}

StackingSequence recover_stacking(const PackingModel& p) {
  const ContactGraph g = contact_graph(p);
  std::vector<int> large;
  for (int i = 0; i < p.size(); ++i) {
    if (p.sphere(i).kind == 'L') large.push_back(i);
  }
  if (large.empty()) throw Error("layer structure not found: no large spheres");
  std::map<int, std::vector<Vec3>> normals;
  for (int i : large) normals[i] = ring_normals(neighbourhood(p, g, i).large);

  // A ring direction shared by every large sphere.
  std::optional<Vec3> axis;
  for (const auto& n : normals[large.front()]) {
    if (std::all_of(large.begin(), large.end(), [&](int i) { return contains(normals[i], n); })) {
      axis = n;
      break;
    }
  }
  if (!axis) throw Error("layer structure not found: no common ring of six coplanar spheres");
  const Vec3 n = *axis;

  // In-plane lattice of the first layer: two ring neighbours at 60 degrees.
  const int start = large.front();
  std::vector<Vec3> ring;
  for (const auto& v : neighbourhood(p, g, start).large) {
    if (dot(n, v).is_zero()) ring.push_back(v);
  }
  std::sort(ring.begin(), ring.end(), [](const Vec3& x, const Vec3& y) { return vec_less(x, y); });
  const Vec3 u = ring.front();
  std::optional<Vec3> v;
  for (const auto& w : ring) {
    if (squared_distance(u, w) == Biquadratic(4)) {
      v = w;
      break;
    }
  }
  if (!v) throw Error("layer structure not found: ring is not triangular");
  const Biquadratic uu = dot(u, u), uv = dot(u, *v), vv = dot(*v, *v);
  const Biquadratic gram = uu * vv - uv * uv;

  // Layer step: the height of a touching large sphere above the ring plane.
  std::optional<Biquadratic> step;
  for (const auto& w : neighbourhood(p, g, start).large) {
    const Biquadratic h = dot(n, w);
    if (h.sign() > 0 && (!step || h > *step)) step = h;
  }
  if (!step) throw Error("layer structure not found: nothing above the first layer");
  for (int i : large) {
    const Biquadratic lift = dot(n, p.sphere(i).centre - p.sphere(start).centre) / *step;
    if (rational_part(lift, "a layer height").get_den() != 1) throw Error("layer structure not found: sphere between layers");
  }

  const std::size_t walk = 6 * large.size() + 2;
  std::string letters;
  int index = start;
  Shift shift{0, 0, 0};
  const Vec3 origin = p.sphere(start).centre;
  for (std::size_t k = 0; k < walk; ++k) {
    const Vec3 here = p.position(index, shift);
    const Vec3 offset = here - origin;
    const Biquadratic a = (dot(offset, u) * vv - dot(offset, *v) * uv) / gram;
    const Biquadratic b = (dot(offset, *v) * uu - dot(offset, u) * uv) / gram;
    const Rational fa = fraction(rational_part(a, "an in-plane offset"));
    const Rational fb = fraction(rational_part(b, "an in-plane offset"));
    const Rational third = 3 * fa;
    if (fa != fb || third.get_den() != 1) throw Error("layer structure not found: offset is not a layer position");
    letters += static_cast<char>('A' + third.get_num().get_si());

    std::optional<Contact> up;
    for (const auto& e : g.neighbours[static_cast<std::size_t>(index)]) {
      if (p.sphere(e.b).kind != 'L') continue;
      const Vec3 d = p.position(e.b, e.shift) - p.sphere(index).centre;
      if (dot(n, d) == *step) {
        up = e;
        break;
      }
    }
    if (!up) throw Error("layer structure not found: a layer has nothing above it");
    index = up->b;
    for (std::size_t c = 0; c < 3; ++c) shift[c] += up->shift[c];
  }

  for (std::size_t period = 1; period <= letters.size() / 2; ++period) {
    bool repeats = true;
    for (std::size_t k = period; k < letters.size() && repeats; ++k) repeats = letters[k] == letters[k - period];
    if (repeats) {
      const std::string word = letters.substr(0, period);
      if (!StackingSequence::is_valid(word)) throw Error("layer structure not found: two equal layers in a row");
      return StackingSequence::parse(word);
    }
  }
  throw Error("layer structure not found: no period within the walk");
}

}  // namespace compack
