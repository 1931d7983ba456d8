#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "compack/packing/layers.hpp"
#include "compack/packing/metrics.hpp"
#include "compack/packing/tiling.hpp"

using namespace compack;

namespace {

const double kLayer = 2.0 * std::sqrt(6.0) / 3.0;

PackingModel filled(const std::string& w) { return fill_octahedral_holes(build_close_packing(StackingSequence::parse(w))); }

// Stacking class key computed from layer types alone: the primitive root of
// the cyclic h/c word, minimized over rotations and reversals.
std::string hc_key(const std::string& letters) {
  const std::size_t n = letters.size();
  std::string hc;
  for (std::size_t k = 0; k < n; ++k) hc += letters[(k + n - 1) % n] == letters[(k + 1) % n] ? 'h' : 'c';
  std::size_t period = n;
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = hc[k] == hc[(k + p) % n];
    if (ok) {
      period = p;
      break;
    }
  }
  const std::string root = hc.substr(0, period);
  std::string best;
  for (const std::string& s : {root, std::string(root.rbegin(), root.rend())}) {
    for (std::size_t k = 0; k < period; ++k) {
      const std::string rot = s.substr(k) + s.substr(0, k);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

int layer_of(const PackingModel& p, int i) {
  return static_cast<int>(std::lround(p.sphere(i).centre(2).to_double() / kLayer));
}

Vec3 v(int x, int y, int z) { return make_vec(Biquadratic(x), Biquadratic(y), Biquadratic(z)); }

}  // namespace

TEST_CASE("stacking sequences") {
  CHECK(StackingSequence::parse("abc").letters() == "ABC");
  CHECK_THROWS_AS(StackingSequence::parse("AA"), DegenerateInput);
  CHECK_THROWS_AS(StackingSequence::parse("ABA"), DegenerateInput);
  CHECK_THROWS_AS(StackingSequence::parse("A"), DegenerateInput);
  CHECK_THROWS_AS(StackingSequence::parse("ABD"), DegenerateInput);
  CHECK(StackingSequence::parse("ABAB").primitive().letters() == "AB");
  CHECK(StackingSequence::parse("AB").layer_types() == "hh");
  CHECK(StackingSequence::parse("ABC").layer_types() == "ccc");
  CHECK(StackingSequence::parse("ABAC").layer_types() == "chch");
  CHECK(equivalent(StackingSequence::parse("ACB"), StackingSequence::parse("ABC")));
  CHECK(equivalent(StackingSequence::parse("BC"), StackingSequence::parse("ABAB")));
  CHECK_FALSE(equivalent(StackingSequence::parse("AB"), StackingSequence::parse("ABC")));
}

TEST_CASE("stacking classes agree with a layer-type oracle") {
  const auto raw = enumerate_stackings(2, 6);
  std::set<std::string> keys;
  for (const auto& s : raw) keys.insert(hc_key(s.letters()));
  const auto distinct = distinct_stackings(2, 6);
  CHECK(distinct.size() == keys.size());
  CHECK(distinct.size() == 6);
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (std::size_t b = a; b < raw.size(); ++b) {
      CHECK(equivalent(raw[a], raw[b]) == (hc_key(raw[a].letters()) == hc_key(raw[b].letters())));
    }
  }
}

TEST_CASE("close packings and their contacts") {
  const auto p = build_close_packing(StackingSequence::parse("ABC"));
  CHECK(p.count('L') == 3);
  CHECK(p.cell_volume() == Biquadratic(0, 12, 0, 0));
  const auto f = fill_octahedral_holes(p);
  CHECK(f.count('S') == 3);
  CHECK(f.sphere(f.size() - 1).radius == silver_radius());
  const ContactGraph g = contact_graph(f);
  for (int i = 0; i < f.size(); ++i) {
    if (f.sphere(i).kind == 'L') {
      CHECK(g.degree(i) == 18);
      CHECK(g.degree_to(i, 'L') == 12);
    } else {
      CHECK(g.degree(i) == 6);
      CHECK(g.degree_to(i, 'L') == 6);
    }
  }
}

TEST_CASE("octahedral holes sit at the centres of six touching spheres") {
  const auto f = filled("AB");
  for (int i = 0; i < f.size(); ++i) {
    if (f.sphere(i).kind != 'S') continue;
    int around = 0;
    for (const auto& n : f.near(i, 2.5)) {
      if (f.sphere(n.index).kind == 'L' && f.distance_sq(i, n) == Biquadratic(2)) ++around;
    }
    CHECK(around == 6);
  }
}

TEST_CASE("cubic FCC cell") {
  const auto full = verify_compact(fcc_cubic_cell(true));
  CHECK(full.compact);
  CHECK(full.census.at("LLLL") == 8);
  CHECK(full.census.at("SLLL") == 32);
  CHECK(full.tetra_volume == Biquadratic(0, 16, 0, 0));
  CHECK(full.uncovered_volume.is_zero());

  const auto bare = verify_compact(fcc_cubic_cell(false));
  CHECK_FALSE(bare.compact);
  CHECK(bare.census.at("LLLL") == 8);
  // Four empty octahedra of edge 2 per cubic cell.
  CHECK(bare.uncovered_volume == Biquadratic(0, Rational(32, 3), 0, 0));
}

TEST_CASE("cubic and layered FCC cells agree per unit volume") {
  const auto cubic = verify_compact(fcc_cubic_cell(true));
  const auto layered = verify_compact(filled("ABC"));
  CHECK(cubic.compact == layered.compact);
  for (const auto& [kinds, n] : cubic.census) {
    CHECK(Biquadratic(n) / cubic.cell_volume == Biquadratic(layered.census.at(kinds)) / layered.cell_volume);
  }
}

TEST_CASE("volume conservation and verdicts for every short stacking") {
  for (const auto& s : distinct_stackings(2, 6)) {
    CAPTURE(s.letters());
    for (bool fill : {true, false}) {
      auto p = build_close_packing(s);
      if (fill) p = fill_octahedral_holes(p);
      const auto v = verify_compact(p);
      CHECK(v.compact == fill);
      CHECK(v.tetra_volume + v.uncovered_volume == v.cell_volume);
      CHECK(v.uncovered_volume.is_zero() == v.compact);
      if (fill) {
        CHECK(v.census.at("LLLL") == 2 * static_cast<int>(s.size()));
        CHECK(v.census.at("SLLL") == 8 * static_cast<int>(s.size()));
      }
    }
  }
}

TEST_CASE("face-to-face meeting of tetrahedra") {
  const std::array<Vec3, 4> base{v(0, 0, 0), v(4, 0, 0), v(0, 4, 0), v(0, 0, 4)};
  // Shares the face x + y + z = 4 seen from the other side.
  CHECK(meet_face_to_face(base, {v(4, 0, 0), v(0, 4, 0), v(0, 0, 4), v(4, 4, 4)}));
  // Far apart.
  CHECK(meet_face_to_face(base, {v(10, 0, 0), v(14, 0, 0), v(10, 4, 0), v(10, 0, 4)}));
  // Shares the corner only.
  CHECK(meet_face_to_face(base, {v(0, 0, 0), v(-4, 0, 0), v(0, -4, 0), v(0, 0, -4)}));
  // Overlapping interiors.
  CHECK_FALSE(meet_face_to_face(base, {v(1, 1, 1), v(5, 1, 1), v(1, 5, 1), v(1, 1, 5)}));
  // Half of the shared face: meets in a triangle that is not a face of base.
  CHECK_FALSE(meet_face_to_face(base, {v(4, 0, 0), v(0, 4, 0), v(2, 0, 2), v(4, 4, 4)}));
  // A vertex touching the interior of a face.
  CHECK_FALSE(meet_face_to_face(base, {v(1, 1, 0), v(1, 1, -4), v(5, 1, -4), v(1, 5, -4)}));
  CHECK_THROWS_AS(meet_face_to_face(base, {v(0, 0, 0), v(1, 0, 0), v(2, 0, 0), v(0, 1, 0)}), DegenerateInput);
}

TEST_CASE("density does not depend on the stacking") {
  const Biquadratic expected(Rational(5, 3), -1, 0, 0);
  const double oracle = M_PI * (5.0 * std::sqrt(2.0) - 6.0) / (3.0 * std::sqrt(2.0));
  for (const auto& s : enumerate_stackings(2, 6)) {
    const auto m = density(fill_octahedral_holes(build_close_packing(s)));
    CHECK(m.density_over_pi == expected);
    CHECK(m.density.contains(Rational(m.density.midpoint())));
  }
  const auto m = density(filled("ABAC"));
  CHECK(m.density.width() <= pow2(-64));
  CHECK(m.density.mid_double() == doctest::Approx(oracle).epsilon(1e-14));
  CHECK(m.density_expression() == "π(5/3 - √2)");
  CHECK(m.density_over_pi / close_packing_density_over_pi() == Biquadratic(-6, 5, 0, 0));
  CHECK(close_packing_density_over_pi().to_double() * M_PI == doctest::Approx(M_PI / std::sqrt(18.0)));
  CHECK(density(build_close_packing(StackingSequence::parse("ABAC"))).density_over_pi == close_packing_density_over_pi());
  CHECK(density(fcc_cubic_cell(true)).density_over_pi == expected);
}

TEST_CASE("solid angles at a contact tetrahedron apex") {
  const auto r = AlgebraicReal::near(make_poly({-1, 2, 1}), Rational(414, 1000), Rational(1, 100));
  const SolidAngle small = solid_angle_at_small(r);
  REQUIRE(small.pi_multiple.has_value());
  CHECK(*small.pi_multiple == Rational(1, 2));
  CHECK(small.value.mid_double() == doctest::Approx(M_PI / 2));
  CHECK(small.divides_full_sphere == true);
  CHECK(small.copies.contains(Rational(8)));
  CHECK(small.cos_dihedral.is_rational());
  CHECK(small.cos_dihedral.rational_value() == 0);

  const SolidAngle equal = contact_solid_angle(AlgebraicReal(Rational(1)));
  CHECK_FALSE(equal.pi_multiple.has_value());
  CHECK(equal.cos_dihedral.rational_value() == Rational(1, 3));
  CHECK(equal.divides_full_sphere == false);
  CHECK(equal.value.mid_double() == doctest::Approx(3 * std::acos(1.0 / 3) - M_PI).epsilon(1e-14));
  CHECK(equal.copies.lower() > 22);
  CHECK(equal.copies.upper() < 23);

  CHECK_THROWS_AS(contact_solid_angle(AlgebraicReal(Rational(0))), DegenerateInput);
  CHECK_THROWS_AS(solid_angle_at_small(AlgebraicReal(Rational(1))), DegenerateInput);
}

TEST_CASE("solid angle formula matches a direct vector computation") {
  for (const auto& [num, den] : std::vector<std::pair<long, long>>{{1, 5}, {1, 2}, {3, 4}, {2, 1}, {7, 3}}) {
    const double rr = static_cast<double>(num) / static_cast<double>(den);
    // Unit spheres at the corners of an equilateral triangle of side 2,
    // apex above the centroid at distance 1 + r from each.
    const double circ = 2.0 / std::sqrt(3.0);
    const double h = std::sqrt((1 + rr) * (1 + rr) - circ * circ);
    double a[3][3];
    for (int k = 0; k < 3; ++k) {
      const double t = 2 * M_PI * k / 3;
      a[k][0] = circ * std::cos(t);
      a[k][1] = circ * std::sin(t);
      a[k][2] = -h;
    }
    // Van Oosterom and Strackee.
    auto dotp = [](const double* x, const double* y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; };
    const double la = std::sqrt(dotp(a[0], a[0]));
    const double triple = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                          a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    const double denom = la * la * la + la * (dotp(a[0], a[1]) + dotp(a[1], a[2]) + dotp(a[0], a[2]));
    const double omega = 2 * std::atan2(std::abs(triple), denom);
    const auto s = contact_solid_angle(AlgebraicReal(make_rational(num, den)));
    CAPTURE(rr);
    CHECK(s.value.mid_double() == doctest::Approx(omega).epsilon(1e-12));
  }
}

TEST_CASE("shell classes follow the layer types") {
  for (const auto& s : distinct_stackings(2, 6)) {
    CAPTURE(s.letters());
    const auto p = fill_octahedral_holes(build_close_packing(s));
    const auto classes = classify_shells(p);
    CHECK(classes.size() == s.size());
    const std::string types = s.layer_types();
    for (const auto& [i, shape] : classes) {
      const char t = types[static_cast<std::size_t>(layer_of(p, i))];
      CHECK(shape == (t == 'c' ? ShapeClass::Cuboctahedron : ShapeClass::TriangularOrthobicupola));
    }
  }
  const auto cubic = classify_shells(fcc_cubic_cell(true));
  CHECK(cubic.size() == 4);
  for (const auto& [i, shape] : cubic) CHECK(shape == ShapeClass::Cuboctahedron);
  CHECK_THROWS_AS(classify_shells(build_close_packing(StackingSequence::parse("ABC"))), Error);
}

TEST_CASE("stacking recovery") {
  for (const auto& s : distinct_stackings(2, 6)) {
    CAPTURE(s.letters());
    CHECK(equivalent(recover_stacking(fill_octahedral_holes(build_close_packing(s))), s));
    CHECK(equivalent(recover_stacking(build_close_packing(s)), s));
  }
  CHECK(recover_stacking(fcc_cubic_cell(true)).primitive().size() == 3);
  CHECK(recover_stacking(filled("ABABAB")).letters().size() == 2);

  // Simple cubic arrangement: every sphere touches six, no triangular layers.
  Mat3 cube = Mat3::Identity() * Biquadratic(2);
  const PackingModel simple(cube, {Sphere{make_vec(Biquadratic(0), Biquadratic(0), Biquadratic(0)), Biquadratic(1), 'L'}});
  CHECK_THROWS_AS(recover_stacking(simple), Error);
}
