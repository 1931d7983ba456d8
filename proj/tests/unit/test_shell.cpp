#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "compack/shell/complex.hpp"
#include "compack/shell/embed.hpp"

using namespace compack;

namespace {

NecklaceWord word(const char* s) { return NecklaceWord::parse(s); }

const std::set<NecklaceWord>& large_words() {
  static const std::set<NecklaceWord> w{word("LLLSLS"), word("LLSLLS")};
  return w;
}

const std::set<NecklaceWord>& small_words() {
  static const std::set<NecklaceWord> w{word("LLLL")};
  return w;
}

AlgebraicReal silver_radius() { return AlgebraicReal::near(make_poly({-1, 2, 1}), Rational(414, 1000), Rational(1, 100)); }

const std::vector<ShellComplex>& reference_complexes() {
  static const auto shells = complete_shells(large_words(), small_words(), 12);
  return shells;
}

const EmbeddedShell& embedded(ShapeClass c) {
  static const auto all = [] {
    std::map<ShapeClass, EmbeddedShell> m;
    for (const auto& s : reference_complexes()) {
      auto e = embed_shell(s, silver_radius());
      m.emplace(e.shape, std::move(e));
    }
    return m;
  }();
  return all.at(c);
}

// Same shell after renaming vertices by `perm` and optionally mirroring.
ShellComplex relabel(const ShellComplex& s, const std::vector<int>& perm, bool mirror) {
  std::vector<char> labels(s.labels().size());
  for (std::size_t v = 0; v < perm.size(); ++v) labels[static_cast<std::size_t>(perm[v])] = s.labels()[v];
  std::vector<ShellComplex::Face> faces;
  for (const auto& f : s.faces()) {
    ShellComplex::Face g{perm[static_cast<std::size_t>(f[0])], perm[static_cast<std::size_t>(f[1])],
                         perm[static_cast<std::size_t>(f[2])]};
    if (mirror) std::swap(g[1], g[2]);
    faces.push_back(g);
  }
  return ShellComplex(std::move(labels), std::move(faces));
}

ShellComplex octahedron(char label) {
  return ShellComplex(std::vector<char>(6, label), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                                    {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}});
}

}  // namespace

TEST_CASE("two shells at the silver radius") {
  ShellSearchStats stats;
  const auto shells = complete_shells(large_words(), small_words(), 12, {}, &stats);
  REQUIRE(shells.size() == 2);
  for (const auto& s : shells) {
    CHECK(s.count('L') == 12);
    CHECK(s.count('S') == 6);
    CHECK(s.faces().size() == 32);
  }
  CHECK(stats.nodes < 10000);
  CHECK(stats.complete_found >= 2);
}

TEST_CASE("restricted necklace sets") {
  const auto only_first = complete_shells({word("LLSLLS")}, small_words(), 12);
  REQUIRE(only_first.size() == 1);
  CHECK(embed_shell(only_first[0], silver_radius()).shape == ShapeClass::Cuboctahedron);
  CHECK(complete_shells({word("LLLSLS")}, small_words(), 12).empty());
  CHECK(complete_shells(large_words(), {}, 12).empty());
  CHECK(complete_shells(large_words(), small_words(), 11).empty());
  CHECK_THROWS_AS(complete_shells(large_words(), small_words(), 2), DegenerateInput);
}

TEST_CASE("search budget is enforced") {
  ShellSearchOptions opts;
  opts.node_budget = 5;
  CHECK_THROWS_AS(complete_shells(large_words(), small_words(), 12, opts), BudgetExceeded);
}

TEST_CASE("all-large links give the icosahedron") {
  // Twelve spheres each touching five others: the one shell with no small sphere.
  const auto shells = complete_shells({word("LLLLL")}, {word("LLLL")}, 12);
  REQUIRE(shells.size() == 1);
  CHECK(shells[0].count('L') == 12);
  CHECK(shells[0].count('S') == 0);
  CHECK(complete_shells({word("LLLLL")}, {word("LLLL")}, 11).empty());
}

TEST_CASE("returned shells re-check as complete with allowed links") {
  for (const auto& s : reference_complexes()) {
    CHECK(s.is_closed());
    CHECK(s.is_complete());
    CHECK(s.euler_characteristic() == 2);
    std::map<std::pair<int, int>, int> uses;
    for (const auto& f : s.faces()) {
      for (int k = 0; k < 3; ++k) {
        const int a = f[static_cast<std::size_t>(k)], b = f[static_cast<std::size_t>((k + 1) % 3)];
        ++uses[{std::min(a, b), std::max(a, b)}];
      }
    }
    for (const auto& [edge, n] : uses) {
      CHECK(n == 2);
      CHECK_FALSE((s.labels()[static_cast<std::size_t>(edge.first)] == 'S' &&
                   s.labels()[static_cast<std::size_t>(edge.second)] == 'S'));
    }
    for (int v = 0; v < s.vertex_count(); ++v) {
      const auto link = s.link_word(v);
      REQUIRE(link.has_value());
      const auto& allowed = s.labels()[static_cast<std::size_t>(v)] == 'L' ? large_words() : small_words();
      CHECK(allowed.count(*link) == 1);
    }
  }
}

TEST_CASE("canonical codes separate the two shells and ignore relabelling") {
  const auto& shells = reference_complexes();
  CHECK(shells[0].canonical_code() != shells[1].canonical_code());
  std::mt19937_64 rng(3);
  for (const auto& s : shells) {
    const auto code = s.canonical_code();
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(s.vertex_count()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto t = relabel(s, perm, trial % 2 == 1);
      CHECK(t.canonical_code() == code);
      CHECK(t.canonical_form().faces() == s.canonical_form().faces());
    }
  }
  CHECK_THROWS_AS(ShellComplex({'L', 'L', 'L'}, {{0, 1, 2}}).canonical_code(), DegenerateInput);
}

TEST_CASE("cuboctahedral shell coordinates") {
  const auto& e = embedded(ShapeClass::Cuboctahedron);
  const Biquadratic s2 = Biquadratic::sqrt2();
  std::set<std::string> large, small;
  for (int v = 0; v < e.complex.vertex_count(); ++v) {
    (e.complex.labels()[static_cast<std::size_t>(v)] == 'L' ? large : small)
        .insert(to_string(e.coordinates[static_cast<std::size_t>(v)]));
  }
  std::set<std::string> want_large, want_small;
  for (const auto& p : reference_large_centers(ShapeClass::Cuboctahedron)) want_large.insert(to_string(p));
  for (int axis = 0; axis < 3; ++axis) {
    for (int sgn : {1, -1}) {
      Vec3 p = make_vec(0, 0, 0);
      p(axis) = s2 * Biquadratic(sgn);
      want_small.insert(to_string(p));
    }
  }
  CHECK(large == want_large);
  CHECK(small == want_small);
  CHECK(want_large.count("(√2, -√2, 0)") == 1);
}

TEST_CASE("embeddings satisfy every exact distance condition") {
  for (ShapeClass c : {ShapeClass::Cuboctahedron, ShapeClass::TriangularOrthobicupola}) {
    const auto& e = embedded(c);
    CHECK(embedding_violations(e).empty());
    CHECK(e.small_radius == Biquadratic(-1, 1, 0, 0));
    const auto& labels = e.complex.labels();
    for (const auto& [a, b] : e.complex.edges()) {
      const Vec3& p = e.coordinates[static_cast<std::size_t>(a)];
      const Vec3& q = e.coordinates[static_cast<std::size_t>(b)];
      const Biquadratic d = dot(p, q);
      REQUIRE(d.sign() > 0);
      const Biquadratic cos_sq = d * d / (squared_norm(p) * squared_norm(q));
      const bool both_large = labels[static_cast<std::size_t>(a)] == 'L' && labels[static_cast<std::size_t>(b)] == 'L';
      // 60 degrees between touching large neighbours, 45 between large and small.
      CHECK(cos_sq == (both_large ? Biquadratic(Rational(1, 4)) : Biquadratic(Rational(1, 2))));
    }
  }
}

TEST_CASE("orthobicupola shell has small spheres on a triangular prism") {
  const auto& e = embedded(ShapeClass::TriangularOrthobicupola);
  std::vector<Vec3> small;
  for (int v = 0; v < e.complex.vertex_count(); ++v) {
    if (e.complex.labels()[static_cast<std::size_t>(v)] == 'S') small.push_back(e.coordinates[static_cast<std::size_t>(v)]);
  }
  REQUIRE(small.size() == 6);
  std::vector<Biquadratic> d;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) d.push_back(squared_distance(small[i], small[j]));
  }
  std::sort(d.begin(), d.end());
  // Right prism over an equilateral triangle: 6 base edges, 3 laterals, 6 diagonals.
  std::map<std::string, int> counts;
  for (const auto& x : d) ++counts[x.to_string()];
  std::vector<int> multiplicities;
  for (const auto& [k, n] : counts) multiplicities.push_back(n);
  std::sort(multiplicities.begin(), multiplicities.end());
  CHECK(multiplicities == std::vector<int>{3, 6, 6});
  // The diagonal is the hypotenuse over a base edge and a lateral edge.
  const std::vector<Biquadratic> distinct{d.front(), d[6], d.back()};
  const bool pythagorean = distinct[0] + distinct[1] == distinct[2];
  CHECK(pythagorean);
}

TEST_CASE("coplanar six-rings") {
  const auto& cubo = embedded(ShapeClass::Cuboctahedron);
  const auto& ortho = embedded(ShapeClass::TriangularOrthobicupola);
  CHECK(shell_ring_property(cubo).size() == 4);
  CHECK(shell_ring_property(ortho).size() == 1);
  const auto through_cubo = rings_through_vertices(cubo);
  const auto through_ortho = rings_through_vertices(ortho);
  CHECK(*std::max_element(through_cubo.begin(), through_cubo.end()) == 2);
  CHECK(*std::max_element(through_ortho.begin(), through_ortho.end()) == 1);
  for (int v = 0; v < cubo.complex.vertex_count(); ++v) {
    CHECK(through_cubo[static_cast<std::size_t>(v)] == (cubo.complex.labels()[static_cast<std::size_t>(v)] == 'L' ? 2 : 0));
  }
  for (const auto* e : {&cubo, &ortho}) {
    for (const auto& ring : shell_ring_property(*e)) {
      for (std::size_t k = 0; k < 6; ++k) {
        const int a = ring.vertices[k], b = ring.vertices[(k + 1) % 6];
        CHECK(e->complex.adjacent(a, b));
        CHECK(dot(ring.normal, e->coordinates[static_cast<std::size_t>(a)]).is_zero());
      }
    }
  }
}

TEST_CASE("classification by large-center distances") {
  for (ShapeClass c : {ShapeClass::Cuboctahedron, ShapeClass::TriangularOrthobicupola}) {
    const auto pts = reference_large_centers(c);
    REQUIRE(pts.size() == 12);
    for (const auto& p : pts) CHECK(squared_norm(p) == Biquadratic(4));
    CHECK(classify_large_centers(pts) == c);
  }
  auto pts = reference_large_centers(ShapeClass::Cuboctahedron);
  pts.pop_back();
  CHECK_FALSE(classify_large_centers(pts).has_value());
}

TEST_CASE("embedding rejects unrealizable complexes and radii") {
    const auto& s = reference_complexes().front();
  CHECK_THROWS_AS(embed_shell(s, AlgebraicReal::near(make_poly({-2, 0, 0, 1}), Rational(126, 100), Rational(1, 10))),
                  DegenerateInput);
  CHECK_THROWS_AS(embed_shell(ShellComplex({'L', 'L', 'L'}, {{0, 1, 2}}), silver_radius()), DegenerateInput);
}

TEST_CASE("closure failures name a cycle of the complex") {
  const auto oct = octahedron('L');
  CHECK_THROWS_AS(embed_shell(oct, silver_radius()), ShellClosureError);
  try {
    embed_shell(oct, silver_radius());
  } catch (const ShellClosureError& err) {
    const auto& cycle = err.cycle();
    REQUIRE(cycle.size() >= 3);
    for (std::size_t k = 0; k < cycle.size(); ++k) CHECK(oct.adjacent(cycle[k], cycle[(k + 1) % cycle.size()]));
  }
}

TEST_CASE("OFF export") {
  const auto off = to_off(embedded(ShapeClass::Cuboctahedron));
  CHECK(off.rfind("OFF\n", 0) == 0);
  CHECK(off.find("18 32 0\n") != std::string::npos);
  CHECK(off.find("# shape cuboctahedron") != std::string::npos);
  CHECK(std::count(off.begin(), off.end(), '\n') == 1 + 1 + 18 + 1 + 18 + 32);
}
