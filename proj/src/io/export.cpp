#include "compack/io/export.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <sstream>

namespace compack {

int digits_for_bits(long bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))); }

std::string decimal(const Rational& q, int digits) {
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(digits * 4 + 64));
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return out;
}

std::string decimal(const Biquadratic& x, int digits) {
  if (x.is_rational()) return decimal(x[0], digits);
  return decimal(x.enclose(static_cast<long>(digits) * 4 + 16).midpoint(), digits);
}

AlgebraicReal tightened(const AlgebraicReal& x) {
  const Rational width = pow2(-40);
  return x.width() <= width ? x : x.refined(width);
}

std::string approx_decimal(const AlgebraicReal& x, int digits) {
  const Rational mid = x.is_rational() ? x.rational_value() : x.refined(pow2(-4 * digits - 8)).lower();
  mpfr_t v;
  mpfr_init2(v, static_cast<mpfr_prec_t>(4 * digits + 64));
  mpfr_set_q(v, mid.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, v);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(v);
  return out;
}

Json field_json(const Biquadratic& x) {
  Json out = Json::array();
  for (int i = 0; i < 4; ++i) out.push_back(x[i].get_str());
  return out;
}

Json poly_json(const RationalPoly& p) {
  Json out = Json::array();
  for (const auto& c : integer_coefficients(primitive_part(p))) {
    if (c.fits_slong_p()) {
      out.push_back(c.get_si());
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

Json interval_json(const DyadicInterval& x) { return Json::array({x.lower_double(), x.upper_double()}); }

Json radius_json(const RadiusRecord& r, AngleContext ctx) {
  const AlgebraicReal t = tightened(r.value);
  return Json{{"word", r.word.digit_notation()},
              {"context", to_string(ctx)},
              {"minpoly", poly_json(r.value.minpoly())},
              {"root_interval", Json::array({t.lower().get_str(), t.upper().get_str()})},
              {"approx", approx_decimal(r.value, 6)},
              {"status", to_string(r.status)},
              {"certification_precision_bits", r.precision_bits}};
}

Json shell_json(const EmbeddedShell& s) {
  Json labels = Json::array(), faces = Json::array(), coords = Json::array();
  for (char c : s.complex.labels()) labels.push_back(std::string(1, c));
  for (const auto& f : s.complex.faces()) faces.push_back(Json::array({f[0], f[1], f[2]}));
  for (const auto& v : s.coordinates) coords.push_back(Json::array({field_json(v(0)), field_json(v(1)), field_json(v(2))}));
  return Json{{"shape", to_string(s.shape)},
              {"large", s.complex.count('L')},
              {"small", s.complex.count('S')},
              {"labels", labels},
              {"faces", faces},
              {"coordinates", coords}};
}

Json metrics_json(const PackingMetrics& m) {
  Json census = Json::object();
  for (const auto& [kinds, n] : m.simplex_census) census[kinds] = n;
  return Json{{"density_exact", m.density_expression()},
              {"density_interval", interval_json(m.density)},
              {"counts", {{"large", m.large}, {"small", m.small}}},
              {"simplex_census", census}};
}

namespace {

std::string tuple(const Biquadratic& x) {
  return "(" + x[0].get_str() + "," + x[1].get_str() + "," + x[2].get_str() + "," + x[3].get_str() + ")";
}

}  // namespace

std::string packing_xyz(const PackingModel& p, long precision_bits) {
  const int digits = digits_for_bits(precision_bits);
  std::ostringstream os;
  os << p.size() << "\nLattice=\"";
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) os << (c || r ? " " : "") << decimal(p.lattice()(r, c), digits);
  }
  os << "\" Properties=species:S:1:pos:R:3:radius:R:1\n";
  for (int i = 0; i < p.size(); ++i) {
    const Sphere& s = p.sphere(i);
    os << s.kind;
    for (int k = 0; k < 3; ++k) os << ' ' << decimal(s.centre(k), digits);
    os << ' ' << decimal(s.radius, digits) << " # exact";
    for (int k = 0; k < 3; ++k) os << ' ' << "xyz"[k] << '=' << tuple(s.centre(k));
    os << " r=" << tuple(s.radius) << '\n';
  }
  return os.str();
}

std::string tiling_off(const PackingModel& p, const CompactVerdict& v) {
  std::map<SiteRef, int> index;
  std::vector<SiteRef> sites;
  for (const auto& t : v.tetrahedra) {
    for (const auto& s : t.vertices) {
      if (index.emplace(s, static_cast<int>(sites.size())).second) sites.push_back(s);
    }
  }
  std::ostringstream os;
  os << "OFF\n# " << v.tetrahedra.size() << " tetrahedra, " << (v.compact ? "compact" : "not compact") << '\n';
  os << sites.size() << ' ' << 4 * v.tetrahedra.size() << " 0\n";
  for (const auto& s : sites) {
    const Vec3 x = p.position(s.index, s.shift);
    os << decimal(x(0), 12) << ' ' << decimal(x(1), 12) << ' ' << decimal(x(2), 12) << '\n';
  }
  constexpr int kFaces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : v.tetrahedra) {
    for (const auto& f : kFaces) {
      os << '3';
      for (int k : f) os << ' ' << index.at(t.vertices[static_cast<std::size_t>(k)]);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace compack
