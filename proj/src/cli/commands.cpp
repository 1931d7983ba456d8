#include "compack/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "compack/necklace/search.hpp"
#include "compack/packing/layers.hpp"
#include "compack/shell/complex.hpp"

namespace compack {

namespace {

// Published necklace results: skew word naming the radius -> realized words.
const std::map<std::string, std::set<std::string>>& expected_necklaces(AngleContext ctx) {
  static const std::map<std::string, std::set<std::string>> large{{"1111", {"LLLSLS", "LLSLLS"}}};
  static const std::map<std::string, std::set<std::string>> small{{"11rr", {"LLSS"}}};
  return ctx == AngleContext::Large ? large : small;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

void append(CommandResult& into, const std::string& key, CommandResult part) {
  into.report[key] = std::move(part.report);
  into.text += part.text + "\n";
  into.csv += "# " + key + "\n" + part.csv + "\n";
  for (auto& f : part.failures) into.failures.push_back(key + ": " + f);
}

AlgebraicReal silver_root() { return AlgebraicReal::near(make_poly({-1, 2, 1}), Rational(414, 1000), Rational(1, 100)); }

struct LinkSets {
  std::set<NecklaceWord> large, small;
};

// Words allowed around a large neighbour (large necklaces) and around a
// small one (skew necklaces with a large body), both at r.
LinkSets link_sets(const AlgebraicReal& r, const CertifyOptions& opts) {
  LinkSets out;
  RadiusRecord rec{NecklaceWord::parse("1111"), r, RadiusStatus::Certified, 0, ""};
  const NecklaceSearchReport large = search_necklaces(AngleContext::Large, {rec}, opts);
  out.large.insert(large.per_radius.front().words.begin(), large.per_radius.front().words.end());
  for (const auto& w : enumerate_skew_candidates()) {
    try {
      if (certify_angle_sum(w, AngleContext::Skew, r, opts)) out.small.insert(w);
    } catch (const DegenerateInput&) {
    }
  }
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw DegenerateInput("unknown output format '" + name + "'");
}

void RunConfig::validate() const {
  if (precision_bits < 64) throw DegenerateInput("precision must be at least 64 bits");
  if (node_budget <= 0) throw DegenerateInput("node budget must be positive");
}

CertifyOptions RunConfig::certify_options() const {
  CertifyOptions o;
  o.initial_bits = precision_bits;
  o.max_bits = std::max<long>(o.max_bits, precision_bits);
  return o;
}

std::string CommandResult::render(OutputFormat f) const {
  switch (f) {
    case OutputFormat::Json: {
      Json out = report;
      out["reproduced"] = reproduced();
      out["failures"] = failures;
      return out.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return csv;
    case OutputFormat::Text: {
      std::string out = text;
      out += reproduced() ? "reproduction: ok\n" : "reproduction: FAILED\n";
      for (const auto& f : failures) out += "  " + f + "\n";
      return out;
    }
  }
  return {};
}

namespace {

CommandResult radii_result(const RadiiReport& r) {
  CommandResult out;
  Json candidates = Json::array(), prefilter = Json::array(), certified = Json::array(), rejected = Json::array();
  for (const auto& w : r.candidates) candidates.push_back(w.digit_notation());
  for (const auto& v : r.prefilter_values) {
    prefilter.push_back(Json{{"minpoly", poly_json(v.minpoly())}, {"approx", approx_decimal(v)}});
  }
  for (const auto& c : r.certified) certified.push_back(radius_json(c));
  for (const auto& c : r.rejected) rejected.push_back(radius_json(c));
  out.report = Json{{"command", "radii"},
                    {"candidate_count", r.candidates.size()},
                    {"candidates", candidates},
                    {"prefilter_count", r.prefilter_values.size()},
                    {"prefilter_values", prefilter},
                    {"certified_count", r.certified.size()},
                    {"certified", certified},
                    {"rejected", rejected},
                    {"minpoly_mode", r.minpoly_mode}};
  out.failures = r.mismatches;

  std::ostringstream t;
  t << "Skew necklace candidates (" << r.candidates.size() << "):";
  for (const auto& w : r.candidates) t << ' ' << w.digit_notation();
  t << "\nPre-filter radius values: " << r.prefilter_values.size() << "\n\n";
  t << std::left << std::setw(8) << "word" << std::setw(34) << "minimal polynomial" << std::setw(12) << "r" << "bits\n";
  for (const auto& c : r.certified) {
    t << std::setw(8) << c.word.digit_notation() << std::setw(34) << to_string(c.value.minpoly()) << std::setw(12)
      << approx_decimal(c.value) << c.precision_bits << '\n';
  }
  if (!r.rejected.empty()) {
    t << "\nRejected pre-filter values:\n";
    for (const auto& c : r.rejected) {
      t << "  " << std::setw(8) << c.word.digit_notation() << std::setw(12) << approx_decimal(c.value) << c.reason << '\n';
    }
  }
  out.text = t.str();

  std::ostringstream c;
  c << "word,minpoly,root_lo,root_hi,approx,status,precision_bits\n";
  for (const auto& x : r.certified) {
    const AlgebraicReal t = tightened(x.value);
    c << x.word.digit_notation() << ',' << quoted(to_string(x.value.minpoly())) << ',' << t.lower().get_str() << ','
      << t.upper().get_str() << ',' << approx_decimal(x.value) << ',' << to_string(x.status) << ',' << x.precision_bits
      << '\n';
  }
  out.csv = c.str();
  return out;
}

CommandResult necklaces_over(const RunConfig& cfg, AngleContext ctx, const std::vector<RadiusRecord>& radii) {
  const NecklaceSearchReport rep = search_necklaces(ctx, radii, cfg.certify_options());
  const auto& expected = expected_necklaces(ctx);
  CommandResult out;
  Json rows = Json::array();
  std::ostringstream t, c;
  t << to_string(ctx) << " necklaces\n";
  t << std::left << std::setw(8) << "radius" << std::setw(12) << "r" << std::setw(12) << "bounds" << std::setw(10)
    << "screened" << std::setw(16) << "certified" << "words\n";
  c << "radius,r,bounds,screened,certified,words\n";
  for (const auto& pr : rep.per_radius) {
    std::vector<std::string> triples, words;
    for (const auto& t3 : pr.certified) triples.push_back(t3.to_string());
    for (const auto& w : pr.words) words.push_back(w.letters());
    Json screened = Json::array();
    for (const auto& s : pr.screened) screened.push_back(Json{{"triple", s.counts.to_string()}, {"certified", s.certified}});
    rows.push_back(Json{{"radius", radius_json(pr.radius)},
                        {"bounds", pr.bounds.to_string()},
                        {"screened", screened},
                        {"certified", triples},
                        {"words", words}});
    t << std::setw(8) << pr.radius.word.digit_notation() << std::setw(12) << approx_decimal(pr.radius.value) << std::setw(12)
      << pr.bounds.to_string() << std::setw(10) << pr.screened.size() << std::setw(16)
      << (triples.empty() ? "-" : join(triples, " ")) << (words.empty() ? "-" : join(words, " ")) << '\n';
    c << pr.radius.word.digit_notation() << ',' << approx_decimal(pr.radius.value) << ',' << quoted(pr.bounds.to_string())
      << ',' << pr.screened.size() << ',' << quoted(join(triples, " ")) << ',' << join(words, " ") << '\n';

    const std::string key = pr.radius.word.digit_notation();
    const auto it = expected.find(key);
    const std::set<std::string> want = it == expected.end() ? std::set<std::string>{} : it->second;
    const std::set<std::string> got(words.begin(), words.end());
    if (got != want) {
      out.failures.push_back("at radius " + key + " expected {" + join({want.begin(), want.end()}, ", ") + "}, found {" +
                             join(words, ", ") + "}");
    }
  }
  out.report = Json{{"command", "necklaces"}, {"context", to_string(ctx)}, {"radii", rows}};
  out.text = t.str();
  out.csv = c.str();
  return out;
}

}  // namespace

CommandResult cmd_radii(const RunConfig& cfg) {
  cfg.validate();
  CommandResult out = radii_result(run_radii_pipeline(cfg.certify_options()));
  if (cfg.output_path) write_file(*cfg.output_path, out.report.dump(2) + "\n");
  return out;
}

CommandResult cmd_necklaces(const RunConfig& cfg, AngleContext ctx, const std::string& r_word) {
  cfg.validate();
  if (ctx == AngleContext::Skew) throw DegenerateInput("necklace search takes the large or small context");
  const RadiiReport radii = run_radii_pipeline(cfg.certify_options());
  std::vector<RadiusRecord> chosen;
  if (r_word.empty()) {
    chosen = radii.certified;
  } else {
    const RadiusRecord* rec = find_certified(radii, NecklaceWord::parse(r_word));
    if (!rec) throw DegenerateInput("no certified radius for the word '" + r_word + "'");
    chosen.push_back(*rec);
  }
  CommandResult out = necklaces_over(cfg, ctx, chosen);
  if (cfg.output_path) write_file(*cfg.output_path, out.report.dump(2) + "\n");
  return out;
}

CommandResult cmd_shells(const RunConfig& cfg) {
  cfg.validate();
  const AlgebraicReal r = silver_root();
  const LinkSets links = link_sets(r, cfg.certify_options());
  ShellSearchOptions opts;
  opts.node_budget = cfg.node_budget;
  ShellSearchStats stats;
  const auto shells = complete_shells(links.large, links.small, 12, opts, &stats);

  CommandResult out;
  Json rows = Json::array();
  std::ostringstream t, c;
  std::vector<std::string> large_words, small_words;
  for (const auto& w : links.large) large_words.push_back(w.letters());
  for (const auto& w : links.small) small_words.push_back(w.letters());
  t << "Links allowed around large neighbours: " << join(large_words, " ") << "\n";
  t << "Links allowed around small neighbours: " << join(small_words, " ") << "\n";
  t << "Search: " << stats.nodes << " nodes, " << stats.dead_ends << " dead ends, " << shells.size() << " shells\n\n";
  t << std::left << std::setw(26) << "shape" << std::setw(7) << "large" << std::setw(7) << "small" << std::setw(7)
    << "rings" << "most rings through a neighbour\n";
  c << "shape,large,small,rings,max_rings_through_vertex,violations\n";

  std::set<ShapeClass> shapes;
  for (std::size_t i = 0; i < shells.size(); ++i) {
    const EmbeddedShell e = embed_shell(shells[i], r);
    const auto violations = embedding_violations(e);
    const auto rings = shell_ring_property(e);
    const auto through = rings_through_vertices(e);
    const int per = *std::max_element(through.begin(), through.end());
    shapes.insert(e.shape);

    Json j = shell_json(e);
    j["rings"] = rings.size();
    j["max_rings_through_vertex"] = per;
    j["violations"] = violations;
    rows.push_back(j);
    t << std::setw(26) << to_string(e.shape) << std::setw(7) << e.complex.count('L') << std::setw(7) << e.complex.count('S')
      << std::setw(7) << rings.size() << per << '\n';
    c << to_string(e.shape) << ',' << e.complex.count('L') << ',' << e.complex.count('S') << ',' << rings.size() << ','
      << per << ',' << violations.size() << '\n';

    if (e.complex.count('L') != 12 || e.complex.count('S') != 6) {
      out.failures.push_back(to_string(e.shape) + " does not have 12 large and 6 small neighbours");
    }
    for (const auto& v : violations) out.failures.push_back(to_string(e.shape) + ": " + v);
    const int want = e.shape == ShapeClass::Cuboctahedron ? 2 : 1;
    if (per != want) {
      out.failures.push_back(to_string(e.shape) + " has " + std::to_string(per) + " rings through some neighbour, expected " +
                             std::to_string(want));
    }
    if (cfg.output_path) {
      write_file(*cfg.output_path / ("shell_" + to_string(e.shape) + ".off"), to_off(e));
      write_file(*cfg.output_path / ("shell_" + to_string(e.shape) + ".json"), j.dump(2) + "\n");
    }
  }
  if (shells.size() != 2 || shapes.size() != 2) {
    out.failures.push_back("expected one cuboctahedral and one orthobicupolar shell, found " + std::to_string(shells.size()) +
                           " shells");
  }
  out.report = Json{{"command", "shells"},
                    {"allowed_large_links", large_words},
                    {"allowed_small_links", small_words},
                    {"search", {{"nodes", stats.nodes}, {"dead_ends", stats.dead_ends}}},
                    {"shells", rows}};
  out.text = t.str();
  out.csv = c.str();
  return out;
}

CommandResult cmd_pack(const RunConfig& cfg, const StackingSequence& seq, bool fill) {
  cfg.validate();
  PackingModel p = build_close_packing(seq);
  if (fill) p = fill_octahedral_holes(p);
  const CompactVerdict v = verify_compact(p);
  const PackingMetrics m = density(p, cfg.precision_bits);
  const Biquadratic ratio = m.density_over_pi / close_packing_density_over_pi();

  CommandResult out;
  Json j{{"command", "pack"},
         {"sequence", seq.letters()},
         {"layer_types", seq.layer_types()},
         {"filled", fill},
         {"verdict", v.compact ? "compact" : "not_compact"},
         {"reason", v.reason},
         {"tetra_volume", v.tetra_volume.to_string()},
         {"cell_volume", v.cell_volume.to_string()},
         {"uncovered_volume", v.uncovered_volume.to_string()},
         {"metrics", metrics_json(m)},
         {"ratio_to_close_packing", ratio.to_string()}};

  std::ostringstream t;
  t << "Stacking " << seq.letters() << " (" << seq.layer_types() << "), " << (fill ? "filled" : "unfilled") << "\n";
  t << "  spheres per cell: " << m.large << " large, " << m.small << " small\n";
  t << "  verdict: " << (v.compact ? "compact" : "not compact");
  if (!v.reason.empty()) t << " (" << v.reason << ")";
  t << "\n  tetrahedra:";
  for (const auto& [k, n] : v.census) t << ' ' << k << '=' << n;
  t << "\n  volume: tetrahedra " << v.tetra_volume.to_string() << ", cell " << v.cell_volume.to_string() << ", uncovered "
    << v.uncovered_volume.to_string() << '\n';
  t << "  density: " << m.density_expression() << " ~ " << m.density.to_string(8) << '\n';
  t << "  ratio to close packing: " << ratio.to_string() << '\n';

  std::string recovered;
  bool round_trip = false;
  try {
    const StackingSequence r = recover_stacking(p);
    recovered = r.letters();
    round_trip = equivalent(r, seq);
  } catch (const Error& e) {
    recovered = std::string("error: ") + e.what();
  }
  j["recovered_sequence"] = recovered;
  j["round_trip"] = round_trip;
  t << "  recovered stacking: " << recovered << (round_trip ? " (equivalent)" : " (differs)") << '\n';
  if (!round_trip) out.failures.push_back("recovered stacking " + recovered + " is not equivalent to " + seq.letters());

  int cubo = 0, ortho = 0;
  if (fill) {
    try {
      for (const auto& [i, shape] : classify_shells(p)) ++(shape == ShapeClass::Cuboctahedron ? cubo : ortho);
      j["shells"] = {{"cuboctahedron", cubo}, {"triangular_orthobicupola", ortho}};
      t << "  shells: " << cubo << " cuboctahedral, " << ortho << " orthobicupolar\n";
      const auto types = seq.layer_types();
      const int c_layers = static_cast<int>(std::count(types.begin(), types.end(), 'c'));
      const int per_layer = m.large / static_cast<int>(seq.size());
      if (cubo != c_layers * per_layer || ortho != (static_cast<int>(seq.size()) - c_layers) * per_layer) {
        out.failures.push_back("shell classes do not follow the layer types " + types);
      }
    } catch (const Error& e) {
      out.failures.push_back(std::string("shell classification: ") + e.what());
    }
    if (!v.compact) out.failures.push_back("filled packing is not compact: " + v.reason);
    if (m.density_over_pi != Biquadratic(Rational(5, 3), -1, 0, 0)) {
      out.failures.push_back("density " + m.density_expression() + " differs from π(5/3 - √2)");
    }
    if (ratio != Biquadratic(-6, 5, 0, 0)) out.failures.push_back("ratio " + ratio.to_string() + " differs from 5√2 - 6");
  } else {
    if (v.compact) out.failures.push_back("unfilled packing verified compact");
    if (m.density_over_pi != close_packing_density_over_pi()) {
      out.failures.push_back("density " + m.density_expression() + " differs from the close-packing density");
    }
  }
  out.report = std::move(j);
  out.text = t.str();
  std::ostringstream c;
  c << "sequence,filled,verdict,large,small,density_exact,density,ratio,recovered,round_trip\n";
  c << seq.letters() << ',' << (fill ? "true" : "false") << ',' << (v.compact ? "compact" : "not_compact") << ',' << m.large
    << ',' << m.small << ',' << quoted(m.density_expression()) << ',' << decimal(m.density.midpoint(), 10) << ','
    << quoted(ratio.to_string()) << ',' << recovered << ',' << (round_trip ? "true" : "false") << '\n';
  out.csv = c.str();

  if (cfg.output_path) {
    const auto stem = seq.letters() + (fill ? "_filled" : "_unfilled");
    write_file(*cfg.output_path / (stem + ".xyz"), packing_xyz(p, cfg.precision_bits));
    write_file(*cfg.output_path / (stem + "_tiling.off"), tiling_off(p, v));
    write_file(*cfg.output_path / (stem + "_metrics.json"), metrics_json(m).dump(2) + "\n");
  }
  return out;
}

CommandResult cmd_all(const RunConfig& cfg, int max_period) {
  cfg.validate();
  RunConfig quiet = cfg;
  quiet.output_path.reset();
  CommandResult out;
  out.report["command"] = "all";

  const RadiiReport radii = run_radii_pipeline(cfg.certify_options());
  append(out, "radii", radii_result(radii));
  append(out, "large_necklaces", necklaces_over(quiet, AngleContext::Large, radii.certified));
  append(out, "small_necklaces", necklaces_over(quiet, AngleContext::Small, radii.certified));

  RunConfig shell_cfg = quiet;
  if (cfg.output_path) shell_cfg.output_path = *cfg.output_path / "shells";
  append(out, "shells", cmd_shells(shell_cfg));

  const auto stackings = distinct_stackings(2, max_period);
  CommandResult packs;
  packs.report = Json{{"stackings", stackings.size()}, {"max_period", max_period}, {"packings", Json::array()}};
  packs.text = "Stackings of period 2 to " + std::to_string(max_period) + " up to symmetry: " +
               std::to_string(stackings.size()) + "\n";
  RunConfig pack_cfg = quiet;
  if (cfg.output_path) pack_cfg.output_path = *cfg.output_path / "packings";
  bool header = true;
  for (const auto& s : stackings) {
    for (bool fill : {true, false}) {
      CommandResult one = cmd_pack(pack_cfg, s, fill);
      packs.report["packings"].push_back(one.report);
      packs.text += one.text;
      const auto body = one.csv.find('\n');
      packs.csv += header ? one.csv : one.csv.substr(body + 1);
      header = false;
      for (auto& f : one.failures) packs.failures.push_back(s.letters() + (fill ? " filled: " : " unfilled: ") + f);
    }
  }
  append(out, "packings", std::move(packs));
  if (cfg.output_path) write_file(*cfg.output_path / "report.json", out.render(OutputFormat::Json));
  return out;
}

}  // namespace compack
