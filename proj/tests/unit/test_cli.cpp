#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "compack/cli/commands.hpp"
#include "compack/shell/complex.hpp"

using namespace compack;

namespace {

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("compack_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("run configuration") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.precision_bits = 32;
  CHECK_THROWS_AS(cfg.validate(), DegenerateInput);
  cfg.precision_bits = 128;
  cfg.node_budget = 0;
  CHECK_THROWS_AS(cfg.validate(), DegenerateInput);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), DegenerateInput);
}

TEST_CASE("radii command") {
  const auto r = cmd_radii(RunConfig{});
  CHECK(r.reproduced());
  CHECK(r.report["candidate_count"] == 18);
  CHECK(r.report["prefilter_count"] == 16);
  CHECK(r.report["certified"].size() == 10);
  CHECK(lines(r.render(OutputFormat::Csv)) == 11);
  const auto& first = r.report["certified"][0];
  CHECK(first["word"] == "11111");
  CHECK(first["minpoly"] == Json::array({1, -6, 1, 4, 1}));
  CHECK(first["approx"] == "0.902113");
  CHECK(r.render(OutputFormat::Json) == cmd_radii(RunConfig{}).render(OutputFormat::Json));
}

TEST_CASE("necklace command") {
  const auto large = cmd_necklaces(RunConfig{}, AngleContext::Large, "1111");
  CHECK(large.reproduced());
  CHECK(large.report["radii"][0]["words"] == Json::array({"LLLSLS", "LLSLLS"}));
  CHECK(large.report["radii"][0]["certified"] == Json::array({"(2,4,0)"}));
  const auto none = cmd_necklaces(RunConfig{}, AngleContext::Large, "11111");
  CHECK(none.reproduced());
  CHECK(none.report["radii"][0]["words"].empty());
  const auto small = cmd_necklaces(RunConfig{}, AngleContext::Small, "11rr");
  CHECK(small.report["radii"][0]["words"] == Json::array({"LLSS"}));
  CHECK(cmd_necklaces(RunConfig{}, AngleContext::Small).reproduced());
  CHECK_THROWS_AS(cmd_necklaces(RunConfig{}, AngleContext::Large, "1r1r"), DegenerateInput);
  CHECK_THROWS_AS(cmd_necklaces(RunConfig{}, AngleContext::Skew), DegenerateInput);
}

TEST_CASE("shells command and exports") {
  RunConfig cfg;
  cfg.output_path = scratch("shells");
  const auto r = cmd_shells(cfg);
  CHECK(r.reproduced());
  REQUIRE(r.report["shells"].size() == 2);
  std::set<std::string> shapes;
  for (const auto& s : r.report["shells"]) {
    shapes.insert(s["shape"].get<std::string>());
    CHECK(s["violations"].empty());
  }
  CHECK(shapes == std::set<std::string>{"cuboctahedron", "triangular_orthobicupola"});
  int off = 0;
  for (const auto& e : std::filesystem::directory_iterator(*cfg.output_path)) off += e.path().extension() == ".off";
  CHECK(off == 2);

  // Exact coordinates read back from the JSON export.
  const Json j = Json::parse(slurp(*cfg.output_path / "shell_cuboctahedron.json"));
  CHECK(j["coordinates"].size() == 18);
  for (std::size_t v = 0; v < 18; ++v) {
    Vec3 x;
    for (int k = 0; k < 3; ++k) {
      const auto& c = j["coordinates"][v][static_cast<std::size_t>(k)];
      x(k) = Biquadratic(Rational(c[0].get<std::string>()), Rational(c[1].get<std::string>()),
                         Rational(c[2].get<std::string>()), Rational(c[3].get<std::string>()));
    }
    const Biquadratic expected = j["labels"][v] == "L" ? Biquadratic(4) : Biquadratic(Rational(2));
    CHECK(squared_norm(x) == expected);
  }

  RunConfig tight;
  tight.node_budget = 5;
  CHECK_THROWS_AS(cmd_shells(tight), BudgetExceeded);
}

TEST_CASE("pack command") {
  const auto filled = cmd_pack(RunConfig{}, StackingSequence::parse("ABC"), true);
  CHECK(filled.reproduced());
  CHECK(filled.report["verdict"] == "compact");
  CHECK(filled.report["ratio_to_close_packing"] == "-6 + 5√2");
  CHECK(filled.report["metrics"]["density_exact"] == "π(5/3 - √2)");
  const auto interval = filled.report["metrics"]["density_interval"];
  CHECK(interval[0].get<double>() == doctest::Approx(0.79311).epsilon(1e-5));

  const auto bare = cmd_pack(RunConfig{}, StackingSequence::parse("ABC"), false);
  CHECK(bare.reproduced());
  CHECK(bare.report["verdict"] == "not_compact");
  CHECK(bare.report["metrics"]["density_interval"][0].get<double>() == doctest::Approx(0.74048).epsilon(1e-5));
  CHECK(lines(bare.render(OutputFormat::Csv)) == 2);

  const auto mixed = cmd_pack(RunConfig{}, StackingSequence::parse("ABAC"), true);
  CHECK(mixed.report["shells"]["cuboctahedron"] == 2);
  CHECK(mixed.report["shells"]["triangular_orthobicupola"] == 2);
}

TEST_CASE("pack exports") {
  RunConfig cfg;
  cfg.precision_bits = 128;
  cfg.output_path = scratch("pack");
  cmd_pack(cfg, StackingSequence::parse("AB"), true);
  const std::string xyz = slurp(*cfg.output_path / "AB_filled.xyz");
  CHECK(lines(xyz) == 2 + 4);
  CHECK(xyz.rfind("4\nLattice=\"2 0 0 1 1.73205080756887729352744634150587236694 0", 0) == 0);
  CHECK(xyz.find("\nL 1 0.577350269189625764509148780501957455648 1.63299316185545206546485604980392759464 1 "
                 "# exact x=(1,0,0,0) y=(0,0,1/3,0) z=(0,0,0,2/3) r=(1,0,0,0)\n") != std::string::npos);
  CHECK(xyz.find("r=(-1,1,0,0)") != std::string::npos);

  const std::string off = slurp(*cfg.output_path / "AB_filled_tiling.off");
  std::istringstream in(off);
  std::string magic, comment;
  std::getline(in, magic);
  std::getline(in, comment);
  int nv = 0, nf = 0, ne = 0;
  in >> nv >> nf >> ne;
  CHECK(magic == "OFF");
  CHECK(nf == 4 * (4 + 16));
  CHECK(lines(off) == static_cast<std::size_t>(3 + nv + nf));

  const Json m = Json::parse(slurp(*cfg.output_path / "AB_filled_metrics.json"));
  CHECK(m["counts"]["large"] == 2);
  CHECK(m["counts"]["small"] == 2);
  CHECK(m["simplex_census"]["SLLL"] == 16);
}

TEST_CASE("decimal formatting") {
  CHECK(decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(decimal(Biquadratic(0, 1, 0, 0), 10) == "1.414213562");
  CHECK(approx_decimal(AlgebraicReal(Rational(7, 10)), 3) == "0.700");
  CHECK(digits_for_bits(64) == 20);
  CHECK(poly_json(make_poly({2, -4, 6})) == Json::array({1, -2, 3}));
}
