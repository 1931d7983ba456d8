#include <CLI11.hpp>
#include <iostream>

#include "compack/cli/commands.hpp"

namespace {

enum Exit { kOk = 0, kReproductionFailure = 1, kUsage = 2, kExhausted = 3 };

}  // namespace

int main(int argc, char** argv) {
  using namespace compack;
  CLI::App app{"Compact packings of unit spheres and spheres of radius r: radii, necklaces, shells and packings."};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  std::string export_path;
  app.add_option("--precision-bits", cfg.precision_bits, "Initial interval precision in bits (at least 64)")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--node-budget", cfg.node_budget, "Node limit for the shell search")->capture_default_str();
  app.add_option("--export", export_path, "File or directory receiving exported data");

  auto* radii = app.add_subcommand("radii", "Skew necklace radii: candidates, elimination, certification");
  auto* necklaces = app.add_subcommand("necklaces", "Large or small necklaces at the certified radii");
  std::string context;
  std::string r_word;
  necklaces->add_option("context", context, "large or small")->required()->check(CLI::IsMember({"large", "small"}));
  necklaces->add_option("--r-word", r_word, "Skew word naming the radius, e.g. 1111 (default: every certified radius)");
  auto* shells = app.add_subcommand("shells", "Complete shells around a large sphere at r = √2 - 1");
  auto* pack = app.add_subcommand("pack", "Build a layered packing and verify it");
  std::string seq;
  bool fill = false;
  pack->add_option("--seq", seq, "Stacking sequence over A, B, C")->required();
  pack->add_flag("--fill", fill, "Fill octahedral holes with small spheres");
  auto* all = app.add_subcommand("all", "Every stage in order");
  int max_period = 6;
  all->add_option("--max-period", max_period, "Longest stacking period to verify")->capture_default_str()->check(
      CLI::Range(2, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CommandResult result;
  try {
    cfg.format = parse_format(format);
    if (!export_path.empty()) cfg.output_path = export_path;
    cfg.validate();
    if (*radii) {
      result = cmd_radii(cfg);
    } else if (*necklaces) {
      result = cmd_necklaces(cfg, parse_context(context), r_word);
    } else if (*shells) {
      result = cmd_shells(cfg);
    } else if (*pack) {
      result = cmd_pack(cfg, StackingSequence::parse(seq), fill);
    } else if (*all) {
      result = cmd_all(cfg, max_period);
    }
  } catch (const PrecisionExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExhausted;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExhausted;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::cout << result.render(cfg.format);
  return result.reproduced() ? kOk : kReproductionFailure;
}
