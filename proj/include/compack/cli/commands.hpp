#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "compack/io/export.hpp"
#include "compack/packing/stacking.hpp"

namespace compack {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& name);

struct RunConfig {
  long precision_bits = 64;
  OutputFormat format = OutputFormat::Text;
  long node_budget = 1'000'000;
  std::optional<std::filesystem::path> output_path;

  /// Throws DegenerateInput unless precision_bits >= 64 and node_budget > 0.
  void validate() const;
  CertifyOptions certify_options() const;
};

/// A command's findings in the three output formats, plus the outcome of
/// every check against the expected results.
struct CommandResult {
  Json report = Json::object();
  std::string text;
  std::string csv;
  std::vector<std::string> failures;

  bool reproduced() const { return failures.empty(); }
  std::string render(OutputFormat f) const;
};

CommandResult cmd_radii(const RunConfig& cfg);

/// Large or small necklaces at the certified radius named by `r_word` (a
/// skew word such as "1111"), or at every certified radius when empty.
CommandResult cmd_necklaces(const RunConfig& cfg, AngleContext ctx, const std::string& r_word = "");

CommandResult cmd_shells(const RunConfig& cfg);

CommandResult cmd_pack(const RunConfig& cfg, const StackingSequence& seq, bool fill);

/// Every stage in order, ending with both packings of each stacking of
/// period at most `max_period`.
CommandResult cmd_all(const RunConfig& cfg, int max_period = 6);

}  // namespace compack
