#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "compack/necklace/word.hpp"

namespace compack {

/// Oriented triangulated neighborhood of a central large sphere: vertices
/// are the tangent spheres (labelled 'L' or 'S'), faces are triples of
/// mutually tangent neighbors, oriented coherently.
class ShellComplex {
 public:
  using Face = std::array<int, 3>;

  ShellComplex() = default;
  ShellComplex(std::vector<char> labels, std::vector<Face> faces);

  const std::vector<char>& labels() const { return labels_; }
  const std::vector<Face>& faces() const { return faces_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int count(char label) const;
  int edge_count() const;
  int euler_characteristic() const { return vertex_count() - edge_count() + static_cast<int>(faces_.size()); }

  /// Closed surface: every directed edge used once and every edge by two faces.
  bool is_closed() const;
  /// Closed, connected, Euler characteristic 2.
  bool is_complete() const;

  /// Neighbors of v in cyclic order following the orientation; empty unless
  /// the link of v is a single closed cycle.
  std::vector<int> rotation(int v) const;
  /// The link of v read as a cyclic word, when it is closed.
  std::optional<NecklaceWord> link_word(int v) const;

  std::vector<std::pair<int, int>> edges() const;
  bool adjacent(int a, int b) const;

  /// Lexicographically least breadth-first code over all starting darts and
  /// both orientations; equal codes iff the shells are isomorphic as
  /// labelled triangulations (mirror images identified).
  std::vector<int> canonical_code() const;

  /// Relabels vertices so that the canonical traversal visits them in order.
  ShellComplex canonical_form() const;

 private:
  std::vector<char> labels_;
  std::vector<Face> faces_;
};

struct ShellSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t complete_found = 0;  // before isomorphism reduction
  std::uint64_t dead_ends = 0;
};

struct ShellSearchOptions {
  std::uint64_t node_budget = 1'000'000;
};

/// Every complete shell, up to isomorphism, in which each L vertex's link is
/// a word of `allowed_large`, each S vertex's link a word of `allowed_small`,
/// and there are at most `kissing_bound` L vertices. The search grows a
/// triangulated disk from a seed S vertex with each allowed small link,
/// always closing the open edge with the fewest admissible completions.
/// Throws BudgetExceeded past the node budget. Output sorted by canonical code.
std::vector<ShellComplex> complete_shells(const std::set<NecklaceWord>& allowed_large,
                                          const std::set<NecklaceWord>& allowed_small, int kissing_bound,
                                          const ShellSearchOptions& opts = {}, ShellSearchStats* stats = nullptr);

}  // namespace compack
