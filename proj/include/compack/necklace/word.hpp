#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace compack {

enum class AngleContext { Skew, Large, Small };

std::string to_string(AngleContext ctx);
/// Accepts "skew", "large" or "small" (any case).
AngleContext parse_context(std::string_view name);

/// Adjacent bead pair kinds, used as indices into per-pair arrays.
enum PairType { LL = 0, LS = 1, SS = 2 };

/// Counts (i, j, k) of LL, LS (either order) and SS adjacencies around a cycle.
struct TripleCount {
  int i = 0, j = 0, k = 0;

  int length() const { return i + j + k; }
  std::array<int, 3> as_array() const { return {i, j, k}; }
  std::string to_string() const;
  auto operator<=>(const TripleCount&) const = default;
};

/// Lexicographically least spelling of a cyclic word over {L, S} among all
/// rotations and reflections.
std::string canonical_cyclic(std::string_view letters);

/// A cyclic word over {L, S}, L a bead of radius 1 and S one of radius r,
/// always held in canonical form.
class NecklaceWord {
 public:
  /// Accepts L/S or the digit notation 1/r (also s). Throws DegenerateInput
  /// on other letters or an empty word.
  static NecklaceWord parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  /// The same word spelled with 1 for L and r for S.
  std::string digit_notation() const;
  TripleCount pair_counts() const;

  auto operator<=>(const NecklaceWord&) const = default;

 private:
  explicit NecklaceWord(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Every canonical word with length in [min_len, max_len], ordered by length
/// then lexicographically.
std::vector<NecklaceWord> enumerate_words(int min_len, int max_len);

/// Candidate skew necklaces: all canonical words of length 3 to 5.
std::vector<NecklaceWord> enumerate_skew_candidates();

/// All canonical words whose adjacent-pair counts equal t; empty when none exist.
std::vector<NecklaceWord> realize_words(const TripleCount& t);

/// The symbolic equation sum over adjacent pairs of delta_pair = 2 pi.
struct AngleSumEquation {
  AngleContext context;
  TripleCount counts;
  std::string to_string() const;
};

AngleSumEquation angle_sum_equation(const NecklaceWord& word, AngleContext ctx);

}  // namespace compack
