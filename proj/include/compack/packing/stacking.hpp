#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace compack {

/// Periodic sequence of close-packed layer positions over {A, B, C}; every
/// two cyclically consecutive layers differ.
class StackingSequence {
 public:
  /// Throws DegenerateInput on other letters, a length below 2, or two equal
  /// consecutive layers (including last and first).
  static StackingSequence parse(std::string_view text);
  /// Upper-case spelling check without throwing.
  static bool is_valid(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  char operator[](std::size_t k) const { return letters_[k]; }

  /// Shortest repeating block, e.g. AB for ABAB.
  StackingSequence primitive() const;

  /// Least spelling of the primitive block over relabellings of A/B/C,
  /// cyclic shifts and reversal; equal for sequences giving congruent packings.
  std::string canonical() const;

  /// Per layer: 'c' when its two neighbouring layers differ, 'h' when they agree.
  std::string layer_types() const;

  friend bool operator==(const StackingSequence& a, const StackingSequence& b) { return a.letters_ == b.letters_; }

 private:
  explicit StackingSequence(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

bool equivalent(const StackingSequence& a, const StackingSequence& b);

/// Every valid sequence with length in [min_len, max_len], lexicographic
/// within each length.
std::vector<StackingSequence> enumerate_stackings(int min_len, int max_len);

/// One representative per equivalence class among those sequences.
std::vector<StackingSequence> distinct_stackings(int min_len, int max_len);

}  // namespace compack
