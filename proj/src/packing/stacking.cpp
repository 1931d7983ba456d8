#include "compack/packing/stacking.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "compack/errors.hpp"

namespace compack {

bool StackingSequence::is_valid(std::string_view text) {
  if (text.size() < 2) return false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] < 'A' || text[k] > 'C' || text[k] == text[(k + 1) % text.size()]) return false;
  }
  return true;
}

StackingSequence StackingSequence::parse(std::string_view text) {
  std::string letters;
  for (char c : text) {
    const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u != 'A' && u != 'B' && u != 'C') throw DegenerateInput("stacking letters are A, B and C");
    letters += u;
  }
  if (letters.size() < 2) throw DegenerateInput("a stacking sequence needs at least two layers");
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] == letters[(k + 1) % letters.size()]) {
      throw DegenerateInput("consecutive layers " + std::string(text) + " coincide");
    }
  }
  return StackingSequence(std::move(letters));
}

StackingSequence StackingSequence::primitive() const {
  const std::size_t n = letters_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t k = p; k < n && repeats; ++k) repeats = letters_[k] == letters_[k - p];
    if (repeats) return StackingSequence(letters_.substr(0, p));
  }
  return *this;
}

std::string StackingSequence::canonical() const {
  const std::string base = primitive().letters();
  const std::string rev(base.rbegin(), base.rend());
  std::array<char, 3> perm{'A', 'B', 'C'};
  std::string best;
  do {
    for (const std::string& s : {base, rev}) {
      for (std::size_t shift = 0; shift < s.size(); ++shift) {
        std::string t;
        for (std::size_t k = 0; k < s.size(); ++k) t += perm[static_cast<std::size_t>(s[(shift + k) % s.size()] - 'A')];
        if (best.empty() || t < best) best = t;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string StackingSequence::layer_types() const {
  const std::size_t n = letters_.size();
  std::string out;
  for (std::size_t k = 0; k < n; ++k) out += letters_[(k + n - 1) % n] == letters_[(k + 1) % n] ? 'h' : 'c';
  return out;
}

bool equivalent(const StackingSequence& a, const StackingSequence& b) { return a.canonical() == b.canonical(); }

std::vector<StackingSequence> enumerate_stackings(int min_len, int max_len) {
  std::vector<StackingSequence> out;
  for (int n = std::max(min_len, 2); n <= max_len; ++n) {
    std::string s(static_cast<std::size_t>(n), 'A');
    for (;;) {
      if (StackingSequence::is_valid(s)) out.push_back(StackingSequence::parse(s));
      int k = n - 1;
      while (k >= 0 && s[static_cast<std::size_t>(k)] == 'C') s[static_cast<std::size_t>(k--)] = 'A';
      if (k < 0) break;
      ++s[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

std::vector<StackingSequence> distinct_stackings(int min_len, int max_len) {
  std::vector<StackingSequence> out;
  std::set<std::string> seen;
  for (const auto& s : enumerate_stackings(min_len, max_len)) {
    if (seen.insert(s.canonical()).second) out.push_back(s);
  }
  return out;
}

}  // namespace compack
