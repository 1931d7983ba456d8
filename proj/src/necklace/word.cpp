#include "compack/necklace/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "compack/errors.hpp"

namespace compack {

std::string to_string(AngleContext ctx) {
  switch (ctx) {
    case AngleContext::Skew: return "skew";
    case AngleContext::Large: return "large";
    case AngleContext::Small: return "small";
  }
  return "?";
}

AngleContext parse_context(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "skew") return AngleContext::Skew;
  if (lower == "large") return AngleContext::Large;
  if (lower == "small") return AngleContext::Small;
  throw DegenerateInput("unknown context '" + std::string(name) + "'");
}

std::string TripleCount::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::string canonical_cyclic(std::string_view letters) {
  const std::size_t n = letters.size();
  std::string best(letters);
  std::string reflected(letters.rbegin(), letters.rend());
  for (const std::string& base : {std::string(letters), reflected}) {
    for (std::size_t s = 0; s < n; ++s) {
      std::string rot = base.substr(s) + base.substr(0, s);
      if (rot < best) best = std::move(rot);
    }
  }
  return best;
}

NecklaceWord NecklaceWord::parse(std::string_view text) {
  if (text.empty()) throw DegenerateInput("empty necklace word");
  std::string letters;
  for (char c : text) {
    switch (c) {
      case 'L': case 'l': case '1': letters += 'L'; break;
      case 'S': case 's': case 'r': case 'R': letters += 'S'; break;
      default: throw DegenerateInput("invalid necklace letter '" + std::string(1, c) + "'");
    }
  }
  return NecklaceWord(canonical_cyclic(letters));
}

std::string NecklaceWord::digit_notation() const {
  std::string out = letters_;
  for (char& c : out) c = c == 'L' ? '1' : 'r';
  return out;
}

TripleCount NecklaceWord::pair_counts() const {
  TripleCount t;
  const std::size_t n = letters_.size();
  for (std::size_t p = 0; p < n; ++p) {
    const char a = letters_[p];
    const char b = letters_[(p + 1) % n];
    if (a == 'L' && b == 'L') {
      ++t.i;
    } else if (a == 'S' && b == 'S') {
      ++t.k;
    } else {
      ++t.j;
    }
  }
  return t;
}

std::vector<NecklaceWord> enumerate_words(int min_len, int max_len) {
  std::vector<NecklaceWord> out;
  for (int n = std::max(1, min_len); n <= max_len; ++n) {
    std::set<std::string> seen;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      std::string w(static_cast<std::size_t>(n), 'L');
      for (int p = 0; p < n; ++p) {
        if (bits & (1u << (n - 1 - p))) w[static_cast<std::size_t>(p)] = 'S';
      }
      seen.insert(canonical_cyclic(w));
    }
    for (const auto& w : seen) out.push_back(NecklaceWord::parse(w));
  }
  return out;
}

std::vector<NecklaceWord> enumerate_skew_candidates() { return enumerate_words(3, 5); }

std::vector<NecklaceWord> realize_words(const TripleCount& t) {
  std::vector<NecklaceWord> out;
  const int n = t.length();
  if (n <= 0 || t.i < 0 || t.j < 0 || t.k < 0 || t.j % 2 != 0 || n > 24) return out;
  for (const auto& w : enumerate_words(n, n)) {
    if (w.pair_counts() == t) out.push_back(w);
  }
  return out;
}

std::string AngleSumEquation::to_string() const {
  const char* symbol = context == AngleContext::Skew ? "δ" : (context == AngleContext::Large ? "δ̄" : "δ̲");
  const std::array<const char*, 3> pairs = {"1,1", "1,r", "r,r"};
  const auto n = counts.as_array();
  std::string out;
  for (std::size_t p = 0; p < 3; ++p) {
    if (n[p] == 0) continue;
    if (!out.empty()) out += " + ";
    if (n[p] != 1) out += std::to_string(n[p]);
    out += std::string(symbol) + "[" + pairs[p] + "]";
  }
  return out + " = 2π";
}

AngleSumEquation angle_sum_equation(const NecklaceWord& word, AngleContext ctx) {
  return {ctx, word.pair_counts()};
}

}  // namespace compack
