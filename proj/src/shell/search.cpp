#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "compack/errors.hpp"
#include "compack/shell/complex.hpp"

namespace compack {

namespace {

struct LinkRules {
  std::set<std::string> cycles;  // canonical spellings
  std::set<std::string> paths;   // every linear reading of part of an allowed cycle
  std::size_t max_degree = 0;
};

LinkRules make_rules(const std::set<NecklaceWord>& words) {
  LinkRules rules;
  for (const auto& w : words) {
    const std::string& s = w.letters();
    rules.cycles.insert(s);
    rules.max_degree = std::max(rules.max_degree, s.size());
    std::string rev(s.rbegin(), s.rend());
    for (const std::string& base : {s, rev}) {
      const std::string doubled = base + base;
      for (std::size_t start = 0; start < base.size(); ++start) {
        for (std::size_t len = 1; len <= base.size(); ++len) rules.paths.insert(doubled.substr(start, len));
      }
    }
  }
  return rules;
}

using Face = ShellComplex::Face;

class Search {
 public:
  Search(const std::set<NecklaceWord>& large, const std::set<NecklaceWord>& small, int kissing_bound,
         const ShellSearchOptions& opts, ShellSearchStats& stats)
      : large_(make_rules(large)), small_(make_rules(small)), bound_(kissing_bound), opts_(opts), stats_(stats) {}

  void seed(char centre, const std::string& ring) {
    labels_.assign(1, centre);
    faces_.clear();
    succ_.assign(1, {});
    pred_.assign(1, {});
    for (char c : ring) add_vertex(c);
    const int n = static_cast<int>(ring.size());
    bool ok = true;
    for (int k = 0; k < n; ++k) ok = add_face({0, 1 + k, 1 + (k + 1) % n}) && ok;
    if (ok && count_large() <= bound_ && valid(0) && all_valid()) run();
  }

  std::map<std::vector<int>, ShellComplex> found;

 private:
  struct Move {
    int v, u, w;
    char new_label;  // 0 when w already exists
  };

  void add_vertex(char c) {
    labels_.push_back(c);
    succ_.emplace_back();
    pred_.emplace_back();
  }

  void pop_vertex() {
    labels_.pop_back();
    succ_.pop_back();
    pred_.pop_back();
  }

  bool dart_free(int x, int y) const { return !succ_[static_cast<std::size_t>(x)].count(y); }

  // Adds the face when none of its directed edges is taken yet.
  bool add_face(const Face& f) {
    for (int k = 0; k < 3; ++k) {
      if (!dart_free(f[static_cast<std::size_t>(k)], f[static_cast<std::size_t>((k + 1) % 3)])) return false;
    }
    for (int k = 0; k < 3; ++k) {
      const auto v = static_cast<std::size_t>(f[static_cast<std::size_t>(k)]);
      const int a = f[static_cast<std::size_t>((k + 1) % 3)];
      const int b = f[static_cast<std::size_t>((k + 2) % 3)];
      succ_[v][a] = b;
      pred_[v][b] = a;
    }
    faces_.push_back(f);
    return true;
  }

  void remove_last_face() {
    const Face f = faces_.back();
    faces_.pop_back();
    for (int k = 0; k < 3; ++k) {
      const auto v = static_cast<std::size_t>(f[static_cast<std::size_t>(k)]);
      const int a = f[static_cast<std::size_t>((k + 1) % 3)];
      const int b = f[static_cast<std::size_t>((k + 2) % 3)];
      succ_[v].erase(a);
      pred_[v].erase(b);
    }
  }

  int count_large() const { return static_cast<int>(std::count(labels_.begin(), labels_.end(), 'L')); }

  const LinkRules& rules_for(int v) const { return labels_[static_cast<std::size_t>(v)] == 'L' ? large_ : small_; }

  // The link of v must be one allowed closed cycle, or disjoint paths each
  // readable inside an allowed cycle.
  bool valid(int v) const {
    const auto& succ = succ_[static_cast<std::size_t>(v)];
    const auto& pred = pred_[static_cast<std::size_t>(v)];
    const LinkRules& rules = rules_for(v);
    std::set<int> neighbours;
    for (const auto& [a, b] : succ) {
      neighbours.insert(a);
      neighbours.insert(b);
    }
    if (neighbours.size() > rules.max_degree) return false;
    std::size_t covered = 0;
    for (const auto& [a, unused] : succ) {
      if (pred.count(a)) continue;
      std::string letters;
      int x = a;
      for (;;) {
        letters += labels_[static_cast<std::size_t>(x)];
        const auto it = succ.find(x);
        if (it == succ.end()) break;
        x = it->second;
      }
      covered += letters.size();
      if (!rules.paths.count(letters)) return false;
    }
    if (covered == neighbours.size()) return true;
    // What remains are cycles; only a lone cycle through every neighbour is allowed.
    if (covered != 0) return false;
    std::string letters;
    int x = succ.begin()->first;
    do {
      letters += labels_[static_cast<std::size_t>(x)];
      x = succ.at(x);
    } while (x != succ.begin()->first && letters.size() <= neighbours.size());
    return letters.size() == neighbours.size() && rules.cycles.count(canonical_cyclic(letters));
  }

  bool all_valid() const {
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
      if (!valid(v)) return false;
    }
    return true;
  }

  bool try_move(const Move& m) {
    if (m.new_label) add_vertex(m.new_label);
    bool ok = add_face({m.v, m.u, m.w});
    if (ok) {
      ok = count_large() <= bound_ && valid(m.v) && valid(m.u) && valid(m.w);
      if (!ok) remove_last_face();
    }
    if (!ok && m.new_label) pop_vertex();
    return ok;
  }

  void undo(const Move& m) {
    remove_last_face();
    if (m.new_label) pop_vertex();
  }

  std::vector<Move> candidates(int v, int u) {
    std::vector<Move> out;
    const int n = static_cast<int>(labels_.size());
    for (int w = 0; w < n; ++w) {
      if (w == v || w == u) continue;
      const Move m{v, u, w, 0};
      if (try_move(m)) {
        undo(m);
        out.push_back(m);
      }
    }
    for (char c : {'L', 'S'}) {
      const Move m{v, u, n, c};
      if (try_move(m)) {
        undo(m);
        out.push_back(m);
      }
    }
    return out;
  }

  void run() {
    if (++stats_.nodes > opts_.node_budget) {
      throw BudgetExceeded("shell search exceeded its budget of " + std::to_string(opts_.node_budget) + " nodes");
    }
    std::vector<std::pair<int, int>> open_ends;
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
      const auto& succ = succ_[static_cast<std::size_t>(v)];
      for (const auto& [a, b] : succ) {
        if (!succ.count(b)) open_ends.emplace_back(v, b);
      }
    }
    std::optional<std::vector<Move>> best;
    for (const auto& [v, u] : open_ends) {
      auto moves = candidates(v, u);
      if (!best || moves.size() < best->size()) best = std::move(moves);
      if (best->empty()) {
        ++stats_.dead_ends;
        return;
      }
    }
    if (!best) {
      record();
      return;
    }
    for (const Move& m : *best) {
      if (!try_move(m)) continue;
      run();
      undo(m);
    }
  }

  void record() {
    ShellComplex s(labels_, faces_);
    if (!s.is_complete()) {
      ++stats_.dead_ends;
      return;
    }
    ++stats_.complete_found;
    auto canon = s.canonical_form();
    auto code = canon.canonical_code();
    found.emplace(std::move(code), std::move(canon));
  }

  LinkRules large_, small_;
  int bound_;
  ShellSearchOptions opts_;
  ShellSearchStats& stats_;
  std::vector<char> labels_;
  std::vector<Face> faces_;
  std::vector<std::map<int, int>> succ_, pred_;
};

}  // namespace

std::vector<ShellComplex> complete_shells(const std::set<NecklaceWord>& allowed_large,
                                          const std::set<NecklaceWord>& allowed_small, int kissing_bound,
                                          const ShellSearchOptions& opts, ShellSearchStats* stats) {
  if (kissing_bound < 3) throw DegenerateInput("kissing bound must be at least 3");
  ShellSearchStats local;
  ShellSearchStats& st = stats ? *stats : local;
  st = {};
  Search search(allowed_large, allowed_small, kissing_bound, opts, st);
  for (const auto& w : allowed_small) search.seed('S', w.letters());
  // Shells without small vertices are reachable only from an all-large link.
  for (const auto& w : allowed_large) {
    if (w.letters().find('S') == std::string::npos) search.seed('L', w.letters());
  }
  std::vector<ShellComplex> out;
  for (auto& [code, shell] : search.found) out.push_back(std::move(shell));
  return out;
}

}  // namespace compack
