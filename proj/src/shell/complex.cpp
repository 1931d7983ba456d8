#include "compack/shell/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

#include "compack/errors.hpp"

namespace compack {

namespace {

// succ[v][a] = b for every face (v, a, b) rotated to start at v.
std::vector<std::map<int, int>> link_successors(int n, const std::vector<ShellComplex::Face>& faces) {
  std::vector<std::map<int, int>> succ(static_cast<std::size_t>(n));
  for (const auto& f : faces) {
    for (int k = 0; k < 3; ++k) {
      const int v = f[static_cast<std::size_t>(k)];
      const int a = f[static_cast<std::size_t>((k + 1) % 3)];
      const int b = f[static_cast<std::size_t>((k + 2) % 3)];
      succ[static_cast<std::size_t>(v)][a] = b;
    }
  }
  return succ;
}

std::vector<std::map<int, int>> invert(const std::vector<std::map<int, int>>& succ) {
  std::vector<std::map<int, int>> pred(succ.size());
  for (std::size_t v = 0; v < succ.size(); ++v) {
    for (const auto& [a, b] : succ[v]) pred[v][b] = a;
  }
  return pred;
}

struct Traversal {
  std::vector<int> code;
  std::vector<int> order;  // order[k] = original vertex numbered k
};

Traversal traverse(const std::vector<char>& labels, const std::vector<std::map<int, int>>& step, int start, int ref0) {
  const std::size_t n = labels.size();
  std::vector<int> number(n, -1), ref(n, -1);
  Traversal t;
  std::queue<int> queue;
  number[static_cast<std::size_t>(start)] = 0;
  ref[static_cast<std::size_t>(start)] = ref0;
  t.order.push_back(start);
  queue.push(start);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    const auto& rot = step[static_cast<std::size_t>(x)];
    t.code.push_back(labels[static_cast<std::size_t>(x)] == 'L' ? 1 : 2);
    int y = ref[static_cast<std::size_t>(x)];
    for (std::size_t k = 0; k < rot.size(); ++k) {
      auto& ny = number[static_cast<std::size_t>(y)];
      if (ny < 0) {
        ny = static_cast<int>(t.order.size());
        ref[static_cast<std::size_t>(y)] = x;
        t.order.push_back(y);
        queue.push(y);
      }
      t.code.push_back(ny + 3);
      y = rot.at(y);
    }
    t.code.push_back(0);
  }
  return t;
}

}  // namespace

ShellComplex::ShellComplex(std::vector<char> labels, std::vector<Face> faces)
    : labels_(std::move(labels)), faces_(std::move(faces)) {
  for (char c : labels_) {
    if (c != 'L' && c != 'S') throw DegenerateInput(std::string("shell vertex label must be L or S, got ") + c);
  }
  for (const auto& f : faces_) {
    for (int v : f) {
      if (v < 0 || v >= vertex_count()) throw DegenerateInput("shell face refers to a missing vertex");
    }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) throw DegenerateInput("shell face with a repeated vertex");
  }
}

int ShellComplex::count(char label) const { return static_cast<int>(std::count(labels_.begin(), labels_.end(), label)); }

std::vector<std::pair<int, int>> ShellComplex::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& f : faces_) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[static_cast<std::size_t>(k)];
      const int b = f[static_cast<std::size_t>((k + 1) % 3)];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int ShellComplex::edge_count() const { return static_cast<int>(edges().size()); }

bool ShellComplex::adjacent(int a, int b) const {
  const auto e = edges();
  return std::binary_search(e.begin(), e.end(), std::make_pair(std::min(a, b), std::max(a, b)));
}

bool ShellComplex::is_closed() const {
  std::map<std::pair<int, int>, int> darts;
  for (const auto& f : faces_) {
    for (int k = 0; k < 3; ++k) ++darts[{f[static_cast<std::size_t>(k)], f[static_cast<std::size_t>((k + 1) % 3)]}];
  }
  for (const auto& [d, uses] : darts) {
    if (uses != 1) return false;
    if (!darts.count({d.second, d.first})) return false;
  }
  return true;
}

std::vector<int> ShellComplex::rotation(int v) const {
  const auto succ = link_successors(vertex_count(), faces_);
  const auto& s = succ[static_cast<std::size_t>(v)];
  if (s.empty()) return {};
  std::vector<int> out;
  int x = s.begin()->first;
  for (std::size_t k = 0; k < s.size(); ++k) {
    out.push_back(x);
    const auto it = s.find(x);
    if (it == s.end()) return {};
    x = it->second;
  }
  if (x != out.front()) return {};
  return out;
}

std::optional<NecklaceWord> ShellComplex::link_word(int v) const {
  const auto rot = rotation(v);
  if (rot.size() < 3) return std::nullopt;
  std::string letters;
  for (int u : rot) letters += labels_[static_cast<std::size_t>(u)];
  return NecklaceWord::parse(letters);
}

bool ShellComplex::is_complete() const {
  if (labels_.empty() || !is_closed() || euler_characteristic() != 2) return false;
  for (int v = 0; v < vertex_count(); ++v) {
    if (rotation(v).size() < 3) return false;
  }
  // Connectivity: a traversal from vertex 0 reaches everything.
  const auto succ = link_successors(vertex_count(), faces_);
  const auto t = traverse(labels_, succ, 0, succ[0].begin()->first);
  return static_cast<int>(t.order.size()) == vertex_count();
}

namespace {

std::pair<Traversal, int> best_traversal(const std::vector<char>& labels, const std::vector<ShellComplex::Face>& faces) {
  const auto succ = link_successors(static_cast<int>(labels.size()), faces);
  const auto pred = invert(succ);
  std::optional<Traversal> best;
  int best_orientation = 1;
  for (int orientation : {1, -1}) {
    const auto& step = orientation > 0 ? succ : pred;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      for (const auto& [u, unused] : step[v]) {
        auto t = traverse(labels, step, static_cast<int>(v), u);
        if (!best || t.code < best->code) {
          best = std::move(t);
          best_orientation = orientation;
        }
      }
    }
  }
  if (!best) return {Traversal{}, 1};
  return {std::move(*best), best_orientation};
}

}  // namespace

std::vector<int> ShellComplex::canonical_code() const {
  if (!is_complete()) throw DegenerateInput("canonical form needs a complete shell");
  return best_traversal(labels_, faces_).first.code;
}

ShellComplex ShellComplex::canonical_form() const {
  if (!is_complete()) throw DegenerateInput("canonical form needs a complete shell");
  const auto [t, orientation] = best_traversal(labels_, faces_);
  std::vector<int> number(labels_.size());
  std::vector<char> labels;
  for (std::size_t k = 0; k < t.order.size(); ++k) {
    number[static_cast<std::size_t>(t.order[k])] = static_cast<int>(k);
    labels.push_back(labels_[static_cast<std::size_t>(t.order[k])]);
  }
  std::vector<Face> faces;
  for (const auto& f : faces_) {
    Face g{number[static_cast<std::size_t>(f[0])], number[static_cast<std::size_t>(f[1])],
           number[static_cast<std::size_t>(f[2])]};
    if (orientation < 0) std::swap(g[1], g[2]);
    std::rotate(g.begin(), std::min_element(g.begin(), g.end()), g.end());
    faces.push_back(g);
  }
  std::sort(faces.begin(), faces.end());
  return ShellComplex(std::move(labels), std::move(faces));
}

}  // namespace compack
