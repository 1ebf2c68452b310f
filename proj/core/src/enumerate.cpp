#include "gtshift/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "gtshift/canonical.hpp"
#include "gtshift/error.hpp"

namespace gtshift {
namespace {

// A level sequence lists vertex depths in preorder, root first at depth 0.
using Levels = std::vector<int>;

// Successor of a rooted-tree level sequence, or nullopt after the last one.
// With p given, the sequence is advanced at position p.
std::optional<Levels> next_rooted(const Levels& prev, std::optional<int> p_in = {}) {
  int p = p_in ? *p_in : static_cast<int>(prev.size()) - 1;
  if (!p_in) {
    while (p > 0 && prev[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (prev[q] != prev[p] - 1) --q;
  Levels out = prev;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

// Splits at the second depth-1 vertex: `left` is the first root subtree
// (depths shifted to start at 0), `rest` is the root with the remaining ones.
void split(const Levels& levels, Levels& left, Levels& rest) {
  std::size_t m = levels.size();
  bool one_found = false;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(levels[i] - 1);
  rest.assign(1, 0);
  for (std::size_t i = m; i < levels.size(); ++i) rest.push_back(levels[i]);
}

// Advances a candidate until it is the canonical center-rooted form of a
// free tree.
std::optional<Levels> next_free(Levels candidate) {
  Levels left, rest;
  split(candidate, left, rest);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const int p = static_cast<int>(left.size());
  auto advanced = next_rooted(candidate, p);
  if (!advanced) return std::nullopt;
  if (candidate[p] > 2) {
    Levels new_left, new_rest;
    split(*advanced, new_left, new_rest);
    const int height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t tail = static_cast<std::size_t>(height) + 1;
    for (std::size_t k = 0; k < tail; ++k) {
      (*advanced)[advanced->size() - tail + k] = static_cast<int>(k) + 1;
    }
  }
  return advanced;
}

Tree levels_to_tree(const Levels& levels) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) edges.push_back({stack.back(), static_cast<Vertex>(i)});
    stack.push_back(static_cast<Vertex>(i));
  }
  return Tree::from_edges(static_cast<int>(levels.size()), edges);
}

}  // namespace

std::vector<Tree> enumerate_trees(int n, int max_order) {
  if (n < 1 || n > max_order) {
    throw Error(ErrorKind::OrderOutOfRange,
                "tree order " + std::to_string(n) + " outside [1, " +
                    std::to_string(max_order) + "]");
  }
  std::vector<Tree> trees;
  if (n == 1) {
    trees.push_back(Tree::from_edges(1, {}));
    return trees;
  }
  // Start from the path rooted at its center.
  Levels levels;
  for (int i = 0; i <= n / 2; ++i) levels.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) levels.push_back(i);

  std::optional<Levels> current = levels;
  while (current) {
    current = next_free(std::move(*current));
    if (!current) break;
    trees.push_back(levels_to_tree(*current));
    current = next_rooted(*current);
  }

  std::vector<std::pair<CanonicalCode, std::size_t>> keyed;
  keyed.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    keyed.emplace_back(canonical_code(trees[i]), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Tree> sorted;
  sorted.reserve(trees.size());
  for (const auto& [code, i] : keyed) sorted.push_back(trees[i]);
  return sorted;
}

}  // namespace gtshift
