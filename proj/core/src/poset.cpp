#include "gtshift/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gtshift/enumerate.hpp"
#include "gtshift/error.hpp"
#include "gtshift/metrics.hpp"
#include "gtshift/transforms.hpp"

namespace gtshift::verify {

std::size_t GtsPoset::index_of(const CanonicalCode& code) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), code);
  if (it == nodes.end() || *it != code) {
    throw Error(ErrorKind::UniverseMismatch, "tree class not in the poset");
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<std::size_t> GtsPoset::in_degrees() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const auto& [from, to] : edges) ++deg[to];
  return deg;
}

std::vector<std::size_t> GtsPoset::out_degrees() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const auto& [from, to] : edges) ++deg[from];
  return deg;
}

std::vector<std::size_t> GtsPoset::sources() const {
  std::vector<std::size_t> out;
  const auto deg = in_degrees();
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> GtsPoset::sinks() const {
  std::vector<std::size_t> out;
  const auto deg = out_degrees();
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == 0) out.push_back(i);
  return out;
}

std::vector<bool> GtsPoset::reachable_from(std::size_t start) const {
  std::vector<bool> seen(nodes.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& [from, to] : edges) {
      if (from == x && !seen[to]) {
        seen[to] = true;
        stack.push_back(to);
      }
    }
  }
  return seen;
}

std::pair<int, int> GtsPoset::path_length_range(std::size_t from, std::size_t to) const {
  // Edges raise the pendant count, so ascending pendant count is a
  // topological order.
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pendant_counts[a] < pendant_counts[b];
  });
  constexpr int kUnset = -1;
  std::vector<int> shortest(nodes.size(), kUnset), longest(nodes.size(), kUnset);
  shortest[from] = longest[from] = 0;
  for (std::size_t x : order) {
    if (shortest[x] == kUnset) continue;
    for (const auto& [a, b] : edges) {
      if (a != x) continue;
      if (shortest[b] == kUnset || shortest[x] + 1 < shortest[b]) shortest[b] = shortest[x] + 1;
      longest[b] = std::max(longest[b], longest[x] + 1);
    }
  }
  return {shortest[to], longest[to]};
}

std::string GtsPoset::to_dot() const {
  const CanonicalCode path_code = canonical_code(Tree::path(n));
  const CanonicalCode star_code = canonical_code(Tree::star(n));
  std::ostringstream out;
  out << "digraph gts_poset_n" << n << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  t" << i << " [label=\"";
    if (nodes[i] == path_code) {
      out << "P" << n << "\\n";
    } else if (nodes[i] == star_code) {
      out << "K1," << n - 1 << "\\n";
    }
    out << "pendants=" << pendant_counts[i] << "\", code=\"" << nodes[i].hex()
        << "\"];\n";
  }
  for (const auto& [from, to] : edges) out << "  t" << from << " -> t" << to << ";\n";
  out << "}\n";
  return out.str();
}

GtsPoset build_poset(int n, int max_order) {
  if (n < 4 || n > max_order) {
    throw Error(ErrorKind::OrderOutOfRange,
                "poset order " + std::to_string(n) + " outside [4, " +
                    std::to_string(max_order) + "]");
  }
  GtsPoset poset;
  poset.n = n;
  poset.trees = enumerate_trees(n, max_order);
  for (const Tree& t : poset.trees) {
    poset.nodes.push_back(canonical_code(t));
    poset.pendant_counts.push_back(t.pendant_count());
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < poset.trees.size(); ++i) {
    const Tree& t = poset.trees[i];
    for (const GtsMove& m : enumerate_gts_moves(t)) {
      if (!is_proper(t, m)) continue;
      edges.emplace(i, poset.index_of(canonical_code(gts(t, m))));
    }
  }
  poset.edges.assign(edges.begin(), edges.end());
  return poset;
}

}  // namespace gtshift::verify
