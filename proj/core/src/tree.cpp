#include "gtshift/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gtshift/error.hpp"

namespace gtshift {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string edge_str(Edge e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

}  // namespace

Tree::Tree(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n) {
  for (const Edge& e : edges_) {
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Tree Tree::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) {
    throw Error(ErrorKind::OrderOutOfRange,
                "tree order must be positive, got " + std::to_string(n));
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (Edge e : edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
      throw Error(ErrorKind::BadLabel, "edge " + edge_str(e) +
                                           " has a label outside [0, " +
                                           std::to_string(n) + ")");
    }
    if (e.a == e.b) {
      throw Error(ErrorKind::SelfLoop, "self-loop " + edge_str(e));
    }
    if (e.a > e.b) std::swap(e.a, e.b);
    normalized.push_back(e);
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end());
      dup != normalized.end()) {
    throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + edge_str(*dup));
  }
  if (static_cast<int>(normalized.size()) != n - 1) {
    throw Error(ErrorKind::WrongEdgeCount,
                "a tree on " + std::to_string(n) + " vertices needs " +
                    std::to_string(n - 1) + " edges, got " +
                    std::to_string(normalized.size()));
  }
  DisjointSets sets(n);
  for (Edge e : normalized) {
    if (!sets.unite(e.a, e.b)) {
      throw Error(ErrorKind::Cycle, "edge " + edge_str(e) + " closes a cycle");
    }
  }
  // Unreachable once the count and cycle checks pass.
  for (int v = 1; v < n; ++v) {
    if (sets.find(v) != sets.find(0)) {
      throw Error(ErrorKind::TreeDisconnected,
                  "vertex " + std::to_string(v) + " is not connected to 0");
    }
  }
  return Tree(n, std::move(normalized));
}

Tree Tree::path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return from_edges(n, edges);
}

Tree Tree::star(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return from_edges(n, edges);
}

Tree Tree::spider(std::span<const int> legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    Vertex prev = 0;
    for (int k = 0; k < len; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return from_edges(next, edges);
}

Tree Tree::double_star(int left, int right) {
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  for (int k = 0; k < left; ++k) edges.push_back({0, next++});
  for (int k = 0; k < right; ++k) edges.push_back({1, next++});
  return from_edges(next, edges);
}

bool Tree::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Tree::pendant_count() const {
  int count = 0;
  for (Vertex v = 0; v < n_; ++v) count += is_pendant(v) ? 1 : 0;
  return count;
}

std::vector<Vertex> Tree::path_between(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) {
    throw Error(ErrorKind::BadLabel, "path endpoint outside the tree");
  }
  std::vector<Vertex> parent(n_, -1);
  std::vector<Vertex> queue{a};
  parent[a] = a;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    if (x == b) break;
    for (Vertex y : adj_[x]) {
      if (parent[y] == -1) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace gtshift
