#pragma once

#include <compare>
#include <span>
#include <vector>

namespace gtshift {

using Vertex = int;

// Undirected edge; Tree stores every edge with a < b.
struct Edge {
  Vertex a;
  Vertex b;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable labeled tree on vertices 0..n-1.
///
/// Construction validates the edge list: labels in range, no self-loops or
/// duplicates, exactly n-1 edges, acyclic and connected. Each failure is
/// reported with its own ErrorKind.
class Tree {
 public:
  static Tree from_edges(int n, std::span<const Edge> edges);

  static Tree path(int n);
  static Tree star(int n);
  /// Hub 0 with legs of the given lengths.
  static Tree spider(std::span<const int> legs);
  /// Adjacent centers 0 and 1 carrying `left` and `right` leaves.
  static Tree double_star(int left, int right);

  int order() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool is_pendant(Vertex v) const { return degree(v) == 1; }
  bool has_edge(Vertex a, Vertex b) const;
  int pendant_count() const;

  /// Vertex sequence of the unique a-b path, both endpoints included.
  std::vector<Vertex> path_between(Vertex a, Vertex b) const;

  bool operator==(const Tree& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  Tree(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

}  // namespace gtshift
