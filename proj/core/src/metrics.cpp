#include "gtshift/metrics.hpp"

#include <algorithm>

#include "gtshift/error.hpp"

namespace gtshift {
namespace {

// All-pairs BFS over adjacency lists. Unreachable entries stay -1.
IntMatrix all_pairs_bfs(const std::vector<std::vector<Vertex>>& adj) {
  const int n = static_cast<int>(adj.size());
  IntMatrix dist(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    queue.assign(1, s);
    dist(s, s) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : adj[x]) {
        if (dist(s, y) < 0) {
          dist(s, y) = dist(s, x) + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

}  // namespace

TreeMetrics metrics(const Tree& t) {
  const int n = t.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v].assign(t.neighbors(v).begin(), t.neighbors(v).end());
  }
  TreeMetrics m;
  m.distances = all_pairs_bfs(adj);
  for (int d : m.distances.data()) m.diameter = std::max(m.diameter, d);
  for (Vertex v = 0; v < n; ++v) {
    if (t.is_pendant(v)) m.pendant_vertices.push_back(v);
  }
  return m;
}

IntMatrix complement_distances(const Tree& t) {
  const int n = t.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b && !t.has_edge(a, b)) adj[a].push_back(b);
    }
  }
  IntMatrix dist = all_pairs_bfs(adj);
  for (int d : dist.data()) {
    if (d < 0) {
      throw Error(ErrorKind::ComplementDisconnected,
                  "complement of the tree is disconnected");
    }
  }
  return dist;
}

IntMatrix adjacency_formula(const Tree& t) {
  const int n = t.order();
  IntMatrix m(n, 1);
  for (int i = 0; i < n; ++i) m(i, i) = 0;
  for (const Edge& e : t.edges()) {
    m(e.a, e.b) = 2;
    m(e.b, e.a) = 2;
  }
  return m;
}

std::vector<Edge> identity_mismatches(const Tree& t) {
  const IntMatrix bfs = complement_distances(t);
  const IntMatrix formula = adjacency_formula(t);
  std::vector<Edge> out;
  for (int i = 0; i < t.order(); ++i) {
    for (int j = i + 1; j < t.order(); ++j) {
      if (bfs(i, j) != formula(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

}  // namespace gtshift
