#include "gtshift/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "gtshift/error.hpp"

namespace gtshift {
namespace {

// Replaces v with u as the endpoint of every edge v-z for z in `moved`.
Tree reattach(const Tree& t, Vertex from, Vertex to, std::span<const Vertex> moved) {
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (Edge e : t.edges()) {
    Vertex other = e.a == from ? e.b : e.b == from ? e.a : -1;
    if (other >= 0 && std::find(moved.begin(), moved.end(), other) != moved.end()) {
      edges.push_back({to, other});
    } else {
      edges.push_back(e);
    }
  }
  return Tree::from_edges(t.order(), edges);
}

std::vector<Vertex> neighbors_except(const Tree& t, Vertex v, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex z : t.neighbors(v)) {
    if (z != skip) out.push_back(z);
  }
  return out;
}

std::string pair_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Tree kelmans(const Tree& t, KelmansMove m) {
  if (!t.has_edge(m.u, m.v)) {
    throw Error(ErrorKind::NotAnEdge,
                "Kelmans move " + pair_str(m.u, m.v) + " is not a tree edge");
  }
  // In a tree N(u) and N(v) are disjoint, so N(v) \ (N(u) + u) = N(v) \ u.
  return reattach(t, m.v, m.u, neighbors_except(t, m.v, m.u));
}

Tree collapse_and_pendant(const Tree& t, Edge e) {
  if (!t.has_edge(e.a, e.b)) {
    throw Error(ErrorKind::NotAnEdge, "edge " + pair_str(e.a, e.b) + " is not in the tree");
  }
  if (t.degree(e.a) < 2 || t.degree(e.b) < 2) {
    throw Error(ErrorKind::PendantEdge, "edge " + pair_str(e.a, e.b) + " is pendant");
  }
  const Vertex keep = std::min(e.a, e.b);
  const Vertex freed = std::max(e.a, e.b);
  // Merging keep and freed, then hanging freed back on the merged vertex,
  // leaves exactly one edge keep-freed.
  return reattach(t, freed, keep, neighbors_except(t, freed, keep));
}

std::vector<GtsMove> enumerate_gts_moves(const Tree& t) {
  std::vector<GtsMove> moves;
  for (Vertex u = 0; u < t.order(); ++u) {
    for (Vertex first : t.neighbors(u)) {
      std::vector<Vertex> path{u, first};
      while (true) {
        const Vertex v = path.back();
        moves.push_back({u, v, path, path[path.size() - 2]});
        if (t.degree(v) != 2) break;
        // Continue through the degree-2 vertex away from where we came.
        const auto nbrs = t.neighbors(v);
        path.push_back(nbrs[0] == path[path.size() - 2] ? nbrs[1] : nbrs[0]);
      }
    }
  }
  std::sort(moves.begin(), moves.end(), [](const GtsMove& x, const GtsMove& y) {
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  return moves;
}

void validate_move(const Tree& t, const GtsMove& m) {
  const int n = t.order();
  if (m.u < 0 || m.u >= n || m.v < 0 || m.v >= n) {
    throw Error(ErrorKind::InvalidMove, "move endpoint outside the tree");
  }
  if (m.u == m.v) {
    throw Error(ErrorKind::InvalidMove, "move endpoints coincide");
  }
  if (m.path != t.path_between(m.u, m.v)) {
    throw Error(ErrorKind::InvalidMove,
                "move path is not the tree path " + pair_str(m.u, m.v));
  }
  for (std::size_t i = 1; i + 1 < m.path.size(); ++i) {
    if (t.degree(m.path[i]) != 2) {
      throw Error(ErrorKind::InvalidMove,
                  "interior vertex " + std::to_string(m.path[i]) +
                      " of the move path has degree " +
                      std::to_string(t.degree(m.path[i])));
    }
  }
  if (m.w != m.path[m.path.size() - 2]) {
    throw Error(ErrorKind::InvalidMove, "w is not the neighbor of v on the path");
  }
}

GtsMove make_gts_move(const Tree& t, Vertex u, Vertex v) {
  if (u < 0 || u >= t.order() || v < 0 || v >= t.order() || u == v) {
    throw Error(ErrorKind::InvalidMove, "invalid move endpoints " + pair_str(u, v));
  }
  GtsMove m{u, v, t.path_between(u, v), -1};
  m.w = m.path[m.path.size() - 2];
  validate_move(t, m);
  return m;
}

Tree gts(const Tree& t, const GtsMove& m) {
  validate_move(t, m);
  return reattach(t, m.v, m.u, neighbors_except(t, m.v, m.w));
}

bool is_proper(const Tree& t, const GtsMove& m) {
  validate_move(t, m);
  return !t.is_pendant(m.u) && !t.is_pendant(m.v);
}

std::vector<Preimage> gts_preimages(const Tree& image, std::span<const Tree> universe) {
  const CanonicalCode target = canonical_code(image);
  std::vector<Preimage> out;
  for (const Tree& source : universe) {
    if (source.order() != image.order()) {
      throw Error(ErrorKind::UniverseMismatch,
                  "universe tree of order " + std::to_string(source.order()) +
                      " for an image of order " + std::to_string(image.order()));
    }
    for (GtsMove& m : enumerate_gts_moves(source)) {
      if (!is_proper(source, m)) continue;
      if (canonical_code(gts(source, m)) == target) {
        out.push_back({source, std::move(m)});
      }
    }
  }
  return out;
}

std::vector<CanonicalCode> one_step_collapse_images(int n) {
  if (n < 4) {
    throw Error(ErrorKind::OrderOutOfRange, "collapse images need n >= 4");
  }
  const Tree path = Tree::path(n);
  std::set<CanonicalCode> codes;
  for (const Edge& e : path.edges()) {
    if (path.is_pendant(e.a) || path.is_pendant(e.b)) continue;
    codes.insert(canonical_code(collapse_and_pendant(path, e)));
  }
  return {codes.begin(), codes.end()};
}

}  // namespace gtshift
