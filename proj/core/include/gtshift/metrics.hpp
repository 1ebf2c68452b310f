#pragma once

#include <vector>

#include "gtshift/matrix.hpp"
#include "gtshift/tree.hpp"

namespace gtshift {

struct TreeMetrics {
  int diameter = 0;
  std::vector<Vertex> pendant_vertices;
  IntMatrix distances;
};

TreeMetrics metrics(const Tree& t);

/// Exact distance matrix of the complement, by BFS on the explicitly built
/// complement graph. Throws ComplementDisconnected when the complement is not
/// connected (the star, and every tree with n <= 3 except n = 1).
IntMatrix complement_distances(const Tree& t);

/// Closed-form complement distances for trees of diameter >= 4: 0 on the
/// diagonal, 2 for tree edges, 1 otherwise. As a matrix this is A(T) + J - I;
/// the adjacency term enters with coefficient 1, not 2, since tree-adjacent
/// vertices are at distance exactly 2 in the complement.
IntMatrix adjacency_formula(const Tree& t);

/// Unordered pairs (i < j) where complement_distances and adjacency_formula
/// disagree.
std::vector<Edge> identity_mismatches(const Tree& t);

}  // namespace gtshift
