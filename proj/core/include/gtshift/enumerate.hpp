#pragma once

#include <vector>

#include "gtshift/tree.hpp"

namespace gtshift {

inline constexpr int kDefaultMaxOrder = 12;

/// One representative per isomorphism class of trees on n vertices, sorted by
/// canonical code. Generated as level sequences of center-rooted trees in the
/// Wright-Richmond-Odlyzko-McKay successor order.
std::vector<Tree> enumerate_trees(int n, int max_order = kDefaultMaxOrder);

}  // namespace gtshift
