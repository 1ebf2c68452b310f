#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gtshift/canonical.hpp"
#include "gtshift/tree.hpp"

namespace gtshift::verify {

/// Isomorphism classes of n-vertex trees with an edge T -> T1 whenever T1 is
/// the image of T under some proper generalized tree shift.
struct GtsPoset {
  int n = 0;
  std::vector<CanonicalCode> nodes;  // sorted, indexes match `trees`
  std::vector<Tree> trees;
  std::vector<int> pendant_counts;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, unique

  std::size_t index_of(const CanonicalCode& code) const;
  std::vector<std::size_t> in_degrees() const;
  std::vector<std::size_t> out_degrees() const;
  std::vector<std::size_t> sources() const;
  std::vector<std::size_t> sinks() const;
  std::vector<bool> reachable_from(std::size_t start) const;
  /// Shortest and longest directed path lengths between two nodes, or -1.
  std::pair<int, int> path_length_range(std::size_t from, std::size_t to) const;

  std::string to_dot() const;
};

GtsPoset build_poset(int n, int max_order = 12);

}  // namespace gtshift::verify
