#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "gtshift/tree.hpp"

namespace gtshift {

// Edge-list file: first line n, then n-1 lines "u v" with u < v.
Tree read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Tree& t);

// Tree-set file: one JSON object per line, {"n":..,"edges":[[u,v],..],"code":"<hex>"}.
void write_tree_set(std::ostream& out, std::span<const Tree> trees);
std::vector<Tree> read_tree_set(std::istream& in);

}  // namespace gtshift
