#pragma once

#include <span>
#include <vector>

#include "gtshift/canonical.hpp"
#include "gtshift/tree.hpp"

namespace gtshift {

/// Kelmans transformation on a tree edge uv: v's other neighbors move to u.
struct KelmansMove {
  Vertex u;
  Vertex v;
};

/// Generalized tree shift. `path` is the u..v tree path whose interior
/// vertices all have degree 2; `w` is the neighbor of v on it (possibly u).
struct GtsMove {
  Vertex u;
  Vertex v;
  std::vector<Vertex> path;
  Vertex w;

  bool operator==(const GtsMove&) const = default;
};

Tree kelmans(const Tree& t, KelmansMove m);

/// Contracts the non-pendant edge e into its lower label z and hangs the
/// freed higher label off z as a new pendant.
Tree collapse_and_pendant(const Tree& t, Edge e);

/// Every ordered pair (u, v) admitting a shift, sorted by (u, v).
std::vector<GtsMove> enumerate_gts_moves(const Tree& t);

/// Builds and validates the move for the pair (u, v).
GtsMove make_gts_move(const Tree& t, Vertex u, Vertex v);

/// Throws InvalidMove unless m satisfies the shift preconditions on t.
void validate_move(const Tree& t, const GtsMove& m);

/// Moves N(v) \ {w} from v to u. Improper moves are allowed and return a tree
/// isomorphic to t.
Tree gts(const Tree& t, const GtsMove& m);

/// Neither endpoint is pendant.
bool is_proper(const Tree& t, const GtsMove& m);

struct Preimage {
  Tree source;
  GtsMove move;
};

/// All (T, m) in `universe` with m proper for T and gts(T, m) isomorphic to
/// `image`. Every universe tree must have the same order as `image`.
std::vector<Preimage> gts_preimages(const Tree& image,
                                    std::span<const Tree> universe);

/// Isomorphism classes reachable from P_n by one collapse_and_pendant,
/// deduplicated and sorted.
std::vector<CanonicalCode> one_step_collapse_images(int n);

}  // namespace gtshift
