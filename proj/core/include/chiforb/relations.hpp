#pragma once

#include <optional>
#include <vector>

#include "chiforb/oriented_graph.hpp"

namespace chiforb {

// The relation "A dominates B at scale k": no arc from B to A, and no k
// vertices of A together with k of B that span no arcs at all.
struct BipartiteRelation {
  std::vector<int> a, b;
  int k = 1;
};

struct RsViolation {
  // Exactly one of the two is meaningful: a back arc from B to A, or an
  // empty k-by-k bi-hole across (A, B).
  std::optional<Arc> back_arc;
  std::vector<int> hole_a, hole_b;
};

// Validates that A and B are disjoint (NotDisjoint) and stable (NotStable),
// then reports how the relation fails, or nullopt when it holds. Empty sides
// hold vacuously apart from trivially absent back arcs.
std::optional<RsViolation> rs_violation(const OrientedGraph& g,
                                        const BipartiteRelation& rel);

inline bool rs_check(const OrientedGraph& g, const BipartiteRelation& rel) {
  return !rs_violation(g, rel).has_value();
}

// Same relation with degree preconditions: every a in A needs at least
// tau * |B| out-neighbours in B and every b in B at least tau * |A|
// in-neighbours in A. Throws BadTau for tau outside (0, 1). Returns false
// when either the degree conditions or the relation fail.
bool rs_tau_check(const OrientedGraph& g, const BipartiteRelation& rel,
                  double tau);

}  // namespace chiforb
