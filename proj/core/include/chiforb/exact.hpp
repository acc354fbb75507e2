#pragma once

#include "chiforb/coloring.hpp"
#include "chiforb/oriented_graph.hpp"

namespace chiforb {

struct ExactColoring {
  int value = 0;
  Coloring coloring;
};

// Chromatic number of the underlying graph: DSATUR-ordered branch and bound,
// clique lower bound, greedy upper bound, ties broken towards the lowest
// vertex index. Throws TooLarge above cap vertices.
ExactColoring chi_exact_full(const OrientedGraph& g, int cap = 64);
inline int chi_exact(const OrientedGraph& g, int cap = 64) {
  return chi_exact_full(g, cap).value;
}

// Least number of colours with no monochromatic underlying-graph triangle.
// Same search skeleton over the precomputed triangle list; vertices on no
// triangle are unconstrained.
ExactColoring tri_exact_full(const OrientedGraph& g, int cap = 64);
inline int tri_exact(const OrientedGraph& g, int cap = 64) {
  return tri_exact_full(g, cap).value;
}

struct GraphInvariants {
  int chi = 0;
  int tri = 0;
  int trans = 0;
  int omega = 0;
};

// All four at once; installs the cheap cross-checks (trans <= omega,
// tri <= chi <= n).
GraphInvariants invariants(const OrientedGraph& g, int cap = 64);

}  // namespace chiforb
