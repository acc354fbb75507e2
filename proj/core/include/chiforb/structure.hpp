#pragma once

#include <vector>

#include "chiforb/oriented_graph.hpp"

namespace chiforb {

struct SccDecomposition {
  // Components in a topological order of the condensation (arcs go from
  // lower-index components to higher), each sorted by vertex.
  std::vector<std::vector<int>> components;
  // component_of[v] indexes into components.
  std::vector<int> component_of;
  // initial[c] is true when no arc enters component c from outside.
  std::vector<bool> initial;
};

SccDecomposition scc(const OrientedGraph& g);

enum class Direction { Forward, Backward };

// Vertices reachable from S by dipaths (Forward follows arcs, Backward
// follows them against orientation). Contains S itself.
Bits reach(const OrientedGraph& g, const std::vector<int>& sources,
           Direction dir);

struct LayerDecomposition {
  // layer[i] = vertices at directed distance i from the base set; layer[0] is
  // the base itself. Only reachable vertices appear.
  std::vector<std::vector<int>> layers;
  std::vector<int> layer_of;  // -1 for unreachable vertices
  // Arcs from a higher layer to a strictly lower one. Forward arcs can never
  // skip a layer, so every arc is within a layer, to the next, or listed here.
  std::vector<Arc> backward_arcs;
  std::vector<int> unreachable;
};

LayerDecomposition layers(const OrientedGraph& g, const std::vector<int>& base);

}  // namespace chiforb
