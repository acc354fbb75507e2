#pragma once

#include <array>
#include <utility>
#include <vector>

#include "chiforb/coloring.hpp"
#include "chiforb/detect.hpp"
#include "chiforb/oriented_graph.hpp"

namespace chiforb {

// Constructive colourings for the graph classes with structural theorems.
// Each routine validates its class precondition and throws NotInClass with a
// witness embedding otherwise. StructureViolation means a structural fact the
// construction relies on failed at runtime; the instance is then worth
// keeping, so the error carries a JSON witness.

// Every out-neighbourhood has size <= 1 (no TT3, no out-star S(0,2)), so each
// weak component is an in-forest hanging off at most one directed cycle.
// Colours the cycle with 2 or 3 colours and extends outward; never more
// than 3.
Coloring color_out_star_free(const OrientedGraph& g);

// Connected with no TT3 and no S(1,1): when C3-free every vertex is a source
// or a sink (2 colours), otherwise the graph is an extension of C3
// (3 colours).
Coloring color_s11(const OrientedGraph& g);

// Classes of vertices around a directed odd cycle: classes[i] holds cycle[i]
// and the vertices whose only cycle in-neighbour is cycle[i-1] and only cycle
// out-neighbour is cycle[i+1]. Arcs run only between cyclically consecutive
// classes.
struct TwinPartition {
  std::vector<int> cycle;
  std::vector<std::vector<int>> classes;
};

// Partition the given scope (which must contain the cycle) into twin classes,
// throwing StructureViolation when some vertex fits no class or an arc joins
// non-consecutive classes.
TwinPartition build_twin_partition(const OrientedGraph& g,
                                   const std::vector<int>& cycle,
                                   const std::vector<int>& scope);

// No C3, TT3 or P+(2,1): in every initial strong component with an odd hole,
// the first twin class is removed into a stable set S that meets every odd
// cycle; the rest is 2-coloured, S gets the third colour.
Coloring color_c3_tt3_p21(const OrientedGraph& g);

// Strong, no TT3 or P+(2,1), with a directed odd hole of length >= 7: the
// graph is an extension of the hole, coloured cyclically 0,1,0,1,...,2.
Coloring color_strong_7hole(const OrientedGraph& g,
                            const HoleCertificate& hole);

// Vertex classes around a directed 5-hole h[0..4] (indices mod 5, entry i
// refers to h[i]):
//   a[i]: arcs h[i-1]->v, v->h[i+1], v->h[i+3]
//   b[i]: arcs h[i-1]->v, h[i+2]->v, v->h[i+1]
//   c[i]: arcs h[i-1]->v, v->h[i+1] and nothing else
struct FiveHoleClassification {
  std::array<int, 5> hole{};
  std::array<std::vector<int>, 5> a, b, c;
};

// Strong, no TT3 or P+(2,1), with a directed 5-hole: classifies every outside
// vertex into the a/b/c classes and emits the fixed four-colour schema
// (colours 0..3):
//   hole:  h0=0 h1=1 h2=2 h3=3 h4=1
//   colour 0: a[0] b[0] c[0] a[3] b[1]
//   colour 1: a[4] c[4]
//   colour 2: a[2] b[2] c[2] b[4]
//   colour 3: a[1] b[3] c[3]
//   c[1]: colour 3 when it has a neighbour in c[4], else colour 1
std::pair<Coloring, FiveHoleClassification> color_strong_5hole(
    const OrientedGraph& g, const HoleCertificate& hole);

// Full pipeline for graphs with no TT3 or P+(2,1), components handled
// independently. Components without odd holes fall back to the exact solver
// with the 4-colour bound asserted; otherwise the unique initial strong
// component is coloured by the 7-hole or 5-hole routine and the colouring is
// extended layer by layer. At most 4 colours, at most 3 on components whose
// holes have length >= 7.
Coloring color_tt3_p21(const OrientedGraph& g);

// 2-colouring of a graph without odd cycles in the underlying sense; throws
// OddCycleFound carrying an explicit odd cycle otherwise.
Coloring color_bipartite_no_odd_cycle(const OrientedGraph& g);

}  // namespace chiforb
