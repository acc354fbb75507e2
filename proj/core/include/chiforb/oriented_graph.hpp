#pragma once

#include <utility>
#include <vector>

#include "chiforb/bits.hpp"
#include "chiforb/errors.hpp"

namespace chiforb {

using Arc = std::pair<int, int>;

// Process-wide cap on graph order, default 512. The CLI maps the CHIFORB_CAP
// environment variable onto set_vertex_cap().
int vertex_cap();
void set_vertex_cap(int cap);

// Loop-free, digon-free digraph with dense per-vertex neighbourhood bitsets in
// both directions. Immutable after creation; all algorithms are free functions
// over const references.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  // Throws LoopArc / DigonArc / VertexOutOfRange naming the offending pair,
  // TooLarge when n exceeds vertex_cap(). Duplicate arcs collapse to one.
  static OrientedGraph create(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  int arc_count() const { return int(arcs_.size()); }

  // Lexicographically sorted.
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(int u, int v) const { return out_[u].test(v); }
  bool adjacent(int u, int v) const { return und_[u].test(v); }

  const Bits& out(int v) const { return out_[v]; }
  const Bits& in(int v) const { return in_[v]; }
  const Bits& und(int v) const { return und_[v]; }

  int out_degree(int v) const { return out_[v].count(); }
  int in_degree(int v) const { return in_[v].count(); }
  int degree(int v) const { return und_[v].count(); }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Bits> out_, in_, und_;
};

struct InducedSubgraph {
  OrientedGraph graph;
  // vertices[i] is the original vertex that became vertex i.
  std::vector<int> vertices;
};

// verts need not be sorted; the subgraph keeps their relative order.
InducedSubgraph induced_subgraph(const OrientedGraph& g,
                                 const std::vector<int>& verts);

// Reverse every arc.
OrientedGraph converse(const OrientedGraph& g);

bool is_tournament(const OrientedGraph& g);
bool is_acyclic(const OrientedGraph& g);

// True when the underlying graph is connected (n == 0 counts as connected).
bool is_connected(const OrientedGraph& g);

// Underlying-graph connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> weak_components(const OrientedGraph& g);

}  // namespace chiforb
