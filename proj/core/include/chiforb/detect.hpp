#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chiforb/oriented_graph.hpp"
#include "chiforb/patterns.hpp"

namespace chiforb {

// embedding[p] = host vertex playing pattern vertex p.
using Embedding = std::vector<int>;

// True when emb is an induced copy: arcs and non-adjacencies both match.
bool embedding_valid(const OrientedGraph& host, const OrientedGraph& pattern,
                     const Embedding& emb);

// Generic induced-subgraph search. Pattern vertices are matched in index
// order with host candidates tried ascending, so the result is the
// lexicographically least embedding. Throws PatternTooLarge above
// pattern_cap vertices.
std::optional<Embedding> find_induced(const OrientedGraph& host,
                                      const OrientedGraph& pattern,
                                      int pattern_cap = 12);

struct ForbiddenWitness {
  int pattern_index;  // position in the forbid list
  std::string pattern_name;
  Embedding embedding;
};

// First pattern of the list found in host, scanning the list in order.
std::optional<ForbiddenWitness> find_forbidden(
    const OrientedGraph& host, const std::vector<PatternKind>& forbid);

inline bool is_f_free(const OrientedGraph& host,
                      const std::vector<PatternKind>& forbid) {
  return !find_forbidden(host, forbid).has_value();
}

// Largest induced transitive tournament. Searched as ordered clique chains:
// every next vertex is an out-neighbour of all chosen ones.
int trans_number(const OrientedGraph& g);

// Clique number of the underlying graph, branch and bound.
int clique_number(const OrientedGraph& g);

struct HoleCertificate {
  // Cyclic vertex sequence of an induced odd cycle, length >= 5, starting at
  // its least vertex. When directed, arcs run cycle[i] -> cycle[i+1].
  std::vector<int> cycle;
  bool directed = false;
  int length() const { return int(cycle.size()); }
};

// First induced odd cycle of length >= min_len in the underlying graph,
// found by growing induced paths from each least vertex and closing them.
// Throws TooLarge above 64 vertices. nullopt iff no such hole exists.
std::optional<HoleCertificate> find_odd_hole(const OrientedGraph& g,
                                             int min_len = 5);

// Visit every induced odd cycle of length >= min_len once. Stop early by
// returning false from the callback.
void enumerate_odd_holes(const OrientedGraph& g, int min_len,
                         const std::function<bool(const HoleCertificate&)>& cb);

// Specialized single-pattern detectors. Each agrees with find_induced on
// existence; embeddings follow the respective pattern's vertex layout.
std::optional<Embedding> find_tt3(const OrientedGraph& g);
std::optional<Embedding> find_c3(const OrientedGraph& g);
std::optional<Embedding> find_p_plus_3(const OrientedGraph& g);
std::optional<Embedding> find_p_plus_21(const OrientedGraph& g);
std::optional<Embedding> find_p_minus_21(const OrientedGraph& g);
std::optional<Embedding> find_p_plus_111(const OrientedGraph& g);
std::optional<Embedding> find_star(const OrientedGraph& g, int k, int l);

}  // namespace chiforb
