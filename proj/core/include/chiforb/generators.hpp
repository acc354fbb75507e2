#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chiforb/oriented_graph.hpp"
#include "chiforb/patterns.hpp"

namespace chiforb {

// splitmix64/v1. 64-bit state; next() adds 0x9E3779B97F4A7C15 to the state
// and finalizes with xor-shift-multiply rounds (0xBF58476D1CE4E5B9,
// 0x94D049BB133111EB). uniform01() = (next() >> 11) * 2^-53. split(k) derives
// an independent stream: seed' = next value of a generator started at
// state + 0x9E3779B97F4A7C15 * (k + 1). Fixed here so seeds reproduce across
// implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // uniform in [0,1), 53 bits
  double uniform01();
  SplitMix64 split(std::uint64_t stream) const;

 private:
  std::uint64_t state_;
};

struct GenSpec {
  enum class Kind {
    TT,          // transitive tournament, needs n
    Cycle,       // directed cycle, needs n >= 3
    Star,        // in/out star, needs k, l
    PathBlocks,  // oriented path, block lengths in `blocks`, first forward
    DK,          // complete bipartite, all arcs left to right, needs n
    Shift,       // shift graph on k-subsets of {0..n-1}
    LineOf,      // line digraph of `inner`
    Gadget10,    // two linked pentagons, 10 vertices
    Random,      // random orientation of G(n,p)
    RandomFFree  // Random followed by deterministic repair against `forbid`
  };

  Kind kind;
  int n = 0;
  int k = 0;
  int l = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::vector<int> blocks;
  std::vector<PatternKind> forbid;
  int max_tries = 1000;
  std::shared_ptr<const GenSpec> inner;
};

// Dispatch on spec.kind. Deterministic for a fixed spec including the seed.
// Throws BadSpec on invalid parameters.
OrientedGraph generate(const GenSpec& spec);

// Oriented path with the given block lengths; blocks alternate direction and
// the first one points forward. PathBlocks({2,1}) is the path a->b->c<-d.
OrientedGraph oriented_path(const std::vector<int>& blocks);

// Vertices are the k-subsets of {0..n-1} in lexicographic order; arc a->b iff
// dropping a's first element and b's last leaves the same (k-1)-chain and
// a's last element is below b's. shift_graph(1,n) is TT_n. Needs 1 <= k < n.
OrientedGraph shift_graph(int k, int n);

// Vertices = arcs of d in lexicographic order; one arc per directed 2-walk.
OrientedGraph line_digraph(const OrientedGraph& d);

// Two directed pentagons v0..v4 and u0..u4 with cross arcs v[i-1]->u[i],
// u[i]->v[i+1], u[i]->v[i+3] (mod 5). 10 vertices, 25 arcs.
OrientedGraph two_pentagon_gadget();

struct AugmentedGraph {
  OrientedGraph graph;
  bool strong;  // augmentation does not guarantee strength; it is reported
};

// Adds a vertex x with x->s for every source s and v->x for every non-source
// v. Input must be acyclic (NotAcyclic otherwise).
AugmentedGraph augment_with_dominator(const OrientedGraph& d);

// Random orientation of G(n,p): every unordered pair u<v in lexicographic
// order draws uniform01() < p for presence, then one bit of next() for
// direction (0: u->v).
OrientedGraph random_orientation(int n, double p, SplitMix64& rng);

// random_orientation followed by repair: while some forbidden pattern embeds
// (patterns scanned in the given order, embeddings in lexicographic order),
// delete the lexicographically least arc of the least embedding. Throws
// BudgetExhausted after max_tries deletions, or when the offending embedding
// has no arc to delete.
OrientedGraph random_f_free(int n, double p, std::uint64_t seed,
                            const std::vector<PatternKind>& forbid,
                            int max_tries = 1000);

}  // namespace chiforb
