#pragma once

#include <cstdint>
#include <vector>

#include "chiforb/coloring.hpp"
#include "chiforb/oriented_graph.hpp"
#include "chiforb/patterns.hpp"

namespace chiforb {

struct SearchJob {
  std::vector<PatternKind> forbid;
  int target_chi = 2;  // >= 2
  int n = 8;
  std::uint64_t seed = 0;
  int budget = 2000;  // total mutation steps, > 0
  double p = 0.3;     // density of restart samples
  int workers = 1;
};

struct SearchResult {
  OrientedGraph best;
  Coloring best_coloring;  // optimal colouring of best
  int best_chi = 0;
  bool found = false;  // best_chi >= target_chi
  long long evaluations = 0;
  int restarts = 0;
};

// Random-restart hill climb maximizing the exact chromatic number over
// graphs kept free of `forbid`. The budget is split into restarts of at most
// 250 steps; restart r draws its stream from split(seed, r), mutates by arc
// insertion / deletion / reversal followed by the deterministic repair of
// random_f_free, and accepts any candidate at least as good. Results are
// merged in restart order (higher chi wins, ties to the lexicographically
// least (n, arcs)), so the outcome does not depend on the worker count.
SearchResult run_search(const SearchJob& job);

}  // namespace chiforb
