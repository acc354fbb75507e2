#include "chiforb/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "chiforb/detect.hpp"
#include "chiforb/errors.hpp"
#include "chiforb/exact.hpp"
#include "chiforb/generators.hpp"

namespace chiforb {

namespace {

constexpr int kRestartSteps = 250;

struct RestartOutcome {
  OrientedGraph graph;
  Coloring coloring;
  int chi = 0;
  long long evaluations = 0;
};

// Delete the least arc of the least embedding until no forbidden pattern
// embeds; same repair rule as random_f_free, so mutations stay in class.
OrientedGraph repair(OrientedGraph g, const std::vector<PatternKind>& forbid) {
  while (auto w = find_forbidden(g, forbid)) {
    const auto& pat_arcs = forbid[w->pattern_index].graph().arcs();
    if (pat_arcs.empty())
      throw Error(ErrorCode::BudgetExhausted,
                  "forbidden pattern " + w->pattern_name +
                      " has no arc to delete");
    Arc least{-1, -1};
    for (auto [a, b] : pat_arcs) {
      Arc cand{w->embedding[a], w->embedding[b]};
      if (least.first < 0 || cand < least) least = cand;
    }
    std::vector<Arc> arcs = g.arcs();
    arcs.erase(std::remove(arcs.begin(), arcs.end(), least), arcs.end());
    g = OrientedGraph::create(g.n(), std::move(arcs));
  }
  return g;
}

RestartOutcome run_restart(const SearchJob& job, int r, int steps) {
  SplitMix64 rng = SplitMix64(job.seed).split(std::uint64_t(r));
  OrientedGraph cur =
      random_f_free(job.n, job.p, rng.next(), job.forbid, 100000);
  RestartOutcome out{cur, {}, 0, 0};
  auto cur_full = chi_exact_full(cur);
  ++out.evaluations;
  int cur_chi = cur_full.value;
  out.graph = cur;
  out.coloring = cur_full.coloring;
  out.chi = cur_chi;

  const int n = job.n;
  for (int step = 0; step < steps; ++step) {
    std::vector<Arc> arcs = cur.arcs();
    const int kind = int(rng.next() % 3);
    bool changed = false;
    if (kind == 0 || arcs.empty()) {
      // insert a random missing pair, in a random direction
      for (int attempt = 0; attempt < 10 && !changed; ++attempt) {
        int u = int(rng.next() % std::uint64_t(n));
        int v = int(rng.next() % std::uint64_t(n));
        if (u == v || cur.adjacent(u, v)) continue;
        if (rng.next() & 1) std::swap(u, v);
        arcs.push_back({u, v});
        changed = true;
      }
    } else {
      const int i = int(rng.next() % arcs.size());
      if (kind == 1) {
        arcs.erase(arcs.begin() + i);
      } else {
        arcs[i] = {arcs[i].second, arcs[i].first};
      }
      changed = true;
    }
    if (!changed) continue;
    OrientedGraph cand =
        repair(OrientedGraph::create(n, std::move(arcs)), job.forbid);
    auto full = chi_exact_full(cand);
    ++out.evaluations;
    if (full.value >= cur_chi) {
      cur = std::move(cand);
      cur_chi = full.value;
      if (cur_chi > out.chi ||
          (cur_chi == out.chi && cur.arcs() < out.graph.arcs())) {
        out.graph = cur;
        out.coloring = full.coloring;
        out.chi = cur_chi;
      }
    }
  }
  return out;
}

bool better(const RestartOutcome& a, const RestartOutcome& b) {
  if (a.chi != b.chi) return a.chi > b.chi;
  if (a.graph.n() != b.graph.n()) return a.graph.n() < b.graph.n();
  return a.graph.arcs() < b.graph.arcs();
}

}  // namespace

SearchResult run_search(const SearchJob& job) {
  if (job.target_chi < 2)
    throw Error(ErrorCode::BadSpec, "target chi must be at least 2");
  if (job.budget < 1) throw Error(ErrorCode::BadSpec, "budget must be positive");
  if (job.n < 1) throw Error(ErrorCode::BadSpec, "n must be positive");

  const int restarts = (job.budget + kRestartSteps - 1) / kRestartSteps;
  const int per = (job.budget + restarts - 1) / restarts;
  std::vector<RestartOutcome> slots(restarts);

  const int workers = std::max(1, std::min(job.workers, restarts));
  std::atomic<int> next_restart{0};
  auto work = [&]() {
    for (int r = next_restart++; r < restarts; r = next_restart++)
      slots[r] = run_restart(job, r, per);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  int best = 0;
  long long evals = 0;
  for (int r = 0; r < restarts; ++r) {
    evals += slots[r].evaluations;
    if (r > 0 && better(slots[r], slots[best])) best = r;
  }
  SearchResult res{std::move(slots[best].graph),
                   std::move(slots[best].coloring),
                   slots[best].chi,
                   slots[best].chi >= job.target_chi,
                   evals,
                   restarts};
  return res;
}

}  // namespace chiforb
