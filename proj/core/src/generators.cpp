#include "chiforb/generators.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "chiforb/detect.hpp"
#include "chiforb/errors.hpp"
#include "chiforb/structure.hpp"

namespace chiforb {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
  return double(next() >> 11) * 0x1.0p-53;
}

SplitMix64 SplitMix64::split(std::uint64_t stream) const {
  SplitMix64 g(state_ + 0x9E3779B97F4A7C15ull * (stream + 1));
  return SplitMix64(g.next());
}

OrientedGraph oriented_path(const std::vector<int>& blocks) {
  if (blocks.empty())
    throw Error(ErrorCode::BadSpec, "oriented path needs at least one block");
  int total = 0;
  for (int b : blocks) {
    if (b < 1)
      throw Error(ErrorCode::BadSpec, "path block lengths must be positive");
    total += b;
  }
  std::vector<Arc> arcs;
  int pos = 0;
  bool fwd = true;
  for (int b : blocks) {
    for (int i = 0; i < b; ++i, ++pos)
      arcs.push_back(fwd ? Arc{pos, pos + 1} : Arc{pos + 1, pos});
    fwd = !fwd;
  }
  return OrientedGraph::create(total + 1, std::move(arcs));
}

OrientedGraph shift_graph(int k, int n) {
  if (k < 1 || k >= n)
    throw Error(ErrorCode::BadSpec, "shift graph needs 1 <= k < n");
  // C(n,k) with an early cap check
  long long count = 1;
  for (int i = 1; i <= k; ++i) {
    count = count * (n - k + i) / i;
    if (count > vertex_cap())
      throw Error(ErrorCode::TooLarge,
                  "shift graph would have more than " +
                      std::to_string(vertex_cap()) + " vertices");
  }
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  std::map<std::vector<int>, int> index;
  while (true) {
    index.emplace(cur, int(subsets.size()));
    subsets.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  std::vector<Arc> arcs;
  std::vector<int> succ(k);
  for (int a = 0; a < int(subsets.size()); ++a) {
    std::copy(subsets[a].begin() + 1, subsets[a].end(), succ.begin());
    for (int x = subsets[a][k - 1] + 1; x < n; ++x) {
      succ[k - 1] = x;
      arcs.push_back({a, index.at(succ)});
    }
  }
  return OrientedGraph::create(int(subsets.size()), std::move(arcs));
}

OrientedGraph line_digraph(const OrientedGraph& d) {
  const auto& arcs = d.arcs();
  std::vector<Arc> out;
  for (int i = 0; i < int(arcs.size()); ++i) {
    const int v = arcs[i].second;
    for (int w = d.out(v).first(); w >= 0; w = d.out(v).next(w + 1)) {
      auto it = std::lower_bound(arcs.begin(), arcs.end(), Arc{v, w});
      out.push_back({i, int(it - arcs.begin())});
    }
  }
  return OrientedGraph::create(int(arcs.size()), std::move(out));
}

OrientedGraph two_pentagon_gadget() {
  std::vector<Arc> arcs;
  auto v = [](int j) { return j % 5; };
  auto u = [](int j) { return 5 + j % 5; };
  for (int j = 0; j < 5; ++j) {
    arcs.push_back({v(j), v(j + 1)});
    arcs.push_back({u(j), u(j + 1)});
    arcs.push_back({v(j + 4), u(j)});
    arcs.push_back({u(j), v(j + 1)});
    arcs.push_back({u(j), v(j + 3)});
  }
  return OrientedGraph::create(10, std::move(arcs));
}

AugmentedGraph augment_with_dominator(const OrientedGraph& d) {
  if (!is_acyclic(d))
    throw Error(ErrorCode::NotAcyclic, "dominator augmentation needs an acyclic input");
  const int x = d.n();
  std::vector<Arc> arcs = d.arcs();
  for (int v = 0; v < d.n(); ++v)
    arcs.push_back(d.in_degree(v) == 0 ? Arc{x, v} : Arc{v, x});
  OrientedGraph g = OrientedGraph::create(d.n() + 1, std::move(arcs));
  const bool strong = scc(g).components.size() == 1;
  return {std::move(g), strong};
}

OrientedGraph random_orientation(int n, double p, SplitMix64& rng) {
  if (n < 0) throw Error(ErrorCode::BadSpec, "negative vertex count");
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::BadSpec, "edge probability outside [0,1]");
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform01() >= p) continue;
      arcs.push_back((rng.next() & 1) ? Arc{v, u} : Arc{u, v});
    }
  return OrientedGraph::create(n, std::move(arcs));
}

OrientedGraph random_f_free(int n, double p, std::uint64_t seed,
                            const std::vector<PatternKind>& forbid,
                            int max_tries) {
  SplitMix64 rng(seed);
  OrientedGraph g = random_orientation(n, p, rng);
  if (forbid.empty()) return g;
  for (int deletions = 0;; ++deletions) {
    auto hit = find_forbidden(g, forbid);
    if (!hit) return g;
    const auto& pat_arcs = forbid[hit->pattern_index].graph().arcs();
    if (pat_arcs.empty())
      throw Error(ErrorCode::BudgetExhausted,
                  "forbidden pattern " + hit->pattern_name +
                      " has no arc to delete");
    if (deletions >= max_tries)
      throw Error(ErrorCode::BudgetExhausted,
                  "repair budget of " + std::to_string(max_tries) +
                      " deletions exhausted");
    Arc least{-1, -1};
    for (auto [a, b] : pat_arcs) {
      Arc cand{hit->embedding[a], hit->embedding[b]};
      if (least.first < 0 || cand < least) least = cand;
    }
    std::vector<Arc> arcs = g.arcs();
    arcs.erase(std::remove(arcs.begin(), arcs.end(), least), arcs.end());
    g = OrientedGraph::create(g.n(), std::move(arcs));
  }
}

OrientedGraph generate(const GenSpec& spec) {
  using K = GenSpec::Kind;
  switch (spec.kind) {
    case K::TT:
      return PatternKind::tt(spec.n).graph();
    case K::Cycle:
      return PatternKind::directed_cycle(spec.n).graph();
    case K::Star:
      return PatternKind::star(spec.k, spec.l).graph();
    case K::PathBlocks:
      return oriented_path(spec.blocks);
    case K::DK:
      return PatternKind::dk(spec.n).graph();
    case K::Shift:
      return shift_graph(spec.k, spec.n);
    case K::LineOf:
      if (!spec.inner)
        throw Error(ErrorCode::BadSpec, "line spec without an inner spec");
      return line_digraph(generate(*spec.inner));
    case K::Gadget10:
      return two_pentagon_gadget();
    case K::Random: {
      SplitMix64 rng(spec.seed);
      return random_orientation(spec.n, spec.p, rng);
    }
    case K::RandomFFree:
      return random_f_free(spec.n, spec.p, spec.seed, spec.forbid,
                           spec.max_tries);
  }
  throw Error(ErrorCode::BadSpec, "unknown generator kind");
}

}  // namespace chiforb
