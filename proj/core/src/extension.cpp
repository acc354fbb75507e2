#include "chiforb/extension.hpp"

#include <algorithm>
#include <map>

namespace chiforb {

OrientedGraph blow_up(const OrientedGraph& pattern,
                      const std::vector<int>& sizes) {
  if (int(sizes.size()) != pattern.n())
    throw Error(ErrorCode::SizeMismatch,
                std::to_string(sizes.size()) + " sizes for a pattern on " +
                    std::to_string(pattern.n()) + " vertices");
  for (int s : sizes)
    if (s < 0)
      throw Error(ErrorCode::SizeMismatch, "negative class size");
  std::vector<int> offset(pattern.n() + 1, 0);
  for (int i = 0; i < pattern.n(); ++i) offset[i + 1] = offset[i] + sizes[i];
  std::vector<Arc> arcs;
  for (auto [p, q] : pattern.arcs())
    for (int x = offset[p]; x < offset[p + 1]; ++x)
      for (int y = offset[q]; y < offset[q + 1]; ++y) arcs.push_back({x, y});
  return OrientedGraph::create(offset.back(), std::move(arcs));
}

std::optional<ExtensionWitness> is_extension_of(const OrientedGraph& host,
                                                const OrientedGraph& pattern) {
  // Group host vertices by neighbourhood signature. Same signature implies
  // non-adjacency (an arc inside a group would be a loop in the signature),
  // and any valid class is a single group: class membership determines the
  // full neighbourhood.
  std::map<std::pair<Bits, Bits>, std::vector<int>> groups_by_sig;
  for (int v = 0; v < host.n(); ++v)
    groups_by_sig[{host.in(v), host.out(v)}].push_back(v);

  std::vector<std::vector<int>> groups;
  for (auto& [sig, vs] : groups_by_sig) groups.push_back(vs);
  const int m = int(groups.size());
  if (m > pattern.n()) return std::nullopt;

  // arc_between[a][b]: 0 none, 1 complete a->b, 2 complete b->a, -1 invalid.
  std::vector<std::vector<int>> rel(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int fwd = 0, bwd = 0;
      for (int x : groups[a])
        for (int y : groups[b]) {
          if (host.has_arc(x, y)) ++fwd;
          if (host.has_arc(y, x)) ++bwd;
        }
      const int full = int(groups[a].size() * groups[b].size());
      int r;
      if (fwd == 0 && bwd == 0)
        r = 0;
      else if (fwd == full && bwd == 0)
        r = 1;
      else if (bwd == full && fwd == 0)
        r = 2;
      else
        r = -1;
      rel[a][b] = r;
      rel[b][a] = r == 1 ? 2 : (r == 2 ? 1 : r);
    }

  // Backtracking injection groups -> pattern vertices.
  std::vector<int> assign(m, -1);
  std::vector<char> used(pattern.n(), 0);
  auto compatible = [&](int grp, int pv) {
    for (int other = 0; other < m; ++other) {
      if (assign[other] < 0 || other == grp) continue;
      int want;
      if (pattern.has_arc(pv, assign[other]))
        want = 1;
      else if (pattern.has_arc(assign[other], pv))
        want = 2;
      else
        want = 0;
      if (rel[grp][other] != want) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int grp) -> bool {
    if (grp == m) return true;
    for (int pv = 0; pv < pattern.n(); ++pv) {
      if (used[pv]) continue;
      if (!compatible(grp, pv)) continue;
      assign[grp] = pv;
      used[pv] = 1;
      if (self(self, grp + 1)) return true;
      assign[grp] = -1;
      used[pv] = 0;
    }
    return false;
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (rel[a][b] == -1) return std::nullopt;
  if (!dfs(dfs, 0)) return std::nullopt;

  ExtensionWitness w;
  w.classes.assign(pattern.n(), {});
  for (int grp = 0; grp < m; ++grp) w.classes[assign[grp]] = groups[grp];
  return w;
}

}  // namespace chiforb
