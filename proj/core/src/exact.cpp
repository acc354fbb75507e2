#include "chiforb/exact.hpp"

#include <algorithm>
#include <array>

#include "chiforb/detect.hpp"

namespace chiforb {

namespace {

void check_cap(const OrientedGraph& g, int cap) {
  if (g.n() > cap)
    throw Error(ErrorCode::TooLarge, "exact solver capped at " +
                                         std::to_string(cap) +
                                         " vertices, got " +
                                         std::to_string(g.n()));
}

// Shared branch-and-bound skeleton for chi and tri. "conflicts(v, c)" decides
// whether giving v colour c is legal against the current partial assignment.
struct ExactSearch {
  const OrientedGraph& g;
  // vertices that actually constrain anything, in original indices
  std::vector<int> verts;
  std::vector<int> cur, best_assign;
  int best;  // number of colours of the best complete assignment found
  int lower;

  explicit ExactSearch(const OrientedGraph& g_) : g(g_) {}

  virtual ~ExactSearch() = default;
  virtual bool conflicts(int v, int c) const = 0;

  // Number of distinct colours already blocked for v; DSATUR selection key.
  int saturation(int v, int used) const {
    int s = 0;
    for (int c = 0; c < used; ++c) s += conflicts(v, c);
    return s;
  }

  void dfs(int assigned, int used) {
    if (used >= best) return;
    if (assigned == int(verts.size())) {
      best = used;
      best_assign = cur;
      return;
    }
    // pick uncoloured vertex: max saturation, then max degree, then least
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v : verts) {
      if (cur[v] >= 0) continue;
      int s = saturation(v, used);
      int d = g.degree(v);
      if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
        pick = v;
        pick_sat = s;
        pick_deg = d;
      }
    }
    const int limit = std::min(used + 1, best - 1);
    for (int c = 0; c < limit; ++c) {
      if (conflicts(pick, c)) continue;
      cur[pick] = c;
      dfs(assigned + 1, std::max(used, c + 1));
      cur[pick] = -1;
      if (best == lower) return;
    }
  }

  // Greedy pass in the fixed vertex order for the initial upper bound.
  void greedy_seed() {
    for (int v : verts) {
      int c = 0;
      while (conflicts(v, c)) ++c;
      cur[v] = c;
    }
    int used = 0;
    for (int v : verts) used = std::max(used, cur[v] + 1);
    best = used;
    best_assign = cur;
    for (int v : verts) cur[v] = -1;
  }
};

struct ChiSearch : ExactSearch {
  explicit ChiSearch(const OrientedGraph& g_) : ExactSearch(g_) {}
  bool conflicts(int v, int c) const override {
    for (int w = g.und(v).first(); w >= 0; w = g.und(v).next(w + 1))
      if (cur[w] == c) return true;
    return false;
  }
};

struct TriSearch : ExactSearch {
  // triangles_at[v] lists the other two corners of each triangle through v.
  std::vector<std::vector<std::array<int, 2>>> triangles_at;

  explicit TriSearch(const OrientedGraph& g_) : ExactSearch(g_) {
    triangles_at.resize(g.n());
    for (int u = 0; u < g.n(); ++u)
      for (int v = g.und(u).next(u + 1); v >= 0; v = g.und(u).next(v + 1)) {
        Bits common = g.und(u) & g.und(v);
        for (int w = common.next(v + 1); w >= 0; w = common.next(w + 1)) {
          triangles_at[u].push_back({v, w});
          triangles_at[v].push_back({u, w});
          triangles_at[w].push_back({u, v});
        }
      }
  }

  bool conflicts(int v, int c) const override {
    for (auto [x, y] : triangles_at[v])
      if (cur[x] == c && cur[y] == c) return true;
    return false;
  }
};

}  // namespace

ExactColoring chi_exact_full(const OrientedGraph& g, int cap) {
  check_cap(g, cap);
  ExactColoring out;
  out.coloring.mode = ColoringMode::Proper;
  out.coloring.assignment.assign(g.n(), 0);
  if (g.n() == 0) return out;

  ChiSearch s(g);
  s.verts.resize(g.n());
  for (int v = 0; v < g.n(); ++v) s.verts[v] = v;
  // high-degree-first static order helps both seeds and branching
  std::stable_sort(s.verts.begin(), s.verts.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  s.cur.assign(g.n(), -1);
  s.lower = clique_number(g);
  s.greedy_seed();
  if (s.best > s.lower) s.dfs(0, 0);

  out.value = s.best;
  out.coloring.assignment = s.best_assign;
  out.coloring.num_colors = s.best;
  return out;
}

ExactColoring tri_exact_full(const OrientedGraph& g, int cap) {
  check_cap(g, cap);
  ExactColoring out;
  out.coloring.mode = ColoringMode::TriangleFree;
  out.coloring.assignment.assign(g.n(), 0);
  if (g.n() == 0) return out;

  TriSearch s(g);
  for (int v = 0; v < g.n(); ++v)
    if (!s.triangles_at[v].empty()) s.verts.push_back(v);
  if (s.verts.empty()) {
    out.value = 1;
    out.coloring.num_colors = 1;
    return out;
  }
  std::stable_sort(s.verts.begin(), s.verts.end(), [&](int a, int b) {
    return s.triangles_at[a].size() > s.triangles_at[b].size();
  });
  s.cur.assign(g.n(), -1);
  s.lower = 2;  // a triangle exists, one colour cannot work
  s.greedy_seed();
  if (s.best > s.lower) s.dfs(0, 0);

  out.value = s.best;
  for (int v = 0; v < g.n(); ++v)
    out.coloring.assignment[v] = std::max(s.best_assign[v], 0);
  out.coloring.num_colors = s.best;
  return out;
}

GraphInvariants invariants(const OrientedGraph& g, int cap) {
  GraphInvariants inv;
  inv.chi = chi_exact(g, cap);
  inv.tri = tri_exact(g, cap);
  inv.trans = trans_number(g);
  inv.omega = clique_number(g);
  if (inv.trans > inv.omega || inv.tri > inv.chi || inv.chi > g.n())
    throw Error(ErrorCode::StructureViolation,
                "invariant cross-check failed: chi=" + std::to_string(inv.chi) +
                    " tri=" + std::to_string(inv.tri) +
                    " trans=" + std::to_string(inv.trans) +
                    " omega=" + std::to_string(inv.omega));
  return inv;
}

}  // namespace chiforb
