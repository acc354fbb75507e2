#include "chiforb/oriented_graph.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace chiforb {

namespace {
std::atomic<int> g_vertex_cap{512};

std::string arc_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}
}  // namespace

int vertex_cap() { return g_vertex_cap.load(); }
void set_vertex_cap(int cap) { g_vertex_cap.store(cap); }

OrientedGraph OrientedGraph::create(int n, std::vector<Arc> arcs) {
  if (n < 0 || n > vertex_cap())
    throw Error(ErrorCode::TooLarge,
                "graph order " + std::to_string(n) + " outside [0, " +
                    std::to_string(vertex_cap()) + "]");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  OrientedGraph g;
  g.n_ = n;
  g.out_.assign(n, Bits(n));
  g.in_.assign(n, Bits(n));
  g.und_.assign(n, Bits(n));
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::VertexOutOfRange, "arc " + arc_str(u, v) +
                      " in a graph on " + std::to_string(n) + " vertices");
    if (u == v) throw Error(ErrorCode::LoopArc, "arc " + arc_str(u, v));
    if (g.out_[v].test(u))
      throw Error(ErrorCode::DigonArc,
                  "arcs " + arc_str(v, u) + " and " + arc_str(u, v));
    g.out_[u].set(v);
    g.in_[v].set(u);
    g.und_[u].set(v);
    g.und_[v].set(u);
  }
  g.arcs_ = std::move(arcs);
  return g;
}

InducedSubgraph induced_subgraph(const OrientedGraph& g,
                                 const std::vector<int>& verts) {
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    if (v < 0 || v >= g.n())
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " in subgraph selection");
    pos[v] = int(i);
  }
  std::vector<Arc> arcs;
  for (auto [u, v] : g.arcs())
    if (pos[u] >= 0 && pos[v] >= 0) arcs.push_back({pos[u], pos[v]});
  return {OrientedGraph::create(int(verts.size()), std::move(arcs)), verts};
}

OrientedGraph converse(const OrientedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (auto [u, v] : g.arcs()) arcs.push_back({v, u});
  return OrientedGraph::create(g.n(), std::move(arcs));
}

bool is_tournament(const OrientedGraph& g) {
  for (int u = 0; u < g.n(); ++u)
    if (g.degree(u) != g.n() - 1) return false;
  return true;
}

bool is_acyclic(const OrientedGraph& g) {
  // Kahn peeling.
  std::vector<int> indeg(g.n());
  std::vector<int> queue;
  for (int v = 0; v < g.n(); ++v) {
    indeg[v] = g.in_degree(v);
    if (indeg[v] == 0) queue.push_back(v);
  }
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (int w = g.out(v).first(); w >= 0; w = g.out(v).next(w + 1))
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return seen == g.n();
}

std::vector<std::vector<int>> weak_components(const OrientedGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = g.und(v).first(); w >= 0; w = g.und(v).next(w + 1))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const OrientedGraph& g) {
  return weak_components(g).size() <= 1;
}

}  // namespace chiforb
