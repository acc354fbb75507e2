#include "chiforb/structure.hpp"

#include <algorithm>

namespace chiforb {

SccDecomposition scc(const OrientedGraph& g) {
  const int n = g.n();
  // Iterative Tarjan. Components come out in reverse topological order.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack, frame_v,
      frame_it;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frame_v.push_back(root);
    frame_it.push_back(0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frame_v.empty()) {
      int v = frame_v.back();
      int w = g.out(v).next(frame_it.back());
      if (w >= 0) {
        frame_it.back() = w + 1;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frame_v.push_back(w);
          frame_it.push_back(0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        frame_v.pop_back();
        frame_it.pop_back();
        if (!frame_v.empty())
          low[frame_v.back()] = std::min(low[frame_v.back()], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> c;
          while (true) {
            int u = stack.back();
            stack.pop_back();
            on_stack[u] = 0;
            comp[u] = int(comps.size());
            c.push_back(u);
            if (u == v) break;
          }
          std::sort(c.begin(), c.end());
          comps.push_back(std::move(c));
        }
      }
    }
  }

  // Flip to topological order.
  const int k = int(comps.size());
  std::reverse(comps.begin(), comps.end());
  SccDecomposition out;
  out.components = std::move(comps);
  out.component_of.assign(n, -1);
  for (int v = 0; v < n; ++v) out.component_of[v] = k - 1 - comp[v];
  out.initial.assign(k, true);
  for (auto [u, v] : g.arcs())
    if (out.component_of[u] != out.component_of[v])
      out.initial[out.component_of[v]] = false;
  return out;
}

Bits reach(const OrientedGraph& g, const std::vector<int>& sources,
           Direction dir) {
  Bits seen(g.n());
  std::vector<int> stack;
  for (int s : sources) {
    if (s < 0 || s >= g.n())
      throw Error(ErrorCode::VertexOutOfRange,
                  "source vertex " + std::to_string(s));
    if (!seen.test(s)) {
      seen.set(s);
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const Bits& nb = dir == Direction::Forward ? g.out(v) : g.in(v);
    for (int w = nb.first(); w >= 0; w = nb.next(w + 1))
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
  }
  return seen;
}

LayerDecomposition layers(const OrientedGraph& g,
                          const std::vector<int>& base) {
  LayerDecomposition out;
  out.layer_of.assign(g.n(), -1);
  std::vector<int> cur;
  for (int s : base) {
    if (s < 0 || s >= g.n())
      throw Error(ErrorCode::VertexOutOfRange,
                  "base vertex " + std::to_string(s));
    if (out.layer_of[s] < 0) {
      out.layer_of[s] = 0;
      cur.push_back(s);
    }
  }
  std::sort(cur.begin(), cur.end());
  int depth = 0;
  while (!cur.empty()) {
    out.layers.push_back(cur);
    std::vector<int> next;
    for (int v : cur)
      for (int w = g.out(v).first(); w >= 0; w = g.out(v).next(w + 1))
        if (out.layer_of[w] < 0) {
          out.layer_of[w] = depth + 1;
          next.push_back(w);
        }
    std::sort(next.begin(), next.end());
    cur = std::move(next);
    ++depth;
  }
  for (auto [u, v] : g.arcs())
    if (out.layer_of[u] >= 0 && out.layer_of[v] >= 0 &&
        out.layer_of[u] > out.layer_of[v])
      out.backward_arcs.push_back({u, v});
  for (int v = 0; v < g.n(); ++v)
    if (out.layer_of[v] < 0) out.unreachable.push_back(v);
  return out;
}

}  // namespace chiforb
