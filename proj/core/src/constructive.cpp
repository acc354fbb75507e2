#include "chiforb/constructive.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "chiforb/exact.hpp"
#include "chiforb/extension.hpp"
#include "chiforb/structure.hpp"

namespace chiforb {

using nlohmann::json;

namespace {

[[noreturn]] void not_in_class(const std::string& pattern,
                               const Embedding& emb) {
  json detail = {{"pattern", pattern}, {"embedding", emb}};
  throw Error(ErrorCode::NotInClass, "induced " + pattern + " present",
              detail.dump());
}

[[noreturn]] void structure_violation(const std::string& what, json detail) {
  throw Error(ErrorCode::StructureViolation, what, detail.dump());
}

void require_tt3_p21_free(const OrientedGraph& g) {
  if (auto e = find_tt3(g)) not_in_class("tt3", *e);
  if (auto e = find_p_plus_21(g)) not_in_class("p21+", *e);
}

void certify_or_violate(const OrientedGraph& g, const Coloring& c,
                        const char* who) {
  if (auto bad = proper_violation(g, c.assignment))
    structure_violation(std::string(who) + " produced an improper colouring",
                        {{"arc", {bad->first, bad->second}}});
}

// Sanity of a caller-supplied hole: distinct vertices, directed induced odd
// cycle.
void validate_hole(const OrientedGraph& g, const HoleCertificate& h) {
  const auto& c = h.cycle;
  const int q = int(c.size());
  if (q < 5 || q % 2 == 0)
    throw Error(ErrorCode::BadSpec,
                "hole certificate must be an odd cycle of length >= 5");
  std::vector<char> seen(g.n(), 0);
  for (int v : c) {
    if (v < 0 || v >= g.n())
      throw Error(ErrorCode::VertexOutOfRange,
                  "hole vertex " + std::to_string(v));
    if (seen[v])
      throw Error(ErrorCode::BadSpec, "hole certificate repeats a vertex");
    seen[v] = 1;
  }
  for (int i = 0; i < q; ++i)
    if (!g.has_arc(c[i], c[(i + 1) % q]))
      throw Error(ErrorCode::BadSpec,
                  "hole certificate is not a directed cycle");
  for (int i = 0; i < q; ++i)
    for (int j = i + 2; j < q; ++j) {
      if (i == 0 && j == q - 1) continue;
      if (g.adjacent(c[i], c[j]))
        throw Error(ErrorCode::BadSpec, "hole certificate has a chord");
    }
}

void require_strong(const OrientedGraph& g) {
  if (g.n() == 0 || scc(g).components.size() != 1)
    throw Error(ErrorCode::NotInClass, "graph is not strong");
}

int mex(const std::vector<char>& used) {
  for (int c = 0; c < int(used.size()); ++c)
    if (!used[c]) return c;
  return int(used.size());
}

}  // namespace

Coloring color_out_star_free(const OrientedGraph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.out_degree(v) <= 1) continue;
    int u = g.out(v).first();
    int w = g.out(v).next(u + 1);
    if (g.has_arc(u, w)) not_in_class("tt3", {v, u, w});
    if (g.has_arc(w, u)) not_in_class("tt3", {v, w, u});
    not_in_class("s0-2", {v, u, w});
  }
  std::vector<int> col(g.n(), -1);
  std::vector<int> seeds;
  for (const auto& comp : weak_components(g)) {
    // Walk out-arcs from the least vertex; with out-degree <= 1 everywhere we
    // land either on the component's sink root or on its unique cycle.
    std::vector<int> walk;
    std::map<int, int> pos;
    int v = comp[0];
    while (v >= 0 && !pos.count(v)) {
      pos[v] = int(walk.size());
      walk.push_back(v);
      v = g.out(v).first();
    }
    seeds.clear();
    if (v < 0) {
      col[walk.back()] = 0;  // tree root (out-degree 0)
      seeds.push_back(walk.back());
    } else {
      const int start = pos[v];
      const int q = int(walk.size()) - start;
      for (int i = 0; i < q; ++i) {
        int x = walk[start + i];
        col[x] = (i == q - 1 && q % 2 == 1) ? 2 : i % 2;
        seeds.push_back(x);
      }
    }
    // grow the in-forest: each new vertex sees only its out-neighbour
    for (size_t qi = 0; qi < seeds.size(); ++qi) {
      int x = seeds[qi];
      for (int w = g.in(x).first(); w >= 0; w = g.in(x).next(w + 1))
        if (col[w] < 0) {
          col[w] = col[x] == 0 ? 1 : 0;
          seeds.push_back(w);
        }
    }
  }
  Coloring c{std::move(col), 3, ColoringMode::Proper};
  c = normalized(std::move(c));
  certify_or_violate(g, c, "out-star colouring");
  return c;
}

Coloring color_s11(const OrientedGraph& g) {
  if (g.n() == 0) return Coloring{{}, 0, ColoringMode::Proper};
  if (!is_connected(g))
    throw Error(ErrorCode::NotInClass, "graph is not weakly connected");
  if (auto e = find_tt3(g)) not_in_class("tt3", *e);
  if (auto e = find_star(g, 1, 1)) not_in_class("s1-1", *e);
  std::vector<int> col(g.n(), -1);
  if (find_c3(g)) {
    auto w = is_extension_of(g, PatternKind::directed_cycle(3).graph());
    if (!w)
      structure_violation("connected class member is not an extension of c3",
                          {});
    for (size_t i = 0; i < w->classes.size(); ++i)
      for (int v : w->classes[i]) col[v] = int(i);
  } else {
    // C3-free: a vertex with an in-arc and an out-arc would close a TT3 or a
    // C3 through its S(1,1)-forced adjacency, so sources and sinks partition
    // the graph.
    for (int v = 0; v < g.n(); ++v) {
      if (g.out_degree(v) > 0 && g.in_degree(v) > 0)
        structure_violation("vertex with both arc directions in the c3-free "
                            "case",
                            json{{"vertex", v}});
      col[v] = g.out_degree(v) > 0 ? 0 : 1;
    }
  }
  Coloring c{std::move(col), 3, ColoringMode::Proper};
  c = normalized(std::move(c));
  certify_or_violate(g, c, "s11 colouring");
  return c;
}

Coloring color_bipartite_no_odd_cycle(const OrientedGraph& g) {
  std::vector<int> col(g.n(), -1), parent(g.n(), -1), depth(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (col[s] >= 0) continue;
    col[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w = g.und(v).first(); w >= 0; w = g.und(v).next(w + 1)) {
        if (col[w] < 0) {
          col[w] = col[v] ^ 1;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (col[w] == col[v]) {
          // close the two BFS-tree paths into an explicit odd cycle
          std::vector<int> pv{v}, pw{w};
          int x = v, y = w;
          while (depth[x] > depth[y]) pv.push_back(x = parent[x]);
          while (depth[y] > depth[x]) pw.push_back(y = parent[y]);
          while (x != y) {
            pv.push_back(x = parent[x]);
            pw.push_back(y = parent[y]);
          }
          std::vector<int> cyc(pv);
          for (int i = int(pw.size()) - 2; i >= 0; --i) cyc.push_back(pw[i]);
          json detail = {{"cycle", cyc}};
          throw Error(ErrorCode::OddCycleFound,
                      "odd cycle of length " + std::to_string(cyc.size()),
                      detail.dump());
        }
      }
    }
  }
  Coloring c{std::move(col), 2, ColoringMode::Proper};
  return normalized(std::move(c));
}

TwinPartition build_twin_partition(const OrientedGraph& g,
                                   const std::vector<int>& cycle,
                                   const std::vector<int>& scope) {
  const int q = int(cycle.size());
  for (int i = 0; i < q; ++i)
    if (!g.has_arc(cycle[i], cycle[(i + 1) % q]))
      throw Error(ErrorCode::BadSpec,
                  "twin partition needs a directed cycle");
  std::vector<int> cls(g.n(), -1);
  for (int i = 0; i < q; ++i) cls[cycle[i]] = i;
  TwinPartition tp;
  tp.cycle = cycle;
  tp.classes.assign(q, {});
  for (int i = 0; i < q; ++i) tp.classes[i].push_back(cycle[i]);
  for (int v : scope) {
    if (cls[v] >= 0) continue;
    std::vector<int> in_c, out_c;
    for (int i = 0; i < q; ++i) {
      if (g.has_arc(cycle[i], v)) in_c.push_back(i);
      if (g.has_arc(v, cycle[i])) out_c.push_back(i);
    }
    if (in_c.size() != 1 || out_c.size() != 1 ||
        (in_c[0] + 2) % q != out_c[0])
      structure_violation("vertex is not a twin of any cycle vertex",
                          {{"vertex", v},
                           {"in_on_cycle", in_c},
                           {"out_on_cycle", out_c}});
    cls[v] = (in_c[0] + 1) % q;
    tp.classes[cls[v]].push_back(v);
  }
  for (int v : scope)
    for (int w = g.out(v).first(); w >= 0; w = g.out(v).next(w + 1)) {
      if (cls[w] < 0 || cls[v] < 0) continue;
      int d = (cls[w] - cls[v] + q) % q;
      if (d != 1 && d != q - 1)
        structure_violation("arc joins non-consecutive twin classes",
                            {{"arc", {v, w}},
                             {"classes", {cls[v], cls[w]}}});
    }
  for (auto& c : tp.classes) std::sort(c.begin(), c.end());
  return tp;
}

Coloring color_c3_tt3_p21(const OrientedGraph& g) {
  if (auto e = find_c3(g)) not_in_class("c3", *e);
  require_tt3_p21_free(g);

  auto d = scc(g);
  Bits in_s(g.n());
  for (size_t ci = 0; ci < d.components.size(); ++ci) {
    auto sub = induced_subgraph(g, d.components[ci]);
    auto hole = find_odd_hole(sub.graph);
    if (!hole) continue;
    std::vector<int> cyc;
    for (int x : hole->cycle) cyc.push_back(sub.vertices[x]);
    if (!d.initial[ci])
      structure_violation("odd hole inside a non-initial strong component",
                          {{"hole", cyc}});
    if (!hole->directed)
      structure_violation("odd hole is not directed", {{"hole", cyc}});
    auto tp = build_twin_partition(g, cyc, d.components[ci]);
    for (int v : tp.classes[0]) in_s.set(v);
  }

  auto s_verts = in_s.to_vector();
  for (size_t i = 0; i < s_verts.size(); ++i)
    for (size_t j = i + 1; j < s_verts.size(); ++j)
      if (g.adjacent(s_verts[i], s_verts[j]))
        structure_violation("hitting set is not stable",
                            {{"pair", {s_verts[i], s_verts[j]}}});

  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v)
    if (!in_s.test(v)) rest.push_back(v);
  auto rsub = induced_subgraph(g, rest);
  Coloring two;
  try {
    two = color_bipartite_no_odd_cycle(rsub.graph);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OddCycleFound) throw;
    structure_violation(
        "odd cycle survives removal of the twin hitting set",
        {{"inner", e.what()}});
  }
  std::vector<int> col(g.n(), -1);
  for (size_t i = 0; i < rest.size(); ++i) col[rest[i]] = two.assignment[i];
  for (int v : s_verts) col[v] = 2;
  Coloring c{std::move(col), 3, ColoringMode::Proper};
  c = normalized(std::move(c));
  certify_or_violate(g, c, "c3/tt3/p21 colouring");
  return c;
}

Coloring color_strong_7hole(const OrientedGraph& g,
                            const HoleCertificate& hole) {
  require_strong(g);
  require_tt3_p21_free(g);
  validate_hole(g, hole);
  const int q = hole.length();
  if (q < 7)
    throw Error(ErrorCode::NotInClass,
                "hole has length " + std::to_string(q) + ", need >= 7");

  auto w = is_extension_of(g, PatternKind::directed_cycle(q).graph());
  if (!w)
    structure_violation(
        "strong graph with a long odd hole is not an extension of it",
        {{"hole", hole.cycle}});
  std::vector<int> cls(g.n(), -1);
  for (size_t i = 0; i < w->classes.size(); ++i)
    for (int v : w->classes[i]) cls[v] = int(i);
  // rotate witness classes so class i carries hole vertex i
  const int r = cls[hole.cycle[0]];
  for (int i = 0; i < q; ++i)
    if (cls[hole.cycle[i]] != (r + i) % q)
      structure_violation("extension witness misaligned with the hole",
                          {{"hole", hole.cycle}});
  std::vector<int> col(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    const int j = (cls[v] - r + q) % q;
    col[v] = j == q - 1 ? 2 : j % 2;
  }
  Coloring c{std::move(col), 3, ColoringMode::Proper};
  c = normalized(std::move(c));
  certify_or_violate(g, c, "7-hole colouring");
  return c;
}

std::pair<Coloring, FiveHoleClassification> color_strong_5hole(
    const OrientedGraph& g, const HoleCertificate& hole) {
  require_strong(g);
  require_tt3_p21_free(g);
  validate_hole(g, hole);
  if (hole.length() != 5)
    throw Error(ErrorCode::NotInClass,
                "hole has length " + std::to_string(hole.length()) +
                    ", need exactly 5");

  FiveHoleClassification out;
  const auto& h = hole.cycle;
  for (int i = 0; i < 5; ++i) out.hole[i] = h[i];
  std::vector<char> on_hole(g.n(), 0);
  for (int v : h) on_hole[v] = 1;

  // kind[v]: 0 none, 1 a-class, 2 b-class, 3 c-class; idx[v] its index
  std::vector<int> kind(g.n(), 0), idx(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (on_hole[v]) continue;
    std::vector<int> in_c, out_c;
    for (int i = 0; i < 5; ++i) {
      if (g.has_arc(h[i], v)) in_c.push_back(i);
      if (g.has_arc(v, h[i])) out_c.push_back(i);
    }
    auto fail = [&]() {
      structure_violation("vertex fits no class around the 5-hole",
                          {{"vertex", v},
                           {"in_on_hole", in_c},
                           {"out_on_hole", out_c}});
    };
    if (in_c.size() == 1 && out_c.size() == 1) {
      int i = (in_c[0] + 1) % 5;
      if (out_c[0] != (i + 1) % 5) fail();
      kind[v] = 3;
      idx[v] = i;
      out.c[i].push_back(v);
    } else if (in_c.size() == 1 && out_c.size() == 2) {
      int i = (in_c[0] + 1) % 5;
      std::vector<int> want{(i + 1) % 5, (i + 3) % 5};
      std::sort(want.begin(), want.end());
      if (out_c != want) fail();
      kind[v] = 1;
      idx[v] = i;
      out.a[i].push_back(v);
    } else if (in_c.size() == 2 && out_c.size() == 1) {
      int i = (out_c[0] + 4) % 5;
      std::vector<int> want{(i + 4) % 5, (i + 2) % 5};
      std::sort(want.begin(), want.end());
      if (in_c != want) fail();
      kind[v] = 2;
      idx[v] = i;
      out.b[i].push_back(v);
    } else {
      fail();
    }
  }

  // fixed schema, colours 0..3
  static const int col_hole[5] = {0, 1, 2, 3, 1};
  static const int col_a[5] = {0, 3, 2, 0, 1};
  static const int col_b[5] = {0, 0, 2, 3, 2};
  static const int col_c[5] = {0, -1, 2, 3, 1};  // c[1] decided per vertex
  std::vector<int> col(g.n(), -1);
  for (int i = 0; i < 5; ++i) col[h[i]] = col_hole[i];
  Bits c4(g.n());
  for (int v : out.c[4]) c4.set(v);
  for (int v = 0; v < g.n(); ++v) {
    if (on_hole[v]) continue;
    if (kind[v] == 1)
      col[v] = col_a[idx[v]];
    else if (kind[v] == 2)
      col[v] = col_b[idx[v]];
    else if (idx[v] != 1)
      col[v] = col_c[idx[v]];
    else
      col[v] = g.und(v).intersects(c4) ? 3 : 1;
  }
  Coloring c{std::move(col), 4, ColoringMode::Proper};
  certify_or_violate(g, c, "5-hole colouring");
  return {std::move(c), std::move(out)};
}

namespace {

// Colour one weak component in its own coordinates. Enforces the budget:
// 3 colours when the initial strong part has a hole of length >= 7, else 4.
std::vector<int> color_tt3_p21_component(const OrientedGraph& sg) {
  auto any_hole = find_odd_hole(sg);
  if (!any_hole) {
    auto ec = chi_exact_full(sg);
    if (ec.value > 4)
      structure_violation("odd-hole-free member needs more than 4 colours",
                          {{"chi", ec.value}});
    return ec.coloring.assignment;
  }

  auto d = scc(sg);
  int initial_count = 0, init_idx = -1;
  for (size_t c = 0; c < d.components.size(); ++c)
    if (d.initial[c]) {
      ++initial_count;
      init_idx = int(c);
    }
  if (initial_count != 1)
    structure_violation(
        "component with odd holes has several initial strong components",
        {{"initial_components", initial_count}});
  if (d.component_of[any_hole->cycle[0]] != init_idx)
    structure_violation("odd hole outside the initial strong component",
                        {{"hole", any_hole->cycle}});

  auto ksub = induced_subgraph(sg, d.components[init_idx]);
  std::vector<int> kcol;
  int limit;
  if (auto h7 = find_odd_hole(ksub.graph, 7)) {
    kcol = color_strong_7hole(ksub.graph, *h7).assignment;
    limit = 3;
  } else {
    auto h5 = find_odd_hole(ksub.graph, 5);
    if (!h5)
      structure_violation("initial strong component lost its odd hole", {});
    kcol = color_strong_5hole(ksub.graph, *h5).first.assignment;
    limit = 4;
  }

  auto L = layers(sg, d.components[init_idx]);
  if (!L.unreachable.empty())
    structure_violation("vertex unreachable from the initial strong component",
                        {{"unreachable", L.unreachable}});
  if (!L.backward_arcs.empty())
    structure_violation("backward arc across the layering",
                        {{"arc", {L.backward_arcs[0].first,
                                  L.backward_arcs[0].second}}});
  for (auto [u, v] : sg.arcs())
    if (L.layer_of[u] >= 2 && L.layer_of[u] == L.layer_of[v])
      structure_violation("arc inside a stable layer",
                          {{"arc", {u, v}}, {"layer", L.layer_of[u]}});

  std::vector<int> scol(sg.n(), -1);
  for (size_t i = 0; i < ksub.vertices.size(); ++i)
    scol[ksub.vertices[i]] = kcol[i];

  if (L.layers.size() >= 2) {
    Bits in_l0(sg.n()), in_l1(sg.n());
    for (int v : L.layers[0]) in_l0.set(v);
    for (int v : L.layers[1]) in_l1.set(v);

    // weak components of the first layer
    std::vector<char> seen(sg.n(), 0);
    for (int s : L.layers[1]) {
      if (seen[s]) continue;
      std::vector<int> comp{s};
      seen[s] = 1;
      for (size_t qi = 0; qi < comp.size(); ++qi) {
        int v = comp[qi];
        Bits nb = sg.und(v) & in_l1;
        for (int w = nb.first(); w >= 0; w = nb.next(w + 1))
          if (!seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());

      std::vector<int> side_a, side_b;
      for (int v : comp) {
        const bool has_in = (sg.in(v) & in_l1).any();
        const bool has_out = (sg.out(v) & in_l1).any();
        if (has_in && has_out)
          structure_violation(
              "first-layer vertex with arcs in and out inside the layer",
              {{"vertex", v}});
        (has_in ? side_b : side_a).push_back(v);
      }
      if (side_a.empty())
        structure_violation("first-layer component without sources", {});

      Bits sig_a = sg.in(side_a[0]) & in_l0;
      for (int v : side_a)
        if (!((sg.in(v) & in_l0) == sig_a))
          structure_violation(
              "first-layer sources with different base neighbourhoods",
              {{"vertices", {side_a[0], v}}});
      Bits nb_b(sg.n());
      for (int v : side_b) nb_b |= sg.in(v) & in_l0;
      for (int x = nb_b.first(); x >= 0; x = nb_b.next(x + 1))
        for (int y = sig_a.first(); y >= 0; y = sig_a.next(y + 1))
          if (x == y || !sg.adjacent(x, y))
            structure_violation(
                "base neighbourhoods of the two sides are not complete",
                {{"pair", {x, y}}});

      std::vector<char> in_i(16, 0);
      for (int y = sig_a.first(); y >= 0; y = sig_a.next(y + 1)) {
        if (scol[y] >= int(in_i.size())) in_i.resize(scol[y] + 1, 0);
        in_i[scol[y]] = 1;
      }
      if (sig_a.none())
        structure_violation("first-layer vertex without base in-neighbour",
                            {{"vertex", side_a[0]}});
      const int c_a = mex(in_i);
      int c_b = -1;
      for (int c = 0; c < int(in_i.size()); ++c)
        if (in_i[c]) {
          c_b = c;
          break;
        }
      for (int v : side_a) scol[v] = c_a;
      for (int v : side_b) scol[v] = c_b;
    }

    // equal base neighbourhoods must agree on the colour, across components
    std::map<std::vector<int>, int> sig2col;
    for (int v : L.layers[1]) {
      auto sig = (sg.in(v) & in_l0).to_vector();
      auto [it, fresh] = sig2col.try_emplace(sig, scol[v]);
      if (!fresh && it->second != scol[v])
        structure_violation(
            "equal base neighbourhoods coloured differently",
            {{"vertex", v}, {"colors", {it->second, scol[v]}}});
    }
  }

  for (size_t li = 2; li < L.layers.size(); ++li)
    for (int v : L.layers[li]) {
      int below = -1;
      for (int w = sg.in(v).first(); w >= 0; w = sg.in(v).next(w + 1)) {
        if (below < 0)
          below = scol[w];
        else if (scol[w] != below)
          structure_violation("in-neighbours below carry different colours",
                              {{"vertex", v}, {"colors", {below, scol[w]}}});
      }
      if (below < 0)
        structure_violation("layer vertex without in-neighbour below",
                            {{"vertex", v}});
      scol[v] = below == 0 ? 1 : 0;
    }

  int used = 0;
  for (int c : scol) used = std::max(used, c + 1);
  if (used > limit)
    structure_violation("colour budget exceeded",
                        {{"used", used}, {"budget", limit}});
  return scol;
}

}  // namespace

Coloring color_tt3_p21(const OrientedGraph& g) {
  require_tt3_p21_free(g);
  std::vector<int> col(g.n(), 0);
  for (const auto& comp : weak_components(g)) {
    auto sub = induced_subgraph(g, comp);
    auto scol = color_tt3_p21_component(sub.graph);
    for (size_t i = 0; i < comp.size(); ++i) col[comp[i]] = scol[i];
  }
  int used = 0;
  for (int c : col) used = std::max(used, c + 1);
  Coloring c{std::move(col), std::max(used, g.n() > 0 ? 1 : 0),
             ColoringMode::Proper};
  c = normalized(std::move(c));
  certify_or_violate(g, c, "tt3/p21 pipeline");
  return c;
}

}  // namespace chiforb
