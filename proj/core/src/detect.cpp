#include "chiforb/detect.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace chiforb {

bool embedding_valid(const OrientedGraph& host, const OrientedGraph& pattern,
                     const Embedding& emb) {
  if (int(emb.size()) != pattern.n()) return false;
  for (int p = 0; p < pattern.n(); ++p) {
    if (emb[p] < 0 || emb[p] >= host.n()) return false;
    for (int q = 0; q < pattern.n(); ++q) {
      if (p == q) continue;
      if (emb[p] == emb[q]) return false;
      if (host.has_arc(emb[p], emb[q]) != pattern.has_arc(p, q)) return false;
    }
  }
  return true;
}

std::optional<Embedding> find_induced(const OrientedGraph& host,
                                      const OrientedGraph& pattern,
                                      int pattern_cap) {
  const int np = pattern.n();
  if (np > pattern_cap)
    throw Error(ErrorCode::PatternTooLarge,
                "pattern on " + std::to_string(np) + " vertices, cap " +
                    std::to_string(pattern_cap));
  if (np > host.n()) return std::nullopt;
  if (np == 0) return Embedding{};

  // Pattern vertices are assigned in index order with ascending host
  // candidates, so the first success is the lexicographically least
  // embedding.
  Embedding emb(np, -1);
  Bits used(host.n());
  auto fits = [&](int p, int v) {
    if (host.out_degree(v) < pattern.out_degree(p) ||
        host.in_degree(v) < pattern.in_degree(p))
      return false;
    for (int q = 0; q < p; ++q) {
      if (host.has_arc(v, emb[q]) != pattern.has_arc(p, q)) return false;
      if (host.has_arc(emb[q], v) != pattern.has_arc(q, p)) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int p) -> bool {
    if (p == np) return true;
    for (int v = 0; v < host.n(); ++v) {
      if (used.test(v) || !fits(p, v)) continue;
      emb[p] = v;
      used.set(v);
      if (self(self, p + 1)) return true;
      emb[p] = -1;
      used.reset(v);
    }
    return false;
  };
  if (dfs(dfs, 0)) return emb;
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_forbidden(
    const OrientedGraph& host, const std::vector<PatternKind>& forbid) {
  for (size_t i = 0; i < forbid.size(); ++i)
    if (auto emb = find_induced(host, forbid[i].graph()))
      return ForbiddenWitness{int(i), forbid[i].name(), *emb};
  return std::nullopt;
}

namespace {
int trans_extend(const OrientedGraph& g, const Bits& candidates, int depth,
                 int best) {
  if (depth + candidates.count() <= best) return best;
  for (int v = candidates.first(); v >= 0; v = candidates.next(v + 1)) {
    best = std::max(best, depth + 1);
    Bits next = candidates & g.out(v);
    if (next.any()) best = trans_extend(g, next, depth + 1, best);
  }
  return best;
}
}  // namespace

int trans_number(const OrientedGraph& g) {
  if (g.n() == 0) return 0;
  Bits all(g.n());
  for (int v = 0; v < g.n(); ++v) all.set(v);
  return trans_extend(g, all, 0, 0);
}

namespace {
// Greedy colouring of g[p] as a clique-size upper bound.
int clique_bound(const OrientedGraph& g, const Bits& p) {
  std::vector<Bits> colors;
  for (int v = p.first(); v >= 0; v = p.next(v + 1)) {
    bool placed = false;
    for (auto& cls : colors)
      if (!cls.intersects(g.und(v))) {
        cls.set(v);
        placed = true;
        break;
      }
    if (!placed) {
      Bits cls(g.n());
      cls.set(v);
      colors.push_back(cls);
    }
  }
  return int(colors.size());
}

// Cliques are grown in ascending vertex order: the candidate set only ever
// holds vertices greater than the last one taken.
int clique_extend(const OrientedGraph& g, Bits p, int depth, int best) {
  while (p.any()) {
    if (depth + p.count() <= best) return best;
    if (depth + clique_bound(g, p) <= best) return best;
    int v = p.first();
    p.reset(v);
    best = std::max(best, depth + 1);
    Bits next = p & g.und(v);
    if (next.any()) best = clique_extend(g, next, depth + 1, best);
  }
  return best;
}
}  // namespace

int clique_number(const OrientedGraph& g) {
  if (g.n() == 0) return 0;
  Bits all(g.n());
  for (int v = 0; v < g.n(); ++v) all.set(v);
  return clique_extend(g, all, 0, 0);
}

namespace {
struct HoleSearch {
  const OrientedGraph& g;
  int min_len;
  const std::function<bool(const HoleCertificate&)>& cb;
  std::vector<int> path;
  Bits on_path;
  // vertices adjacent to some internal path vertex (path[1..len-2])
  Bits blocked;
  bool stop = false;

  HoleSearch(const OrientedGraph& g_, int min_len_,
             const std::function<bool(const HoleCertificate&)>& cb_)
      : g(g_), min_len(min_len_), cb(cb_), on_path(g_.n()), blocked(g_.n()) {}

  void emit(int closer) {
    std::vector<int> cyc = path;
    cyc.push_back(closer);
    bool fwd = true, bwd = true;
    const int q = int(cyc.size());
    for (int i = 0; i < q; ++i) {
      int u = cyc[i], v = cyc[(i + 1) % q];
      fwd &= g.has_arc(u, v);
      bwd &= g.has_arc(v, u);
    }
    HoleCertificate h;
    if (bwd && !fwd) {
      // flip so a directed hole always reads forward
      h.cycle.push_back(cyc[0]);
      for (int i = q - 1; i >= 1; --i) h.cycle.push_back(cyc[i]);
    } else {
      h.cycle = std::move(cyc);
    }
    h.directed = fwd || bwd;
    if (!cb(h)) stop = true;
  }

  void extend() {
    const int r = path[0], last = path.back();
    const int len = int(path.size());
    for (int w = g.und(last).next(r + 1); w >= 0 && !stop;
         w = g.und(last).next(w + 1)) {
      if (on_path.test(w) || blocked.test(w)) continue;
      if (g.und(r).test(w)) {
        // closing chord-free cycle of length len+1
        if (len + 1 >= std::max(min_len, 5) && (len + 1) % 2 == 1 &&
            path[1] < w)
          emit(w);
        continue;
      }
      path.push_back(w);
      on_path.set(w);
      Bits saved = blocked;
      blocked |= g.und(path[len - 1]);  // previous endpoint becomes internal
      extend();
      blocked = saved;
      on_path.reset(w);
      path.pop_back();
    }
  }
};
}  // namespace

void enumerate_odd_holes(
    const OrientedGraph& g, int min_len,
    const std::function<bool(const HoleCertificate&)>& cb) {
  if (g.n() > 64)
    throw Error(ErrorCode::TooLarge,
                "odd-hole search capped at 64 vertices, got " +
                    std::to_string(g.n()));
  HoleSearch hs(g, min_len, cb);
  for (int r = 0; r < g.n() && !hs.stop; ++r) {
    for (int x = g.und(r).next(r + 1); x >= 0 && !hs.stop;
         x = g.und(r).next(x + 1)) {
      hs.path = {r, x};
      hs.on_path.clear();
      hs.on_path.set(r);
      hs.on_path.set(x);
      hs.blocked.clear();
      hs.extend();
    }
  }
}

std::optional<HoleCertificate> find_odd_hole(const OrientedGraph& g,
                                             int min_len) {
  std::optional<HoleCertificate> found;
  enumerate_odd_holes(g, min_len, [&](const HoleCertificate& h) {
    found = h;
    return false;
  });
  return found;
}

std::optional<Embedding> find_tt3(const OrientedGraph& g) {
  for (auto [u, v] : g.arcs()) {
    Bits common = g.out(u) & g.out(v);
    int w = common.first();
    if (w >= 0) return Embedding{u, v, w};
  }
  return std::nullopt;
}

std::optional<Embedding> find_c3(const OrientedGraph& g) {
  for (auto [u, v] : g.arcs()) {
    Bits common = g.out(v) & g.in(u);
    int w = common.first();
    if (w >= 0) return Embedding{u, v, w};
  }
  return std::nullopt;
}

namespace {
// Induced four-vertex chains a -> b -> c plus one arc at c or at (a, c)'s
// far side; shared scan for the P4 orientations. kind encodes the fourth
// vertex rule.
std::optional<Embedding> scan_p4(const OrientedGraph& g,
                                 PatternKind::Tag tag) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = g.out(a).first(); b >= 0; b = g.out(a).next(b + 1)) {
      if (tag == PatternKind::Tag::Pplus111) {
        // a -> b <- c -> d with all other pairs non-adjacent
        for (int c = g.in(b).first(); c >= 0; c = g.in(b).next(c + 1)) {
          if (c == a || g.adjacent(a, c)) continue;
          for (int d = g.out(c).first(); d >= 0; d = g.out(c).next(d + 1)) {
            if (d == a || d == b) continue;
            if (g.adjacent(d, a) || g.adjacent(d, b)) continue;
            return Embedding{a, b, c, d};
          }
        }
        continue;
      }
      for (int c = g.out(b).first(); c >= 0; c = g.out(b).next(c + 1)) {
        if (c == a || g.adjacent(a, c)) continue;
        // induced path a -> b -> c; fourth vertex per orientation
        const Bits& pool =
            tag == PatternKind::Tag::Pplus3 ? g.out(c) : g.in(c);
        for (int d = pool.first(); d >= 0; d = pool.next(d + 1)) {
          if (d == a || d == b) continue;
          if (g.adjacent(d, a) || g.adjacent(d, b)) continue;
          return Embedding{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}
}  // namespace

std::optional<Embedding> find_p_plus_3(const OrientedGraph& g) {
  return scan_p4(g, PatternKind::Tag::Pplus3);
}

std::optional<Embedding> find_p_plus_21(const OrientedGraph& g) {
  return scan_p4(g, PatternKind::Tag::Pplus21);
}

std::optional<Embedding> find_p_minus_21(const OrientedGraph& g) {
  // 1->0, 2->1, 2->3: chain c -> b -> a plus c -> d, pairwise non-adjacent
  // otherwise. Scan from the two-out-degree vertex c.
  for (int c = 0; c < g.n(); ++c)
    for (int b = g.out(c).first(); b >= 0; b = g.out(c).next(b + 1))
      for (int a = g.out(b).first(); a >= 0; a = g.out(b).next(a + 1)) {
        if (a == c || g.adjacent(a, c)) continue;
        for (int d = g.out(c).first(); d >= 0; d = g.out(c).next(d + 1)) {
          if (d == a || d == b) continue;
          if (g.adjacent(d, a) || g.adjacent(d, b)) continue;
          return Embedding{a, b, c, d};
        }
      }
  return std::nullopt;
}

std::optional<Embedding> find_p_plus_111(const OrientedGraph& g) {
  return scan_p4(g, PatternKind::Tag::Pplus111);
}

namespace {
bool pick_stable(const OrientedGraph& g, const std::vector<int>& pool,
                 size_t from, int need, Bits& allowed, std::vector<int>& out) {
  if (need == 0) return true;
  for (size_t i = from; i < pool.size(); ++i) {
    int v = pool[i];
    if (!allowed.test(v)) continue;
    Bits saved = allowed;
    allowed.subtract(g.und(v));
    allowed.reset(v);
    out.push_back(v);
    if (pick_stable(g, pool, i + 1, need - 1, allowed, out)) return true;
    out.pop_back();
    allowed = saved;
  }
  return false;
}
}  // namespace

std::optional<Embedding> find_star(const OrientedGraph& g, int k, int l) {
  for (int x = 0; x < g.n(); ++x) {
    if (g.in_degree(x) < k || g.out_degree(x) < l) continue;
    std::vector<int> ins = g.in(x).to_vector();
    std::vector<int> outs = g.out(x).to_vector();
    // choose k stable in-leaves, then l out-leaves stable and non-adjacent to
    // them; explore in-choices exhaustively since the out-feasibility depends
    // on them
    std::vector<int> in_pick;
    Bits allowed_template(g.n());
    for (int v = 0; v < g.n(); ++v) allowed_template.set(v);
    auto rec_in = [&](auto&& self, size_t from) -> std::optional<Embedding> {
      if (int(in_pick.size()) == k) {
        Bits allowed = allowed_template;
        allowed.reset(x);
        for (int v : in_pick) {
          allowed.subtract(g.und(v));
          allowed.reset(v);
        }
        std::vector<int> out_pick;
        if (pick_stable(g, outs, 0, l, allowed, out_pick)) {
          Embedding emb{x};
          emb.insert(emb.end(), in_pick.begin(), in_pick.end());
          emb.insert(emb.end(), out_pick.begin(), out_pick.end());
          return emb;
        }
        return std::nullopt;
      }
      for (size_t i = from; i < ins.size(); ++i) {
        int v = ins[i];
        bool clash = false;
        for (int u : in_pick)
          if (g.adjacent(u, v)) {
            clash = true;
            break;
          }
        if (clash) continue;
        in_pick.push_back(v);
        if (auto r = self(self, i + 1)) return r;
        in_pick.pop_back();
      }
      return std::nullopt;
    };
    if (auto r = rec_in(rec_in, 0)) return r;
  }
  return std::nullopt;
}

}  // namespace chiforb
