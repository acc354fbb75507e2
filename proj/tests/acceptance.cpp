// Acceptance harness: twelve criteria, one PASS/FAIL line each, nonzero exit
// when anything fails. Criteria with a stated wall-clock budget fail on
// overrun too.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chiforb/coloring.hpp"
#include "chiforb/constructive.hpp"
#include "chiforb/detect.hpp"
#include "chiforb/errors.hpp"
#include "chiforb/exact.hpp"
#include "chiforb/extension.hpp"
#include "chiforb/generators.hpp"
#include "chiforb/oriented_graph.hpp"
#include "chiforb/patterns.hpp"
#include "chiforb/structure.hpp"
#include "chiforb/verify.hpp"

using namespace chiforb;

namespace {

const PatternKind kTT3 = PatternKind::tt(3);
const PatternKind kC3 = PatternKind::directed_cycle(3);
const PatternKind kP21 = PatternKind::p_plus_21();
const PatternKind kP111 = PatternKind::p_plus_111();
const PatternKind kS11 = PatternKind::star(1, 1);
const PatternKind kS22 = PatternKind::star(2, 2);

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  // Success-path summary; ignored once something failed.
  void describe(const std::string& text) {
    if (ok) detail = text;
  }
};

int ceil_log2(int n) {
  int c = 0;
  while ((1 << c) < n) ++c;
  return c;
}

bool has_five_hole(const OrientedGraph& g) {
  bool found = false;
  enumerate_odd_holes(g, 5, [&](const HoleCertificate& h) {
    if (h.length() == 5) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<int> random_sizes(int base, int room, SplitMix64& rng) {
  std::vector<int> sizes(base, 1);
  int extra = int(rng.next() % std::uint64_t(room + 1));
  while (extra-- > 0) sizes[rng.next() % std::uint64_t(base)]++;
  return sizes;
}

// The two theorem corpora share a recipe: random repaired instances plus
// blow-ups of odd cycles (and optionally of the gadget), all on <= 14
// vertices and re-checked against the forbidden list.
std::vector<OrientedGraph> theorem_corpus(const std::vector<PatternKind>& cls,
                                          int randoms, int cycles, int gadgets,
                                          std::uint64_t seed, Outcome& out) {
  std::vector<OrientedGraph> corpus;
  for (int i = 0; i < randoms; ++i) {
    int n = 8 + i % 7;
    double p = 0.2 + 0.1 * (i % 3);
    corpus.push_back(random_f_free(n, p, seed + std::uint64_t(i), cls));
  }
  SplitMix64 sizes_rng(seed * 2 + 1);
  for (int i = 0; i < cycles; ++i) {
    int len = 5 + 2 * (i % 3);
    auto sizes = random_sizes(len, 14 - len, sizes_rng);
    corpus.push_back(blow_up(PatternKind::directed_cycle(len).graph(), sizes));
  }
  OrientedGraph gad = two_pentagon_gadget();
  for (int i = 0; i < gadgets; ++i) {
    auto sizes = random_sizes(10, 4, sizes_rng);
    corpus.push_back(blow_up(gad, sizes));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!is_f_free(corpus[i], cls)) {
      out.fail("corpus instance " + std::to_string(i) + " not pattern-free");
      break;
    }
  return corpus;
}

Outcome crit_gadget_exactness() {
  Outcome o;
  OrientedGraph g = two_pentagon_gadget();
  if (g.n() != 10) o.fail("expected 10 vertices");
  if (g.arc_count() != 25) o.fail("expected 25 arcs");
  if (!is_f_free(g, {kTT3, kP21})) o.fail("gadget contains tt3 or p21+");
  int chi = chi_exact(g);
  if (chi != 4) o.fail("chi " + std::to_string(chi) + " != 4");
  o.describe("10 vertices, 25 arcs, tt3/p21+ free, chi 4");
  return o;
}

Outcome crit_color_tt3_p21() {
  Outcome o;
  auto corpus = theorem_corpus({kTT3, kP21}, 300, 100, 100, 20000, o);
  int with5 = 0, tall_only = 0;
  for (const auto& g : corpus) {
    Coloring c;
    try {
      c = color_tt3_p21(g);
    } catch (const Error& e) {
      o.fail(std::string("color_tt3_p21 raised ") + error_code_name(e.code()));
      break;
    }
    if (!certifies(g, c)) o.fail("uncertified colouring");
    if (c.num_colors > 4) o.fail("more than 4 colours");
    bool five = has_five_hole(g);
    bool tall = find_odd_hole(g, 7).has_value();
    if (five) ++with5;
    if (tall && !five) {
      ++tall_only;
      if (c.num_colors > 3) o.fail("4 colours despite shortest hole >= 7");
    }
  }
  if (tall_only < 40) o.fail("too few instances with all holes >= 7");
  o.describe(std::to_string(corpus.size()) + " instances <= 4 colours, " +
             std::to_string(with5) + " with a 5-hole, " +
             std::to_string(tall_only) + " with holes >= 7 only (<= 3)");
  return o;
}

Outcome crit_color_c3_tt3_p21() {
  Outcome o;
  auto corpus = theorem_corpus({kC3, kTT3, kP21}, 350, 150, 0, 30000, o);
  for (const auto& g : corpus) {
    Coloring c;
    try {
      c = color_c3_tt3_p21(g);
    } catch (const Error& e) {
      o.fail(std::string("color_c3_tt3_p21 raised ") +
             error_code_name(e.code()));
      break;
    }
    if (!certifies(g, c)) o.fail("uncertified colouring");
    if (c.num_colors > 3) o.fail("more than 3 colours");
  }
  for (int len = 5; len <= 13; len += 2) {
    OrientedGraph cyc = PatternKind::directed_cycle(len).graph();
    if (color_c3_tt3_p21(cyc).num_colors != 3 || chi_exact(cyc) != 3)
      o.fail("directed " + std::to_string(len) + "-cycle not exactly 3");
  }
  o.describe(std::to_string(corpus.size()) +
             " instances <= 3 colours, odd cycles exactly 3");
  return o;
}

// The published four-colour assignment around a directed 5-hole, class by
// class; c[1] is the one data-dependent class.
bool matches_five_hole_schema(const OrientedGraph& g, const Coloring& col,
                              const FiveHoleClassification& cls) {
  static const int hole_col[5] = {0, 1, 2, 3, 1};
  static const int a_col[5] = {0, 3, 2, 0, 1};
  static const int b_col[5] = {0, 0, 2, 3, 2};
  static const int c_col[5] = {0, -1, 2, 3, 1};
  for (int i = 0; i < 5; ++i) {
    if (col.assignment[cls.hole[i]] != hole_col[i]) return false;
    for (int v : cls.a[i])
      if (col.assignment[v] != a_col[i]) return false;
    for (int v : cls.b[i])
      if (col.assignment[v] != b_col[i]) return false;
    if (i != 1)
      for (int v : cls.c[i])
        if (col.assignment[v] != c_col[i]) return false;
  }
  for (int v : cls.c[1]) {
    bool meets_c4 = false;
    for (int u : cls.c[4])
      if (g.adjacent(v, u)) meets_c4 = true;
    if (col.assignment[v] != (meets_c4 ? 3 : 1)) return false;
  }
  return true;
}

Outcome crit_hole_schemas() {
  Outcome o;
  OrientedGraph gad = two_pentagon_gadget();
  auto hole = find_odd_hole(gad, 5);
  if (!hole || hole->length() != 5) {
    o.fail("gadget 5-hole not found");
    return o;
  }
  auto [col, cls] = color_strong_5hole(gad, *hole);
  if (!certifies(gad, col) || col.num_colors != 4)
    o.fail("gadget schema colouring not a proper 4-colouring");
  if (!matches_five_hole_schema(gad, col, cls))
    o.fail("gadget colouring deviates from the schema");
  for (int i = 0; i < 5; ++i)
    if (cls.a[i] != std::vector<int>{5 + i} || !cls.b[i].empty() ||
        (!cls.c[i].empty()))
      o.fail("gadget satellite classification changed");

  SplitMix64 rng(41);
  OrientedGraph c7 = PatternKind::directed_cycle(7).graph();
  for (int it = 0; it < 20; ++it) {
    auto sizes = random_sizes(7, 7, rng);
    OrientedGraph b = blow_up(c7, sizes);
    auto h7 = find_odd_hole(b, 7);
    if (!h7) {
      o.fail("7-hole missing in a C7 blow-up");
      break;
    }
    Coloring c = color_strong_7hole(b, *h7);
    if (!certifies(b, c) || c.num_colors != 3) {
      o.fail("7-hole colouring not exactly 3 colours");
      break;
    }
  }
  o.describe("gadget matches the 4-colour schema, C7 blow-ups take 3");
  return o;
}

Outcome crit_erdos_moser() {
  Outcome o;
  static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                  {1, 2}, {1, 3}, {2, 3}};
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<Arc> arcs;
    for (int b = 0; b < 6; ++b)
      arcs.push_back(mask >> b & 1 ? Arc{pairs[b][0], pairs[b][1]}
                                   : Arc{pairs[b][1], pairs[b][0]});
    if (check_erdos_moser(OrientedGraph::create(4, arcs)).verdict !=
        Verdict::Holds) {
      o.fail("labelled 4-tournament mask " + std::to_string(mask));
      break;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    SplitMix64 rng(50000 + std::uint64_t(i));
    OrientedGraph t = random_orientation(1 + i % 10, 1.0, rng);
    if (check_erdos_moser(t).verdict != Verdict::Holds) {
      o.fail("random tournament i=" + std::to_string(i));
      break;
    }
  }
  o.describe("all 64 labelled 4-tournaments and 1000 random (n <= 10)");
  return o;
}

Outcome crit_nbr_and_tchi() {
  Outcome o;
  for (int i = 0; i < 200; ++i) {
    int n = 8 + i % 5;
    OrientedGraph g =
        random_f_free(n, 0.3, 60000 + std::uint64_t(i), {kTT3, kS22});
    if (check_nbr_lemma(g, 2).verdict != Verdict::Holds)
      o.fail("nbr lemma failed at i=" + std::to_string(i));
    if (chi_exact(g) > 6 * tri_exact(g))
      o.fail("chi > 6 tri at i=" + std::to_string(i));
  }
  o.describe("200 tt3/s2-2 free instances: domination holds, chi <= 6 tri");
  return o;
}

Outcome crit_star_triangle() {
  Outcome o;
  for (int i = 0; i < 200; ++i) {
    int n = 8 + i % 5;
    OrientedGraph g =
        random_f_free(n, 0.3, 70000 + std::uint64_t(i), {kC3, kTT3, kS22});
    if (chi_exact(g) > 6) o.fail("chi > 6 at i=" + std::to_string(i));
  }
  o.describe("200 c3/tt3/s2-2 free instances: chi <= 6");
  return o;
}

Outcome crit_s11_structure() {
  Outcome o;
  int collected = 0, bip = 0, tri = 0;
  for (std::uint64_t seed = 80000; collected < 200 && seed < 82000; ++seed) {
    int n = 6 + int(seed % 7);
    OrientedGraph g = random_f_free(n, 0.25, seed, {kTT3, kS11});
    std::vector<int> best;
    for (const auto& comp : weak_components(g))
      if (comp.size() > best.size()) best = comp;
    if (best.size() < 2) continue;
    OrientedGraph comp = induced_subgraph(g, best).graph;
    ++collected;
    if (check_s11_structure(comp).verdict != Verdict::Holds)
      o.fail("structure check failed at seed " + std::to_string(seed));
    bool c3free = !find_induced(comp, kC3.graph()).has_value();
    int chi = chi_exact(comp);
    if (chi != (c3free ? 2 : 3))
      o.fail("chi " + std::to_string(chi) + " off at seed " +
             std::to_string(seed));
    (c3free ? bip : tri)++;
  }
  if (collected < 200) o.fail("could not collect 200 components");
  if (bip == 0 || tri == 0) o.fail("a dichotomy branch went untested");
  o.describe(std::to_string(collected) + " components: " + std::to_string(bip) +
             " c3-free of chi 2, " + std::to_string(tri) + " of chi 3");
  return o;
}

Outcome crit_families() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    OrientedGraph s = shift_graph(2, n);
    if (!is_f_free(s, {kC3, kTT3, kP111}))
      o.fail("shift(2," + std::to_string(n) + ") not pattern-free");
    if (chi_exact(s) != ceil_log2(n))
      o.fail("shift(2," + std::to_string(n) + ") chi off");
  }
  for (int n = 3; n <= 7; ++n) {
    OrientedGraph l = line_digraph(PatternKind::tt(n).graph());
    if (!is_f_free(l, {kTT3, kP111, PatternKind::c31(), PatternKind::c22()}))
      o.fail("line(tt" + std::to_string(n) + ") not pattern-free");
    if (chi_exact(l) < ceil_log2(n))
      o.fail("line(tt" + std::to_string(n) + ") chi below log bound");
  }
  o.describe("shift(2,n) chi = ceil(log2 n); line(tt_n) chi >= ceil(log2 n)");
  return o;
}

Outcome crit_tree_orientations() {
  Outcome o;
  // Path v0..v3 with one pendant leaf per path vertex.
  OrientedGraph spider = OrientedGraph::create(
      8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CheckReport r = check_tree_all_orientations(spider);
  if (r.verdict != Verdict::Holds) o.fail("8-vertex tree refuted");
  if (r.note.find("128") == std::string::npos)
    o.fail("expected 128 orientations");
  if (check_tree_all_orientations(oriented_path({3})).verdict !=
      Verdict::Violated)
    o.fail("plain P4 not refuted");
  o.describe("all 128 orientations hit p3+ or p111+; plain P4 refuted");
  return o;
}

Rational rational_pow(Rational base, int e) {
  Rational r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Literal restatement of the counting lemma: small edge -> vacuous, k edges
// sharing k vertices -> vacuous, otherwise compare |E| with k / p^k.
Verdict brute_comb(const Hypergraph& h, int k, const Rational& p) {
  for (const auto& e : h.edges)
    if (Rational(int(e.size())) < p * h.n) return Verdict::Vacuous;
  int m = int(h.edges.size());
  std::vector<int> idx(k);
  std::function<bool(int, int)> any_conflict = [&](int pos, int from) {
    if (pos == k) {
      std::vector<int> inter = h.edges[idx[0]];
      for (int j = 1; j < k; ++j) {
        std::vector<int> next;
        for (int v : inter)
          for (int w : h.edges[idx[j]])
            if (v == w) next.push_back(v);
        inter = next;
      }
      return int(inter.size()) >= k;
    }
    for (int i = from; i < m; ++i) {
      idx[pos] = i;
      if (any_conflict(pos + 1, i + 1)) return true;
    }
    return false;
  };
  if (k <= m && any_conflict(0, 0)) return Verdict::Vacuous;
  return Rational(m) < Rational(k) / rational_pow(p, k) ? Verdict::Holds
                                                        : Verdict::Violated;
}

Outcome crit_constants() {
  Outcome o;
  SkkConstants c = skk_constants(2);
  const Rational p = 1 - c.t - c.eps;
  if (c.s != 1 - Rational(1, 4)) o.fail("s definition");
  if (!(c.eps > 0 && c.eps < Rational(1, 4))) o.fail("eps interval");
  if (!(c.t > c.s && c.t < 1 - c.eps)) o.fail("t interval");
  if (c.g != Rational(2) / rational_pow(p, 2)) o.fail("g definition");
  if (c.n_kp != comb_threshold(2, p)) o.fail("n_kp threshold");
  if (c.n1 != std::max(Rational(c.n_kp), Rational(p * c.g / c.eps + c.g)))
    o.fail("n1 definition");
  if (c.n2 != std::max(c.n1, Rational(c.g / (c.t - c.s) + c.g + 1)))
    o.fail("n2 definition");
  if (c.d != std::max(Rational(c.n2 / c.t + 8 * c.g),
                      Rational(2 * c.t * c.g / (c.t - c.s) + c.g)))
    o.fail("d definition");
  if (!(c.bound == 2 * c.d && c.bound > 0)) o.fail("bound not 2d or <= 0");
  if (c.bound != Rational(385056, 13)) o.fail("k=2 bound drifted");

  SplitMix64 rng(90001);
  int agree = 0;
  for (int it = 0; it < 300; ++it) {
    Hypergraph h;
    h.n = 3 + int(rng.next() % 5);
    int m = int(rng.next() % 9);
    for (int e = 0; e < m; ++e) {
      std::vector<int> edge;
      for (int v = 0; v < h.n; ++v)
        if (rng.uniform01() < 0.55) edge.push_back(v);
      if (edge.empty()) edge.push_back(int(rng.next() % std::uint64_t(h.n)));
      h.edges.push_back(edge);
    }
    int k = 2 + it % 2;
    Rational p = it % 3 == 0 ? Rational(1, 4) : Rational(1, 2);
    if (check_comb_lemma(h, k, p).verdict == brute_comb(h, k, p))
      ++agree;
    else
      o.fail("counting lemma disagreement at it=" + std::to_string(it));
  }
  o.describe("k=2 chain exact (bound 385056/13), counting lemma agreed on " +
             std::to_string(agree) + "/300 hypergraphs");
  return o;
}

Outcome crit_search_null() {
  Outcome o;
  std::string out = "/tmp/chiforb_acceptance_search.json";
  std::string cmd = std::string(CLI_PATH) +
                    " search --forbid tt3,p21+ --target-chi 5 --n 14" +
                    " --budget 2000 --seed 0 --json -o /tmp/chiforb_found.json" +
                    " > " + out + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code != 0) o.fail("search exited " + std::to_string(code));
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  if (ss.str().find("\"found\":false") == std::string::npos)
    o.fail("search output missing found:false");
  o.describe("budget-2000 search for chi 5 at n=14 found nothing");
  return o;
}

struct Criterion {
  const char* name;
  double limit_s;  // 0 = no stated budget
  Outcome (*fn)();
};

}  // namespace

int main() {
  const Criterion table[] = {
      {"gadget exactness", 1, crit_gadget_exactness},
      {"tt3/p21+ colouring theorem", 300, crit_color_tt3_p21},
      {"c3/tt3/p21+ colouring theorem", 300, crit_color_c3_tt3_p21},
      {"5-hole and 7-hole schemas", 0, crit_hole_schemas},
      {"transitive subtournament bound", 0, crit_erdos_moser},
      {"neighbourhood domination and chi <= 6 tri", 0, crit_nbr_and_tchi},
      {"star-triangle chi <= 6", 0, crit_star_triangle},
      {"s1-1 structural dichotomy", 0, crit_s11_structure},
      {"shift and line-digraph families", 60, crit_families},
      {"tree orientation sweep", 1, crit_tree_orientations},
      {"constant chain and counting lemma", 0, crit_constants},
      {"null result of the falsification search", 600, crit_search_null},
  };
  int failures = 0;
  for (int i = 0; i < 12; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = table[i].fn();
    } catch (const Error& e) {
      o.fail(std::string(error_code_name(e.code())) + ": " + e.what());
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (table[i].limit_s > 0 && secs > table[i].limit_s)
      o.fail("over the " + std::to_string(int(table[i].limit_s)) +
             " s budget");
    if (!o.ok) ++failures;
    std::printf("%2d/12 %s %s: %s (%.1fs)\n", i + 1, o.ok ? "PASS" : "FAIL",
                table[i].name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
