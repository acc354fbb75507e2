#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chiforb/constructive.hpp"
#include "chiforb/detect.hpp"
#include "chiforb/errors.hpp"
#include "chiforb/exact.hpp"
#include "chiforb/extension.hpp"
#include "chiforb/generators.hpp"
#include "chiforb/patterns.hpp"
#include "oracles.hpp"

using namespace chiforb;

namespace {

OrientedGraph random_graph(int n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_orientation(n, p, rng);
}

OrientedGraph tt(int n) { return PatternKind::tt(n).graph(); }
OrientedGraph cyc(int n) { return PatternKind::directed_cycle(n).graph(); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadSpec;
}

int distinct_colors(const Coloring& c) {
  std::vector<int> v(c.assignment);
  std::sort(v.begin(), v.end());
  return int(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace

TEST_CASE("coloring utilities") {
  auto g = cyc(3);
  Coloring c{{0, 1, 2}, 3, ColoringMode::Proper};
  CHECK(certifies(g, c));
  CHECK_FALSE(proper_violation(g, c.assignment).has_value());

  Coloring bad{{0, 0, 1}, 2, ColoringMode::Proper};
  auto viol = proper_violation(g, bad.assignment);
  REQUIRE(viol.has_value());
  CHECK(*viol == Arc{0, 1});
  CHECK_FALSE(certifies(g, bad));

  // Triangle-free mode tolerates mono edges but not mono triangles.
  Coloring tf{{0, 0, 1}, 2, ColoringMode::TriangleFree};
  CHECK(certifies(g, tf));
  Coloring mono{{0, 0, 0}, 1, ColoringMode::TriangleFree};
  auto tri = monochromatic_triangle(g, mono.assignment);
  REQUIRE(tri.has_value());
  CHECK(*tri == std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(certifies(g, mono));

  Coloring gap{{5, 0, 5, 9}, 10, ColoringMode::Proper};
  auto norm = normalized(std::move(gap));
  CHECK(norm.assignment == std::vector<int>{0, 1, 0, 2});
  CHECK(norm.num_colors == 3);
}

TEST_CASE("coloring json round trip") {
  Coloring c{{0, 1, 0, 2}, 3, ColoringMode::Proper};
  std::string text = coloring_to_json(c);
  CHECK(text ==
        R"({"num_colors": 3, "colors": [0, 1, 0, 2], "mode": "proper"})");
  auto back = coloring_from_json(text);
  CHECK(back.assignment == c.assignment);
  CHECK(back.num_colors == 3);
  CHECK(back.mode == ColoringMode::Proper);

  Coloring t{{0, 0}, 1, ColoringMode::TriangleFree};
  auto t2 = coloring_from_json(coloring_to_json(t));
  CHECK(t2.mode == ColoringMode::TriangleFree);

  CHECK(code_of([] { coloring_from_json("{}"); }) == ErrorCode::BadSpec);
  CHECK(code_of([] { coloring_from_json("nope"); }) == ErrorCode::BadSpec);
}

TEST_CASE("chi_exact: goldens and oracle agreement") {
  CHECK(chi_exact(cyc(5)) == 3);
  CHECK(chi_exact(two_pentagon_gadget()) == 4);
  CHECK(chi_exact(shift_graph(2, 5)) == 3);
  CHECK(chi_exact(tt(6)) == 6);
  CHECK(chi_exact(OrientedGraph::create(3, {})) == 1);
  CHECK(chi_exact(OrientedGraph::create(0, {})) == 0);

  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto g = random_graph(4 + int(seed % 5), 0.45, seed * 3 + 1);
    auto full = chi_exact_full(g);
    REQUIRE(full.value == oracles::oracle_chi(g));
    REQUIRE(certifies(g, full.coloring));
    REQUIRE(full.coloring.num_colors == full.value);
    REQUIRE(distinct_colors(full.coloring) == full.value);
  }
}

TEST_CASE("tri_exact: goldens and oracle agreement") {
  CHECK(tri_exact(cyc(3)) == 2);
  CHECK(tri_exact(cyc(7)) == 1);  // triangle-free
  // Rotational five-vertex tournament: i -> i+1, i -> i+2 (mod 5). The
  // underlying graph is K5, so a class of three vertices is always a
  // triangle: two colours cannot work on five vertices, three can.
  auto r5 = OrientedGraph::create(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                      {2, 4}, {3, 4}, {3, 0}, {4, 0}, {4, 1}});
  CHECK(tri_exact(r5) == 3);
  CHECK(tri_exact(OrientedGraph::create(0, {})) == 0);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_graph(4 + int(seed % 5), 0.55, seed * 5 + 2);
    auto full = tri_exact_full(g);
    REQUIRE(full.value == oracles::oracle_tri(g));
    REQUIRE(certifies(g, full.coloring));
    REQUIRE(full.coloring.mode == ColoringMode::TriangleFree);
  }
}

TEST_CASE("invariants bundle and cross-checks") {
  auto inv = invariants(two_pentagon_gadget());
  CHECK(inv.chi == 4);
  CHECK(inv.omega == 3);
  CHECK(inv.trans == 2);
  CHECK(inv.tri <= inv.chi);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_graph(5 + int(seed % 4), 0.5, seed * 7 + 5);
    auto v = invariants(g);
    REQUIRE(v.chi == oracles::oracle_chi(g));
    REQUIRE(v.tri == oracles::oracle_tri(g));
    REQUIRE(v.trans == oracles::oracle_trans(g));
    REQUIRE(v.omega == oracles::oracle_omega(g));
    REQUIRE(v.omega <= v.chi);
    REQUIRE(v.tri <= v.chi);
    REQUIRE(v.trans <= v.omega);
  }
}

TEST_CASE("out-star-free colouring") {
  auto c5 = color_out_star_free(cyc(5));
  CHECK(c5.num_colors == 3);
  CHECK(c5.assignment == std::vector<int>{0, 1, 0, 1, 2});
  CHECK(certifies(cyc(5), c5));

  auto c4 = color_out_star_free(cyc(4));
  CHECK(c4.num_colors == 2);
  CHECK(certifies(cyc(4), c4));

  // In-branching: all arcs point at the root.
  auto branch = OrientedGraph::create(5, {{1, 0}, {2, 0}, {3, 1}, {4, 1}});
  auto cb = color_out_star_free(branch);
  CHECK(cb.num_colors == 2);
  CHECK(certifies(branch, cb));

  CHECK(code_of([] { color_out_star_free(tt(3)); }) == ErrorCode::NotInClass);
  auto out_star = OrientedGraph::create(3, {{0, 1}, {0, 2}});
  CHECK(code_of([&] { color_out_star_free(out_star); }) ==
        ErrorCode::NotInClass);

  // Random functional graphs (out-degree exactly 1) stay within 3 colours.
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    SplitMix64 rng(seed);
    int n = 3 + int(rng.next() % 10);
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) {
      int w = int(rng.next() % std::uint64_t(n));
      if (w != v && std::find(arcs.begin(), arcs.end(), Arc{w, v}) ==
                        arcs.end())
        arcs.emplace_back(v, w);
    }
    auto g = OrientedGraph::create(n, arcs);
    auto c = color_out_star_free(g);
    REQUIRE(c.num_colors <= 3);
    REQUIRE(certifies(g, c));
  }
}

TEST_CASE("s11 colouring") {
  auto dk33 = PatternKind::dk(3).graph();
  auto c1 = color_s11(dk33);
  CHECK(c1.num_colors == 2);
  CHECK(certifies(dk33, c1));

  auto b = blow_up(cyc(3), {2, 2, 2});
  auto c2 = color_s11(b);
  CHECK(c2.num_colors == 3);
  CHECK(certifies(b, c2));

  CHECK(color_s11(OrientedGraph::create(1, {})).num_colors == 1);

  // Sparse source/sink instance: in class and c3-free yet not a blow-up of a
  // single arc, still 2-coloured by the direction split.
  auto sparse = OrientedGraph::create(
      7, {{2, 1}, {4, 0}, {4, 1}, {4, 3}, {4, 6}, {5, 3}});
  auto c3f = color_s11(sparse);
  CHECK(c3f.num_colors == 2);
  CHECK(certifies(sparse, c3f));

  CHECK(code_of([] { color_s11(two_pentagon_gadget()); }) ==
        ErrorCode::NotInClass);
  CHECK(code_of([] { color_s11(OrientedGraph::create(2, {})); }) ==
        ErrorCode::NotInClass);  // disconnected
  CHECK(code_of([] { color_s11(tt(3)); }) == ErrorCode::NotInClass);
}

TEST_CASE("colouring {C3, TT3, P+(2,1)}-free graphs") {
  auto c7 = color_c3_tt3_p21(cyc(7));
  CHECK(c7.num_colors == 3);
  CHECK(certifies(cyc(7), c7));

  auto dk22 = PatternKind::dk(2).graph();
  auto cd = color_c3_tt3_p21(dk22);
  CHECK(cd.num_colors == 2);
  CHECK(certifies(dk22, cd));

  auto b = blow_up(cyc(7), {2, 1, 1, 1, 1, 1, 1});
  auto cb = color_c3_tt3_p21(b);
  CHECK(cb.num_colors == 3);
  CHECK(certifies(b, cb));

  CHECK(code_of([] { color_c3_tt3_p21(cyc(3)); }) == ErrorCode::NotInClass);
  CHECK(code_of([] { color_c3_tt3_p21(tt(3)); }) == ErrorCode::NotInClass);

  std::vector<PatternKind> cls{PatternKind::directed_cycle(3),
                               PatternKind::tt(3), PatternKind::p_plus_21()};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = random_f_free(11, 0.3, seed, cls);
    auto c = color_c3_tt3_p21(g);
    REQUIRE(c.num_colors <= 3);
    REQUIRE(certifies(g, c));
  }
}

TEST_CASE("7-hole colouring on extensions of long odd cycles") {
  HoleCertificate h7{{0, 1, 2, 3, 4, 5, 6}, true};
  auto c7 = color_strong_7hole(cyc(7), h7);
  CHECK(c7.num_colors == 3);
  CHECK(c7.assignment == std::vector<int>{0, 1, 0, 1, 0, 1, 2});
  CHECK(certifies(cyc(7), c7));

  auto b = blow_up(cyc(9), {2, 1, 1, 1, 1, 1, 1, 1, 1});
  auto hb = find_odd_hole(b);
  REQUIRE(hb.has_value());
  REQUIRE(hb->length() == 9);
  auto cb = color_strong_7hole(b, *hb);
  CHECK(cb.num_colors == 3);
  CHECK(certifies(b, cb));

  HoleCertificate h5{{0, 1, 2, 3, 4}, true};
  CHECK(code_of([&] { color_strong_7hole(cyc(5), h5); }) ==
        ErrorCode::NotInClass);
  CHECK(code_of([&] { color_strong_7hole(tt(3), h5); }) ==
        ErrorCode::NotInClass);
}

TEST_CASE("5-hole colouring: classes and the fixed schema") {
  auto gadget = two_pentagon_gadget();
  auto hole = find_odd_hole(gadget);
  REQUIRE(hole.has_value());
  REQUIRE(hole->cycle == std::vector<int>{0, 1, 2, 3, 4});

  auto [col, cls] = color_strong_5hole(gadget, *hole);
  // Every satellite u_j lands in a[j]; b and c stay empty.
  for (int i = 0; i < 5; ++i) {
    CHECK(cls.a[i] == std::vector<int>{5 + i});
    CHECK(cls.b[i].empty());
    CHECK(cls.c[i].empty());
  }
  CHECK(col.assignment == std::vector<int>{0, 1, 2, 3, 1, 0, 3, 2, 0, 1});
  CHECK(col.num_colors == 4);
  CHECK(certifies(gadget, col));

  // Bare pentagon: the schema is emitted verbatim, four distinct colours.
  HoleCertificate h5{{0, 1, 2, 3, 4}, true};
  auto [bare, bare_cls] = color_strong_5hole(cyc(5), h5);
  CHECK(bare.assignment == std::vector<int>{0, 1, 2, 3, 1});
  CHECK(distinct_colors(bare) == 4);
  for (int i = 0; i < 5; ++i) {
    CHECK(bare_cls.a[i].empty());
    CHECK(bare_cls.b[i].empty());
    CHECK(bare_cls.c[i].empty());
  }

  // One c-class twin of the hole: in from h[i-1], out to h[i+1] only.
  auto twin = blow_up(cyc(5), {2, 1, 1, 1, 1});
  auto ht = find_odd_hole(twin);
  REQUIRE(ht.has_value());
  REQUIRE(ht->cycle == std::vector<int>{0, 2, 3, 4, 5});
  auto [ct, clst] = color_strong_5hole(twin, *ht);
  CHECK(clst.c[0] == std::vector<int>{1});
  CHECK(ct.assignment == std::vector<int>{0, 0, 1, 2, 3, 1});
  CHECK(certifies(twin, ct));

  // b-class member: in from h[4] and h[2], out to h[1].
  auto bg = OrientedGraph::create(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {2, 5}, {5, 1}});
  auto [cbg, clsb] = color_strong_5hole(bg, h5);
  CHECK(clsb.b[0] == std::vector<int>{5});
  CHECK(cbg.assignment == std::vector<int>{0, 1, 2, 3, 1, 0});
  CHECK(certifies(bg, cbg));

  // c[1] flips to colour 3 exactly when it has a c[4] neighbour.
  auto cg = OrientedGraph::create(7, {{0, 1},
                                      {1, 2},
                                      {2, 3},
                                      {3, 4},
                                      {4, 0},
                                      {0, 5},
                                      {5, 2},
                                      {3, 6},
                                      {6, 0},
                                      {5, 6}});
  auto [ccg, clsc] = color_strong_5hole(cg, h5);
  CHECK(clsc.c[1] == std::vector<int>{5});
  CHECK(clsc.c[4] == std::vector<int>{6});
  CHECK(ccg.assignment == std::vector<int>{0, 1, 2, 3, 1, 3, 1});
  CHECK(certifies(cg, ccg));

  auto lone = OrientedGraph::create(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 2}});
  auto [clone_, clsl] = color_strong_5hole(lone, h5);
  CHECK(clsl.c[1] == std::vector<int>{5});
  CHECK(clone_.assignment == std::vector<int>{0, 1, 2, 3, 1, 1});
  CHECK(certifies(lone, clone_));

  CHECK(code_of([&] {
          HoleCertificate h7{{0, 1, 2, 3, 4, 5, 6}, true};
          color_strong_5hole(cyc(7), h7);
        }) == ErrorCode::NotInClass);
  CHECK(code_of([&] { color_strong_5hole(tt(2), h5); }) ==
        ErrorCode::NotInClass);
}

TEST_CASE("colouring {TT3, P+(2,1)}-free graphs end to end") {
  auto gadget = two_pentagon_gadget();
  auto cg = color_tt3_p21(gadget);
  CHECK(cg.num_colors == 4);
  CHECK(cg.assignment == std::vector<int>{0, 1, 2, 3, 1, 0, 3, 2, 0, 1});
  CHECK(certifies(gadget, cg));

  auto c7 = color_tt3_p21(cyc(7));
  CHECK(c7.num_colors == 3);
  CHECK(certifies(cyc(7), c7));

  auto c2 = color_tt3_p21(tt(2));  // no odd hole, exact fallback
  CHECK(c2.num_colors == 2);
  CHECK(certifies(tt(2), c2));

  CHECK(code_of([] { color_tt3_p21(tt(3)); }) == ErrorCode::NotInClass);
  CHECK(code_of([] {
          color_tt3_p21(PatternKind::p_plus_21().graph());
        }) == ErrorCode::NotInClass);

  std::vector<PatternKind> cls{PatternKind::tt(3), PatternKind::p_plus_21()};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = random_f_free(11, 0.3, seed * 2 + 1, cls);
    auto c = color_tt3_p21(g);
    REQUIRE(c.num_colors <= 4);
    REQUIRE(certifies(g, c));
  }
}

TEST_CASE("bipartite two-colouring with odd-cycle certificates") {
  auto c4 = color_bipartite_no_odd_cycle(cyc(4));
  CHECK(c4.num_colors == 2);
  CHECK(certifies(cyc(4), c4));

  auto dk33 = PatternKind::dk(3).graph();
  CHECK(color_bipartite_no_odd_cycle(dk33).num_colors == 2);

  CHECK(color_bipartite_no_odd_cycle(OrientedGraph::create(3, {})).num_colors ==
        1);

  try {
    color_bipartite_no_odd_cycle(cyc(5));
    FAIL("expected OddCycleFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddCycleFound);
    // The detail carries an explicit odd closed walk in the graph.
    auto detail = e.detail_json();
    CHECK(detail.find("cycle") != std::string::npos);
  }

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto g = random_graph(4 + int(seed % 6), 0.3, seed * 13 + 7);
    bool has_odd = oracles::oracle_chi(g) > 2;
    try {
      auto c = color_bipartite_no_odd_cycle(g);
      REQUIRE_FALSE(has_odd);
      REQUIRE(certifies(g, c));
      REQUIRE(c.num_colors <= 2);
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::OddCycleFound);
      REQUIRE(has_odd);
    }
  }
}

TEST_CASE("twin partition around a directed cycle") {
  auto b = blow_up(cyc(5), {2, 1, 2, 1, 1});
  // Class-major numbering: class 0 = {0,1}, class 2 = {3,4}.
  auto hole = find_odd_hole(b);
  REQUIRE(hole.has_value());
  std::vector<int> scope(b.n());
  for (int v = 0; v < b.n(); ++v) scope[v] = v;
  auto tp = build_twin_partition(b, hole->cycle, scope);
  REQUIRE(tp.classes.size() == 5);
  std::vector<std::vector<int>> got(tp.classes);
  for (auto& c : got) std::sort(c.begin(), c.end());
  std::vector<std::vector<int>> want{{0, 1}, {2}, {3, 4}, {5}, {6}};
  // Partition classes follow the hole's starting point; rotate to match.
  int shift = -1;
  for (int r = 0; r < 5; ++r)
    if (got[r] == want[0]) shift = r;
  REQUIRE(shift >= 0);
  for (int i = 0; i < 5; ++i) REQUIRE(got[(shift + i) % 5] == want[i]);

  // A vertex with two cycle in-neighbours fits no twin class.
  auto bad = OrientedGraph::create(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {2, 5}, {5, 1}});
  std::vector<int> scope6{0, 1, 2, 3, 4, 5};
  CHECK(code_of([&] {
          build_twin_partition(bad, {0, 1, 2, 3, 4}, scope6);
        }) == ErrorCode::StructureViolation);
}
