#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chiforb/oriented_graph.hpp"

namespace chiforb {

using Rational = boost::multiprecision::cpp_rational;

enum class Verdict { Holds, Violated, NotInClass, Vacuous };

const char* verdict_name(Verdict v);

struct CheckItem {
  std::string name;
  Verdict verdict = Verdict::Holds;
  std::string witness;  // JSON text, empty when absent
};

// One check run against one instance. Violations always carry a witness that
// fails the stated condition on its own; class-membership failures are the
// distinct not-in-class verdict, never a silent pass.
struct CheckReport {
  std::string check;
  std::string fingerprint;
  Verdict verdict = Verdict::Holds;
  std::string witness;  // JSON text, empty when absent
  std::vector<CheckItem> items;
  std::string note;
};

std::string check_report_to_json(const CheckReport& r);

// Exact-arithmetic constant chain for the k-star triangle-colouring bound.
// All fields satisfy their defining equations exactly; bound = 2d is the
// final (astronomically large, but finite) colour count.
struct SkkConstants {
  int k = 0;
  Rational s, eps, t, g;
  long long n_kp = 0;  // threshold N(k, p) at p = 1 - t - eps
  Rational n1, n2, d, bound;
};

// Least n with (k-1) * C(n,k) * p^k < k * C(floor(p*n), k), scanned upward
// from ceil(k/p) under exact rational arithmetic. TooLarge when no n below
// the scan cap qualifies.
long long comb_threshold(int k, const Rational& p);

// Defaults: eps = 1/(4k), t = (s + 1 - eps)/2 where s = 1 - 1/(2k).
// BadInterval when k < 2 or a supplied parameter leaves its interval
// (0 < eps < 1/(2k), s < t < 1 - eps).
SkkConstants skk_constants(int k,
                           std::optional<Rational> eps = std::nullopt,
                           std::optional<Rational> t = std::nullopt);

std::string skk_constants_to_json(const SkkConstants& c);

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;
};

// {"n": <int>, "edges": [[v, ...], ...]}
Hypergraph hypergraph_from_json(const std::string& text);
std::string hypergraph_to_json(const Hypergraph& h);

// trans(T) >= 1 + floor(log2 n) on tournaments. Throws NotTournament.
CheckReport check_erdos_moser(const OrientedGraph& t);

// In a (TT3, S_{k,k})-free graph, N+(x) dominates N-(x) at scale k for
// every x.
CheckReport check_nbr_lemma(const OrientedGraph& d, int k);

// If every hyperedge has size >= p*n and any k hyperedges meet in at most
// k-1 vertices, then |E| < k/p^k. Vacuous when a precondition fails.
CheckReport check_comb_lemma(const Hypergraph& h, int k, const Rational& p);

// Under the tau-degree preconditions into B, C dominates A at scale k.
// A, B, C must be disjoint stable sets (NotStable / NotDisjoint), tau must
// lie in (s, 1) with s = 1 - 1/(2k) (BadTau).
CheckReport check_ppk1(const OrientedGraph& d, const std::vector<int>& a,
                       const std::vector<int>& b, const std::vector<int>& c,
                       const Rational& tau, int k);

// Per odd hole: directedness, initial strong component, adjacency of
// backward-reaching vertices, the exact arc-pattern menu for outside
// vertices, and (when the graph is also C3-free) the twin partition of the
// hole's strong component. The note names which suite applied.
CheckReport check_odd_hole_lemmas(const OrientedGraph& d);

// chi <= (4k-2) * tri on (TT3, S_{k,k})-free graphs.
CheckReport check_tchi_bound(const OrientedGraph& d, int k);

// chi <= 2k + 2l - 2 on (C3, TT3, S_{k,l})-free graphs.
CheckReport check_star_triangle_bound(const OrientedGraph& d, int k, int l);

// Connected (TT3, S11)-free graphs split sources from sinks (C3-free case)
// or are extensions of C3; holds iff the matching structure exists.
CheckReport check_s11_structure(const OrientedGraph& d);

// Every orientation of the input tree (arc directions ignored, <= 20 edges)
// contains an induced forward P3-path or the one-one-one path. Throws
// NotATree / TooLarge.
CheckReport check_tree_all_orientations(const OrientedGraph& t);

// Informational probe of strong P-(2,1)-free structure: reports whether the
// graph is strong, free of the forward (2,1)-path, a bipartite tournament,
// and an extension of some directed cycle. Never asserts anything.
struct StrongP21Remark {
  bool strong = false;
  bool p21_free = false;
  bool bipartite_tournament = false;
  bool cycle_extension = false;
};

StrongP21Remark strong_p21_remark(const OrientedGraph& d);

}  // namespace chiforb
