#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chiforb/oriented_graph.hpp"

namespace chiforb {

// Catalogue of the forbidden patterns the library talks about.
//
//   TT(n)           transitive tournament, arcs i->j for i < j
//   DirectedCycle(n) arcs i -> i+1 mod n, n >= 3
//   Star(k, l)      centre 0 with k in-leaves 1..k and l out-leaves k+1..k+l
//   Pplus3          0->1->2->3
//   Pplus21         0->1->2<-3
//   Pminus21        1->0, 2->1, 2->3
//   Pplus111        0->1, 2->1, 2->3
//   DK(n)           complete bipartite, all arcs from part {0..n-1} to part
//                   {n..2n-1}
//   C31             four-cycle 0->1->2->3 closed by 0->3
//   C22             four-cycle 0->1->2 and 0->3->2
//   Custom          any oriented graph
class PatternKind {
 public:
  enum class Tag {
    TT,
    DirectedCycle,
    Star,
    Pplus3,
    Pplus21,
    Pminus21,
    Pplus111,
    DK,
    C31,
    C22,
    Custom,
  };

  static PatternKind tt(int n);
  static PatternKind directed_cycle(int n);
  static PatternKind star(int k, int l);
  static PatternKind p_plus_3();
  static PatternKind p_plus_21();
  static PatternKind p_minus_21();
  static PatternKind p_plus_111();
  static PatternKind dk(int n);
  static PatternKind c31();
  static PatternKind c22();
  static PatternKind custom(OrientedGraph g, std::string name = "custom");

  Tag tag() const { return tag_; }
  int a() const { return a_; }
  int b() const { return b_; }

  const OrientedGraph& graph() const { return *graph_; }
  const std::string& name() const { return name_; }

  // CLI spelling: tt3, c5, s2-2, p3+, p21+, p21-, p111+, dk3, c31, c22,
  // custom:<file.json>. The literal names c31 and c22 always mean the mixed
  // four-cycles, so plain directed cycles of those two lengths need a custom
  // file.
  static PatternKind parse(const std::string& text);

 private:
  PatternKind(Tag tag, int a, int b, OrientedGraph g, std::string name);

  Tag tag_;
  int a_ = 0, b_ = 0;
  std::shared_ptr<const OrientedGraph> graph_;
  std::string name_;
};

std::vector<PatternKind> parse_pattern_list(const std::string& comma_separated);

}  // namespace chiforb
