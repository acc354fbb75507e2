#include "chiforb/relations.hpp"

#include <algorithm>

namespace chiforb {

namespace {
void validate_sides(const OrientedGraph& g, const BipartiteRelation& rel) {
  for (const auto* side : {&rel.a, &rel.b})
    for (int v : *side)
      if (v < 0 || v >= g.n())
        throw Error(ErrorCode::VertexOutOfRange,
                    "relation vertex " + std::to_string(v));
  Bits in_a(g.n());
  for (int v : rel.a) in_a.set(v);
  for (int v : rel.b)
    if (in_a.test(v))
      throw Error(ErrorCode::NotDisjoint,
                  "vertex " + std::to_string(v) + " is on both sides");
  for (const auto* side : {&rel.a, &rel.b})
    for (size_t i = 0; i < side->size(); ++i)
      for (size_t j = i + 1; j < side->size(); ++j)
        if (g.adjacent((*side)[i], (*side)[j]))
          throw Error(ErrorCode::NotStable,
                      "adjacent pair (" + std::to_string((*side)[i]) + "," +
                          std::to_string((*side)[j]) + ") inside one side");
}

// Search for k vertices of a and k of b with no arcs between them.
bool find_bihole(const OrientedGraph& g, const std::vector<int>& a,
                 const std::vector<int>& b, int k, std::vector<int>& pick_a,
                 std::vector<int>& pick_b) {
  if (int(a.size()) < k || int(b.size()) < k) return false;
  Bits b_all(g.n());
  for (int v : b) b_all.set(v);
  auto rec = [&](auto&& self, size_t from, Bits nonadj) -> bool {
    if (int(pick_a.size()) == k) {
      if (nonadj.count() < k) return false;
      pick_b.clear();
      for (int v = nonadj.first(); int(pick_b.size()) < k;
           v = nonadj.next(v + 1))
        pick_b.push_back(v);
      return true;
    }
    for (size_t i = from; i < a.size(); ++i) {
      Bits next = nonadj;
      next.subtract(g.und(a[i]));
      if (next.count() < k) continue;
      pick_a.push_back(a[i]);
      if (self(self, i + 1, next)) return true;
      pick_a.pop_back();
    }
    return false;
  };
  pick_a.clear();
  return rec(rec, 0, b_all);
}
}  // namespace

std::optional<RsViolation> rs_violation(const OrientedGraph& g,
                                        const BipartiteRelation& rel) {
  if (rel.k < 1) throw Error(ErrorCode::BadSpec, "relation needs k >= 1");
  validate_sides(g, rel);
  Bits in_a(g.n());
  for (int v : rel.a) in_a.set(v);
  for (int b : rel.b) {
    Bits hit = g.out(b) & in_a;
    int tgt = hit.first();
    if (tgt >= 0) return RsViolation{Arc{b, tgt}, {}, {}};
  }
  std::vector<int> pa, pb;
  if (find_bihole(g, rel.a, rel.b, rel.k, pa, pb))
    return RsViolation{std::nullopt, pa, pb};
  return std::nullopt;
}

bool rs_tau_check(const OrientedGraph& g, const BipartiteRelation& rel,
                  double tau) {
  if (!(tau > 0.0 && tau < 1.0))
    throw Error(ErrorCode::BadTau, "tau must lie strictly inside (0, 1)");
  validate_sides(g, rel);
  Bits in_a(g.n()), in_b(g.n());
  for (int v : rel.a) in_a.set(v);
  for (int v : rel.b) in_b.set(v);
  for (int a : rel.a)
    if ((g.out(a) & in_b).count() < tau * double(rel.b.size())) return false;
  for (int b : rel.b)
    if ((g.in(b) & in_a).count() < tau * double(rel.a.size())) return false;
  return rs_check(g, rel);
}

}  // namespace chiforb
