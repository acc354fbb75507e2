#include "chiforb/patterns.hpp"

#include "chiforb/graph_io.hpp"

namespace chiforb {

PatternKind::PatternKind(Tag tag, int a, int b, OrientedGraph g,
                         std::string name)
    : tag_(tag),
      a_(a),
      b_(b),
      graph_(std::make_shared<const OrientedGraph>(std::move(g))),
      name_(std::move(name)) {}

PatternKind PatternKind::tt(int n) {
  if (n < 1) throw Error(ErrorCode::BadSpec, "TT order must be positive");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
  return {Tag::TT, n, 0, OrientedGraph::create(n, std::move(arcs)),
          "tt" + std::to_string(n)};
}

PatternKind PatternKind::directed_cycle(int n) {
  if (n < 3)
    throw Error(ErrorCode::BadSpec,
                "directed cycles below length 3 are not oriented graphs");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return {Tag::DirectedCycle, n, 0, OrientedGraph::create(n, std::move(arcs)),
          "c" + std::to_string(n)};
}

PatternKind PatternKind::star(int k, int l) {
  if (k < 0 || l < 0 || k + l == 0)
    throw Error(ErrorCode::BadSpec, "star needs k, l >= 0 with k + l >= 1");
  std::vector<Arc> arcs;
  for (int i = 1; i <= k; ++i) arcs.push_back({i, 0});
  for (int j = k + 1; j <= k + l; ++j) arcs.push_back({0, j});
  return {Tag::Star, k, l, OrientedGraph::create(k + l + 1, std::move(arcs)),
          "s" + std::to_string(k) + "-" + std::to_string(l)};
}

PatternKind PatternKind::p_plus_3() {
  return {Tag::Pplus3, 0, 0,
          OrientedGraph::create(4, {{0, 1}, {1, 2}, {2, 3}}), "p3+"};
}

PatternKind PatternKind::p_plus_21() {
  return {Tag::Pplus21, 0, 0,
          OrientedGraph::create(4, {{0, 1}, {1, 2}, {3, 2}}), "p21+"};
}

PatternKind PatternKind::p_minus_21() {
  return {Tag::Pminus21, 0, 0,
          OrientedGraph::create(4, {{1, 0}, {2, 1}, {2, 3}}), "p21-"};
}

PatternKind PatternKind::p_plus_111() {
  return {Tag::Pplus111, 0, 0,
          OrientedGraph::create(4, {{0, 1}, {2, 1}, {2, 3}}), "p111+"};
}

PatternKind PatternKind::dk(int n) {
  if (n < 1) throw Error(ErrorCode::BadSpec, "DK part size must be positive");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) arcs.push_back({i, n + j});
  return {Tag::DK, n, 0, OrientedGraph::create(2 * n, std::move(arcs)),
          "dk" + std::to_string(n)};
}

PatternKind PatternKind::c31() {
  return {Tag::C31, 0, 0,
          OrientedGraph::create(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), "c31"};
}

PatternKind PatternKind::c22() {
  return {Tag::C22, 0, 0,
          OrientedGraph::create(4, {{0, 1}, {1, 2}, {3, 2}, {0, 3}}), "c22"};
}

PatternKind PatternKind::custom(OrientedGraph g, std::string name) {
  return {Tag::Custom, 0, 0, std::move(g), std::move(name)};
}

namespace {
bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
    if (v > 100000) return false;
  }
  out = v;
  return true;
}
}  // namespace

PatternKind PatternKind::parse(const std::string& text) {
  if (text == "p3+") return p_plus_3();
  if (text == "p21+") return p_plus_21();
  if (text == "p21-") return p_minus_21();
  if (text == "p111+") return p_plus_111();
  if (text == "c31") return c31();
  if (text == "c22") return c22();
  if (text.rfind("custom:", 0) == 0)
    return custom(read_graph_file(text.substr(7)), text);
  int v;
  if (text.size() > 2 && text.rfind("tt", 0) == 0 &&
      parse_int(text.substr(2), v))
    return tt(v);
  if (text.size() > 2 && text.rfind("dk", 0) == 0 &&
      parse_int(text.substr(2), v))
    return dk(v);
  if (text.size() > 1 && text[0] == 'c' && parse_int(text.substr(1), v))
    return directed_cycle(v);
  if (text.size() > 1 && text[0] == 's') {
    auto dash = text.find('-');
    int k, l;
    if (dash != std::string::npos && parse_int(text.substr(1, dash - 1), k) &&
        parse_int(text.substr(dash + 1), l))
      return star(k, l);
  }
  throw Error(ErrorCode::BadSpec, "unknown pattern name \"" + text + "\"");
}

std::vector<PatternKind> parse_pattern_list(const std::string& text) {
  std::vector<PatternKind> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(PatternKind::parse(item));
    pos = comma + 1;
  }
  return out;
}

}  // namespace chiforb
