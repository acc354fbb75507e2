#include "chiforb/coloring.hpp"

#include <sstream>

#include <json.hpp>

namespace chiforb {

using nlohmann::json;

Coloring normalized(Coloring c) {
  std::vector<int> remap;
  for (int& col : c.assignment) {
    if (col < 0) throw Error(ErrorCode::BadSpec, "negative colour");
    while (int(remap.size()) <= col) remap.push_back(-1);
    if (remap[col] < 0) {
      int next = 0;
      for (int r : remap) next = std::max(next, r + 1);
      remap[col] = next;
    }
    col = remap[col];
  }
  c.num_colors = 0;
  for (int col : c.assignment) c.num_colors = std::max(c.num_colors, col + 1);
  return c;
}

std::optional<Arc> proper_violation(const OrientedGraph& g,
                                    const std::vector<int>& assignment) {
  for (auto [u, v] : g.arcs())
    if (assignment[u] == assignment[v]) return Arc{u, v};
  return std::nullopt;
}

std::optional<std::array<int, 3>> monochromatic_triangle(
    const OrientedGraph& g, const std::vector<int>& assignment) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = g.und(u).next(u + 1); v >= 0; v = g.und(u).next(v + 1)) {
      if (assignment[u] != assignment[v]) continue;
      Bits common = g.und(u) & g.und(v);
      for (int w = common.next(v + 1); w >= 0; w = common.next(w + 1))
        if (assignment[w] == assignment[u]) return std::array<int, 3>{u, v, w};
    }
  return std::nullopt;
}

bool certifies(const OrientedGraph& g, const Coloring& c) {
  if (int(c.assignment.size()) != g.n()) return false;
  for (int col : c.assignment)
    if (col < 0 || col >= c.num_colors) return false;
  if (c.mode == ColoringMode::Proper)
    return !proper_violation(g, c.assignment).has_value();
  return !monochromatic_triangle(g, c.assignment).has_value();
}

std::string coloring_to_json(const Coloring& c) {
  std::ostringstream os;
  os << "{\"num_colors\": " << c.num_colors << ", \"colors\": [";
  for (size_t i = 0; i < c.assignment.size(); ++i) {
    if (i) os << ", ";
    os << c.assignment[i];
  }
  os << "], \"mode\": \""
     << (c.mode == ColoringMode::Proper ? "proper" : "triangle-free")
     << "\"}";
  return os.str();
}

Coloring coloring_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadSpec, std::string("coloring JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("num_colors") || !j.contains("colors") ||
      !j.contains("mode"))
    throw Error(ErrorCode::BadSpec,
                "coloring JSON needs num_colors, colors, mode");
  Coloring c;
  c.num_colors = j["num_colors"].get<int>();
  for (const auto& x : j["colors"]) c.assignment.push_back(x.get<int>());
  std::string mode = j["mode"].get<std::string>();
  if (mode == "proper")
    c.mode = ColoringMode::Proper;
  else if (mode == "triangle-free")
    c.mode = ColoringMode::TriangleFree;
  else
    throw Error(ErrorCode::BadSpec, "coloring JSON: unknown mode " + mode);
  return c;
}

}  // namespace chiforb
