#include "chiforb/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chiforb {

using nlohmann::json;

std::string to_json(const OrientedGraph& g) {
  // Hand-rolled so the byte layout is independent of library defaults.
  std::ostringstream os;
  os << "{\"n\": " << g.n() << ", \"arcs\": [";
  bool first = true;
  for (auto [u, v] : g.arcs()) {
    if (!first) os << ", ";
    first = false;
    os << "[" << u << ", " << v << "]";
  }
  os << "]}";
  return os.str();
}

OrientedGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadSpec, std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw Error(ErrorCode::BadSpec, "graph JSON needs fields \"n\" and \"arcs\"");
  if (!j["n"].is_number_integer())
    throw Error(ErrorCode::BadSpec, "graph JSON: \"n\" must be an integer");
  std::vector<Arc> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
        !a[1].is_number_integer())
      throw Error(ErrorCode::BadSpec, "graph JSON: arcs must be [u, v] pairs");
    arcs.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return OrientedGraph::create(j["n"].get<int>(), std::move(arcs));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadSpec, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::BadSpec, "cannot write " + path);
  out << text;
}

void write_graph_file(const OrientedGraph& g, const std::string& path) {
  write_text_file(path, to_json(g) + "\n");
}

OrientedGraph read_graph_file(const std::string& path) {
  return graph_from_json(read_text_file(path));
}

std::string to_dot(const OrientedGraph& g) {
  std::ostringstream os;
  os << "digraph {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string fingerprint_text(const std::string& payload) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

std::string fingerprint(const OrientedGraph& g) {
  return fingerprint_text(to_json(g));
}

}  // namespace chiforb
