#pragma once

#include <string>

#include "chiforb/oriented_graph.hpp"

namespace chiforb {

// On-disk graph format: {"n": <int>, "arcs": [[u,v], ...]}.
// Writing sorts arcs lexicographically and is byte-stable; reading accepts
// arcs in any order and runs the usual creation validation.
std::string to_json(const OrientedGraph& g);
OrientedGraph graph_from_json(const std::string& text);

void write_graph_file(const OrientedGraph& g, const std::string& path);
OrientedGraph read_graph_file(const std::string& path);

// Graphviz digraph with plain integer node names.
std::string to_dot(const OrientedGraph& g);

// FNV-1a over the canonical JSON, as a 16-digit hex string. Used to key
// check reports to instances.
std::string fingerprint(const OrientedGraph& g);
std::string fingerprint_text(const std::string& payload);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace chiforb
