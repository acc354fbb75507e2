#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chiforb/oriented_graph.hpp"

namespace chiforb {

enum class ColoringMode { Proper, TriangleFree };

// Vertex colouring of the underlying graph. Proper mode forbids equal colours
// across an edge; triangle-free mode only forbids monochromatic triangles.
struct Coloring {
  std::vector<int> assignment;
  int num_colors = 0;
  ColoringMode mode = ColoringMode::Proper;
};

// Renumber colours to 0..k-1 in order of first appearance and set num_colors
// to the count actually used.
Coloring normalized(Coloring c);

// First edge with equal endpoint colours, if any.
std::optional<Arc> proper_violation(const OrientedGraph& g,
                                    const std::vector<int>& assignment);

// First monochromatic underlying-graph triangle, if any.
std::optional<std::array<int, 3>> monochromatic_triangle(
    const OrientedGraph& g, const std::vector<int>& assignment);

// True when the colouring is valid for its mode.
bool certifies(const OrientedGraph& g, const Coloring& c);

// {"num_colors": k, "colors": [...], "mode": "proper"|"triangle-free"}
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text);

}  // namespace chiforb
