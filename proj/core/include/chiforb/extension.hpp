#pragma once

#include <optional>
#include <vector>

#include "chiforb/oriented_graph.hpp"

namespace chiforb {

// Witness that a host graph is an extension (blow-up) of a pattern: classes
// partition the host vertices, classes[i] substitutes pattern vertex i, and
// the host arc set is exactly {xy : x in classes[i], y in classes[j], ij a
// pattern arc}. Classes may be empty.
struct ExtensionWitness {
  std::vector<std::vector<int>> classes;
};

// Replace pattern vertex i by a stable set of sizes[i] vertices (sizes[i] may
// be 0). Output vertex order is class-major: class 0 first, then class 1, ...
// Throws SizeMismatch when sizes.size() != pattern.n().
OrientedGraph blow_up(const OrientedGraph& pattern,
                      const std::vector<int>& sizes);

// Decide whether host = blow_up(pattern, ...) for some class sizes and return
// a witness. Host vertices with equal (in, out) neighbourhood pairs must share
// a class, and each class is exactly one such signature group, so the search
// is over injections of signature groups into pattern vertices.
std::optional<ExtensionWitness> is_extension_of(const OrientedGraph& host,
                                                const OrientedGraph& pattern);

}  // namespace chiforb
