#pragma once

#include <span>
#include <string>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

struct CanonicalResult {
  Graph graph;                  // canonical representative
  std::vector<int> relabeling;  // relabeling[old vertex] = new vertex
};

// Canonical labeling for graphs on at most 16 vertices: iterated
// degree-partition refinement, backtracking on the first non-singleton cell,
// returning the labeling whose adjacency encoding is lexicographically least.
CanonicalResult canonical_form(const Graph& g);

// Variant that respects vertex colors: only labelings keeping the color
// classes in ascending color order are considered.  Isomorphic colored
// graphs receive identical keys.
CanonicalResult canonical_form(const Graph& g, std::span<const int> colors);

// Byte key of a graph exactly as labeled: order byte, then the packed upper
// triangle.  Two graphs have equal keys iff they are identical as labeled.
std::string adjacency_key(const Graph& g);

// Compact byte-string key identifying the isomorphism class:
// adjacency_key of the canonical form (plus colors when given).
std::string canonical_key(const Graph& g);
std::string canonical_key(const Graph& g, std::span<const int> colors);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace csf
