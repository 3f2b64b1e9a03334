#pragma once

#include <functional>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

struct EnumerateOptions {
  // Optional class filter.  Must be hereditary (closed under taking induced
  // subgraphs), e.g. freeness from a set of four-vertex graphs or a cap on
  // the independence number; the generator prunes whole levels with it.
  std::function<bool(const Graph&)> hereditary_filter;
  // Vertex counts above 9 must be opted into (they grow quickly).
  bool allow_large = false;
};

// One canonical representative per isomorphism class on exactly n vertices,
// in a deterministic order.  n <= 9 by default, n <= 12 with allow_large.
std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& options = {});

// Levels 1..n of the same enumeration (index 0 holds the 1-vertex level).
std::vector<std::vector<Graph>> enumerate_levels(int n, const EnumerateOptions& options = {});

}  // namespace csf
