#pragma once

#include <string>
#include <string_view>

#include "csf/graph.hpp"

namespace csf {

Graph path_graph(int k);      // k >= 1
Graph cycle_graph(int k);     // k >= 3
Graph complete_graph(int k);  // k >= 0
Graph empty_graph(int k);     // k >= 0

// Triangle with one pendant vertex attached at each corner (the net graph);
// offered on the command line under the name "three-sun".  The 6-vertex graph
// that some sources call the 3-sun is generalized_pyramid(1, 1, 1).
Graph three_sun();

// Stable triple {a,b,c} plus three ovals S_ab, S_ac, S_bc of the given sizes.
// Each oval is a clique, each oval vertex is adjacent to the two stable
// vertices in its label, and all edges between distinct ovals are present.
// At least two oval sizes must be positive.
Graph generalized_pyramid(int p, int q, int r);

// Resolves names like "claw", "path:5", "cycle:6", "complete:4", "empty:3",
// "pyramid:2,1,1", "three-sun" and the other four-vertex graph names.
// Throws ParseError on unknown names.
Graph named_graph(std::string_view name);

// One-line list of all accepted names, for CLI help and error messages.
std::string named_graph_vocabulary();

}  // namespace csf
