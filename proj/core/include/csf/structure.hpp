#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "csf/four_vertex.hpp"
#include "csf/graph.hpp"

namespace csf {

// Thrown by the structure recognizers when a precondition fails; the message
// names the violated condition and a witness.
class StructureError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct MultipartiteResult {
  bool is_complete_multipartite = false;
  std::vector<int> part_sizes;  // descending; empty unless recognized
};

// A graph is complete multipartite iff its complement is a disjoint union of
// cliques; the parts are the complement's components.
MultipartiteResult complete_multipartite_parts(const Graph& g);

enum class ShapeKind { path, cycle };

struct ComponentShape {
  ShapeKind kind;
  int size;
};

// For a (claw, triangle)-free graph, every component is a path or a cycle.
// Returns one shape per component (component order by smallest vertex).
// Throws StructureError if the graph has a claw or a triangle.
std::vector<ComponentShape> claw_triangle_free_shape(const Graph& g);

// Decomposition of a "peculiar" graph: connected, (claw, co-diamond)-free,
// independence number exactly 3, and containing a triangle.  Such a graph
// has a stable triple {a,b,c}; every other vertex is adjacent to exactly two
// of a,b,c, which sorts it into one of three ovals.
struct PeculiarDecomposition {
  std::array<int, 3> co_triangle;       // a < b < c
  std::array<std::vector<int>, 3> ovals;  // S_ab, S_ac, S_bc
};

// Finds the decomposition using the lexicographically least stable triple.
// Throws StructureError naming the failed condition (with witness) when the
// graph is not peculiar.
PeculiarDecomposition decompose_peculiar(const Graph& g);

bool is_peculiar(const Graph& g);

}  // namespace csf
