#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace csf {

// Simple undirected graph on at most 64 vertices.  Adjacency is one 64-bit
// mask per vertex; the matrix is kept symmetric and irreflexive.
class Graph {
public:
  static constexpr int max_vertices = 64;

  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  uint64_t adjacency(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return __builtin_popcountll(adjacency(v)); }
  uint64_t vertex_mask() const;
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;
  // Subgraph induced by the vertices in `mask`, relabeled in ascending order.
  Graph induced_subgraph(uint64_t mask) const;
  // Relabeled copy: vertex v of this graph becomes perm[v].
  Graph permuted(std::span<const int> perm) const;
  Graph disjoint_union(const Graph& other) const;

  // Vertex sets of connected components, ordered by smallest contained id.
  std::vector<std::vector<int>> components() const;
  bool connected() const;

  bool has_triangle() const;

  // Maximum independent-set size, by branch and bound with a greedy
  // clique-cover upper bound.
  int independence_number() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b) = default;

private:
  void check_vertex(int v, const char* who) const;

  int n_ = 0;
  std::vector<uint64_t> adj_;
};

// Parses the plain edge-list format: first line "n m", then m lines "u v"
// with 0-based endpoints.  Throws ParseError with a line number on bad input.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace csf
