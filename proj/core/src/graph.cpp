#include "csf/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "csf/sympoly.hpp"  // ParseError

namespace csf {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_vertices) {
    throw std::invalid_argument("Graph: vertex count must be between 0 and 64");
  }
  adj_.assign(static_cast<size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v, const char* who) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) +
                                " out of range for order " + std::to_string(n_));
  }
}

int Graph::edge_count() const {
  int total = 0;
  for (uint64_t a : adj_) total += __builtin_popcountll(a);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, "Graph::has_edge");
  check_vertex(v, "Graph::has_edge");
  return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, "Graph::add_edge");
  check_vertex(v, "Graph::add_edge");
  if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop rejected");
  adj_[static_cast<size_t>(u)] |= uint64_t{1} << v;
  adj_[static_cast<size_t>(v)] |= uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u, "Graph::remove_edge");
  check_vertex(v, "Graph::remove_edge");
  adj_[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
  adj_[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
}

uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    uint64_t above = adj_[static_cast<size_t>(u)] >> (u + 1);
    while (above) {
      int v = u + 1 + __builtin_ctzll(above);
      out.emplace_back(u, v);
      above &= above - 1;
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  uint64_t all = vertex_mask();
  for (int v = 0; v < n_; ++v) {
    g.adj_[static_cast<size_t>(v)] = all & ~adj_[static_cast<size_t>(v)] & ~(uint64_t{1} << v);
  }
  return g;
}

Graph Graph::induced_subgraph(uint64_t mask) const {
  mask &= vertex_mask();
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v) {
    if ((mask >> v) & 1) keep.push_back(v);
  }
  Graph g(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i) {
    for (size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("Graph::permuted: permutation size mismatch");
  }
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    uint64_t a = adj_[static_cast<size_t>(u)];
    while (a) {
      int v = __builtin_ctzll(a);
      a &= a - 1;
      if (u < v) g.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    }
  }
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  if (n_ + other.n_ > max_vertices) {
    throw std::invalid_argument("Graph::disjoint_union: too many vertices");
  }
  Graph g(n_ + other.n_);
  for (int v = 0; v < n_; ++v) g.adj_[static_cast<size_t>(v)] = adj_[static_cast<size_t>(v)];
  for (int v = 0; v < other.n_; ++v) {
    g.adj_[static_cast<size_t>(n_ + v)] = other.adj_[static_cast<size_t>(v)] << n_;
  }
  return g;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  uint64_t seen = 0;
  for (int v = 0; v < n_; ++v) {
    if ((seen >> v) & 1) continue;
    uint64_t comp = uint64_t{1} << v;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      uint64_t f = frontier;
      while (f) {
        int u = __builtin_ctzll(f);
        f &= f - 1;
        next |= adj_[static_cast<size_t>(u)];
      }
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> vertices;
    uint64_t c = comp;
    while (c) {
      vertices.push_back(__builtin_ctzll(c));
      c &= c - 1;
    }
    out.push_back(std::move(vertices));
  }
  return out;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  return components().size() == 1;
}

bool Graph::has_triangle() const {
  for (int u = 0; u < n_; ++u) {
    uint64_t above = adj_[static_cast<size_t>(u)] >> (u + 1);
    while (above) {
      int v = u + 1 + __builtin_ctzll(above);
      above &= above - 1;
      if (adj_[static_cast<size_t>(u)] & adj_[static_cast<size_t>(v)]) return true;
    }
  }
  return false;
}

namespace {

// Upper bound on the independent set inside `cand`: size of a greedy clique
// cover (each clique contributes at most one vertex).
int clique_cover_bound(const Graph& g, uint64_t cand) {
  int cliques = 0;
  while (cand) {
    int v = __builtin_ctzll(cand);
    uint64_t clique = uint64_t{1} << v;
    uint64_t common = g.adjacency(v) & cand;
    cand &= ~clique;
    while (common) {
      int u = __builtin_ctzll(common);
      clique |= uint64_t{1} << u;
      cand &= ~(uint64_t{1} << u);
      common &= g.adjacency(u) & ~clique;
    }
    ++cliques;
  }
  return cliques;
}

void mis_search(const Graph& g, uint64_t cand, int size, int& best) {
  if (size > best) best = size;
  if (!cand) return;
  if (size + clique_cover_bound(g, cand) <= best) return;

  // Branch on a candidate of maximum degree within the candidate set.
  int pivot = -1, pivot_deg = -1;
  uint64_t c = cand;
  while (c) {
    int v = __builtin_ctzll(c);
    c &= c - 1;
    int d = __builtin_popcountll(g.adjacency(v) & cand);
    if (d > pivot_deg) {
      pivot_deg = d;
      pivot = v;
    }
  }
  uint64_t bit = uint64_t{1} << pivot;
  mis_search(g, cand & ~(g.adjacency(pivot) | bit), size + 1, best);
  mis_search(g, cand & ~bit, size, best);
}

}  // namespace

int Graph::independence_number() const {
  int best = 0;
  mis_search(*this, vertex_mask(), 0, best);
  return best;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("edge list: empty input");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"n m\"");
  }
  if (n > Graph::max_vertices) {
    throw ParseError("edge list line " + std::to_string(lineno) + ": vertex count " +
                     std::to_string(n) + " exceeds 64");
  }
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    }
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": endpoint out of range");
    }
    if (u == v) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": self-loop rejected");
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace csf
