#include "csf/named_graphs.hpp"

#include <stdexcept>
#include <vector>

#include "csf/four_vertex.hpp"
#include "csf/sympoly.hpp"  // ParseError

namespace csf {

Graph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path_graph: need at least one vertex");
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle_graph: need at least three vertices");
  Graph g(k);
  for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

Graph complete_graph(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int k) { return Graph(k); }

Graph three_sun() {
  return Graph::from_edges(
      6, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}, {4, 5}});
}

Graph generalized_pyramid(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) {
    throw std::invalid_argument("generalized_pyramid: oval sizes must be nonnegative");
  }
  int positive = (p > 0) + (q > 0) + (r > 0);
  if (positive < 2) {
    throw std::invalid_argument("generalized_pyramid: at least two ovals must be non-empty");
  }
  int n = 3 + p + q + r;
  if (n > Graph::max_vertices) throw std::invalid_argument("generalized_pyramid: too many vertices");
  Graph g(n);
  // Vertices 0,1,2 form the stable triple (a,b,c); ovals follow in order
  // S_ab, S_ac, S_bc.
  struct Oval {
    int first, size, end1, end2;
  };
  Oval ovals[3] = {
      {3, p, 0, 1},
      {3 + p, q, 0, 2},
      {3 + p + q, r, 1, 2},
  };
  for (const Oval& o : ovals) {
    for (int i = 0; i < o.size; ++i) {
      int v = o.first + i;
      g.add_edge(v, o.end1);
      g.add_edge(v, o.end2);
      for (int j = i + 1; j < o.size; ++j) g.add_edge(v, o.first + j);
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (int i = 0; i < ovals[a].size; ++i) {
        for (int j = 0; j < ovals[b].size; ++j) {
          g.add_edge(ovals[a].first + i, ovals[b].first + j);
        }
      }
    }
  }
  return g;
}

namespace {

int parse_count(std::string_view text, std::string_view what) {
  if (text.empty()) throw ParseError("named graph: missing size after '" + std::string(what) + ":'");
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("named graph: bad size '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
    if (value > Graph::max_vertices) throw ParseError("named graph: size exceeds 64");
  }
  return value;
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (auto kind = kind_from_name(name)) return kind_prototype(*kind);
  if (name == "three-sun" || name == "three_sun") return three_sun();

  size_t colon = name.find(':');
  if (colon != std::string_view::npos) {
    std::string_view family = name.substr(0, colon);
    std::string_view rest = name.substr(colon + 1);
    if (family == "path") return path_graph(parse_count(rest, family));
    if (family == "cycle") return cycle_graph(parse_count(rest, family));
    if (family == "complete") return complete_graph(parse_count(rest, family));
    if (family == "empty") return empty_graph(parse_count(rest, family));
    if (family == "pyramid") {
      int sizes[3];
      size_t start = 0;
      for (int i = 0; i < 3; ++i) {
        size_t comma = rest.find(',', start);
        bool last = i == 2;
        if (last != (comma == std::string_view::npos)) {
          throw ParseError("named graph: pyramid wants three sizes, e.g. pyramid:2,1,1");
        }
        std::string_view tok = last ? rest.substr(start) : rest.substr(start, comma - start);
        sizes[i] = parse_count(tok, family);
        if (!last) start = comma + 1;
      }
      return generalized_pyramid(sizes[0], sizes[1], sizes[2]);
    }
  }
  throw ParseError("unknown graph name '" + std::string(name) + "'; expected one of: " +
                   named_graph_vocabulary());
}

std::string named_graph_vocabulary() {
  return "P4, K4, diamond, C4, paw, claw, 4K1, co-diamond, 2K2, co-paw, co-claw, "
         "path:k, cycle:k, complete:k, empty:k, pyramid:p,q,r, three-sun";
}

}  // namespace csf
