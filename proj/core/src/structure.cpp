#include "csf/structure.hpp"

#include <algorithm>
#include <functional>
#include <span>

namespace csf {

namespace {

std::string list_vertices(std::span<const int> vs) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(vs[i]);
  }
  return s;
}

}  // namespace

MultipartiteResult complete_multipartite_parts(const Graph& g) {
  MultipartiteResult out;
  Graph co = g.complement();
  std::vector<int> sizes;
  for (const auto& comp : co.components()) {
    // Each complement component must be a clique.
    for (size_t i = 0; i < comp.size(); ++i) {
      for (size_t j = i + 1; j < comp.size(); ++j) {
        if (!co.has_edge(comp[i], comp[j])) return out;
      }
    }
    sizes.push_back(static_cast<int>(comp.size()));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  out.is_complete_multipartite = true;
  out.part_sizes = std::move(sizes);
  return out;
}

std::vector<ComponentShape> claw_triangle_free_shape(const Graph& g) {
  if (auto w = find_induced(g, {FourVertexKind::claw})) {
    throw StructureError("claw_triangle_free_shape: graph contains a claw on vertices " +
                         list_vertices(w->vertices));
  }
  for (auto [u, v] : g.edges()) {
    uint64_t common = g.adjacency(u) & g.adjacency(v);
    if (common) {
      int w = __builtin_ctzll(common);
      throw StructureError("claw_triangle_free_shape: graph contains a triangle on vertices " +
                           std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w));
    }
  }

  std::vector<ComponentShape> shapes;
  for (const auto& comp : g.components()) {
    int size = static_cast<int>(comp.size());
    int deg_one = 0, deg_two = 0;
    for (int v : comp) {
      int d = g.degree(v);
      if (d > 2) {
        // Impossible here: degree >= 3 in a triangle-free graph yields a claw.
        throw StructureError("claw_triangle_free_shape: unexpected vertex degree at " +
                             std::to_string(v));
      }
      if (d == 1) ++deg_one;
      if (d == 2) ++deg_two;
    }
    if (size >= 3 && deg_two == size) {
      shapes.push_back({ShapeKind::cycle, size});
    } else {
      shapes.push_back({ShapeKind::path, size});
    }
  }
  return shapes;
}

PeculiarDecomposition decompose_peculiar(const Graph& g) {
  if (!g.connected()) {
    throw StructureError("decompose_peculiar: graph is not connected");
  }
  if (auto w = find_induced(g, {FourVertexKind::claw, FourVertexKind::co_diamond})) {
    throw StructureError(std::string("decompose_peculiar: graph contains an induced ") +
                         std::string(kind_name(w->kind)) + " on vertices " +
                         list_vertices(w->vertices));
  }
  int alpha = g.independence_number();
  if (alpha != 3) {
    throw StructureError("decompose_peculiar: independence number is " + std::to_string(alpha) +
                         ", need exactly 3");
  }
  if (!g.has_triangle()) {
    throw StructureError("decompose_peculiar: graph has no triangle");
  }

  int n = g.order();
  PeculiarDecomposition out{};
  bool found = false;
  for (int a = 0; a < n && !found; ++a) {
    for (int b = a + 1; b < n && !found; ++b) {
      if (g.has_edge(a, b)) continue;
      for (int c = b + 1; c < n && !found; ++c) {
        if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
        out.co_triangle = {a, b, c};
        found = true;
      }
    }
  }
  if (!found) {
    throw StructureError("decompose_peculiar: no stable triple found");  // unreachable: alpha == 3
  }

  auto [a, b, c] = out.co_triangle;
  for (int v = 0; v < n; ++v) {
    if (v == a || v == b || v == c) continue;
    bool ea = g.has_edge(v, a), eb = g.has_edge(v, b), ec = g.has_edge(v, c);
    int count = ea + eb + ec;
    if (count != 2) {
      // The freeness and alpha preconditions force exactly two neighbors in
      // the stable triple, so this indicates an internal inconsistency.
      throw std::logic_error("decompose_peculiar: vertex " + std::to_string(v) + " sees " +
                             std::to_string(count) + " of the stable triple");
    }
    if (ea && eb) out.ovals[0].push_back(v);
    if (ea && ec) out.ovals[1].push_back(v);
    if (eb && ec) out.ovals[2].push_back(v);
  }
  int non_empty = 0;
  for (const auto& oval : out.ovals) {
    if (!oval.empty()) ++non_empty;
  }
  if (non_empty < 2) {
    throw std::logic_error("decompose_peculiar: fewer than two non-empty ovals");
  }
  return out;
}

bool is_peculiar(const Graph& g) {
  return g.connected() &&
         is_h_free(g, {FourVertexKind::claw, FourVertexKind::co_diamond}) &&
         g.independence_number() == 3 && g.has_triangle();
}

}  // namespace csf
