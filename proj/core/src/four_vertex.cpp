#include "csf/four_vertex.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "csf/sympoly.hpp"  // ParseError

namespace csf {

namespace {

constexpr std::array<std::pair<int, int>, 6> pair_order = {{
    {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},
}};

Graph graph_from_mask(int mask) {
  Graph g(4);
  for (int b = 0; b < 6; ++b) {
    if ((mask >> b) & 1) g.add_edge(pair_order[static_cast<size_t>(b)].first,
                                    pair_order[static_cast<size_t>(b)].second);
  }
  return g;
}

struct Invariant {
  int edges;
  std::array<int, 4> degrees;  // sorted ascending
  int triangles;
  friend bool operator==(const Invariant&, const Invariant&) = default;
};

Invariant invariant_of(const Graph& g) {
  Invariant inv{};
  inv.edges = g.edge_count();
  for (int v = 0; v < 4; ++v) inv.degrees[static_cast<size_t>(v)] = g.degree(v);
  std::sort(inv.degrees.begin(), inv.degrees.end());
  inv.triangles = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (g.has_edge(i, j) && g.has_edge(i, k) && g.has_edge(j, k)) ++inv.triangles;
      }
    }
  }
  return inv;
}

bool brute_force_isomorphic4(const Graph& a, const Graph& b) {
  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    if (a.permuted(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Classification table for all 64 labeled graphs on 4 vertices, decided by
// the (edge count, degree sequence, triangle count) invariant and verified
// once against brute-force isomorphism with the prototypes.
const std::array<FourVertexKind, 64>& classification_table() {
  static const std::array<FourVertexKind, 64> table = [] {
    std::array<FourVertexKind, 64> t{};
    std::array<Invariant, four_vertex_kind_count> proto_inv;
    std::array<Graph, four_vertex_kind_count> protos;
    for (int k = 0; k < four_vertex_kind_count; ++k) {
      protos[static_cast<size_t>(k)] = kind_prototype(static_cast<FourVertexKind>(k));
      proto_inv[static_cast<size_t>(k)] = invariant_of(protos[static_cast<size_t>(k)]);
    }
    for (int mask = 0; mask < 64; ++mask) {
      Graph g = graph_from_mask(mask);
      Invariant inv = invariant_of(g);
      bool found = false;
      for (int k = 0; k < four_vertex_kind_count; ++k) {
        if (inv == proto_inv[static_cast<size_t>(k)]) {
          if (!brute_force_isomorphic4(g, protos[static_cast<size_t>(k)])) {
            throw std::logic_error("four-vertex classification: invariant collision");
          }
          t[static_cast<size_t>(mask)] = static_cast<FourVertexKind>(k);
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("four-vertex classification: unmatched graph");
    }
    return t;
  }();
  return table;
}

}  // namespace

std::string_view kind_name(FourVertexKind k) {
  switch (k) {
    case FourVertexKind::p4: return "P4";
    case FourVertexKind::k4: return "K4";
    case FourVertexKind::diamond: return "diamond";
    case FourVertexKind::c4: return "C4";
    case FourVertexKind::paw: return "paw";
    case FourVertexKind::claw: return "claw";
    case FourVertexKind::four_k1: return "4K1";
    case FourVertexKind::co_diamond: return "co-diamond";
    case FourVertexKind::two_k2: return "2K2";
    case FourVertexKind::co_paw: return "co-paw";
    case FourVertexKind::co_claw: return "co-claw";
  }
  throw std::logic_error("kind_name: bad kind");
}

std::optional<FourVertexKind> kind_from_name(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c == '_') c = '-';
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "p4") return FourVertexKind::p4;
  if (s == "k4") return FourVertexKind::k4;
  if (s == "diamond") return FourVertexKind::diamond;
  if (s == "c4") return FourVertexKind::c4;
  if (s == "paw") return FourVertexKind::paw;
  if (s == "claw") return FourVertexKind::claw;
  if (s == "4k1") return FourVertexKind::four_k1;
  if (s == "co-diamond" || s == "codiamond") return FourVertexKind::co_diamond;
  if (s == "2k2") return FourVertexKind::two_k2;
  if (s == "co-paw" || s == "copaw") return FourVertexKind::co_paw;
  if (s == "co-claw" || s == "coclaw") return FourVertexKind::co_claw;
  return std::nullopt;
}

FourVertexKind complement_kind(FourVertexKind k) {
  switch (k) {
    case FourVertexKind::p4: return FourVertexKind::p4;
    case FourVertexKind::k4: return FourVertexKind::four_k1;
    case FourVertexKind::four_k1: return FourVertexKind::k4;
    case FourVertexKind::diamond: return FourVertexKind::co_diamond;
    case FourVertexKind::co_diamond: return FourVertexKind::diamond;
    case FourVertexKind::c4: return FourVertexKind::two_k2;
    case FourVertexKind::two_k2: return FourVertexKind::c4;
    case FourVertexKind::paw: return FourVertexKind::co_paw;
    case FourVertexKind::co_paw: return FourVertexKind::paw;
    case FourVertexKind::claw: return FourVertexKind::co_claw;
    case FourVertexKind::co_claw: return FourVertexKind::claw;
  }
  throw std::logic_error("complement_kind: bad kind");
}

Graph kind_prototype(FourVertexKind k) {
  using E = std::pair<int, int>;
  auto make = [](std::initializer_list<E> edges) {
    Graph g(4);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  };
  switch (k) {
    case FourVertexKind::p4: return make({{0, 1}, {1, 2}, {2, 3}});
    case FourVertexKind::k4: return make({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case FourVertexKind::diamond: return make({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case FourVertexKind::c4: return make({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    case FourVertexKind::paw: return make({{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    case FourVertexKind::claw: return make({{0, 1}, {0, 2}, {0, 3}});
    case FourVertexKind::four_k1: return make({});
    case FourVertexKind::co_diamond: return make({{0, 1}});
    case FourVertexKind::two_k2: return make({{0, 1}, {2, 3}});
    case FourVertexKind::co_paw: return make({{0, 1}, {1, 2}});
    case FourVertexKind::co_claw: return make({{0, 1}, {0, 2}, {1, 2}});
  }
  throw std::logic_error("kind_prototype: bad kind");
}

KindSet KindSet::parse(std::string_view list) {
  KindSet out;
  size_t start = 0;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    std::string_view token = list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (!token.empty()) {
      auto k = kind_from_name(token);
      if (!k) throw ParseError("unknown four-vertex graph name: '" + std::string(token) + "'");
      out.insert(*k);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw ParseError("expected at least one four-vertex graph name");
  return out;
}

std::vector<FourVertexKind> KindSet::kinds() const {
  std::vector<FourVertexKind> out;
  for (auto k : all_four_vertex_kinds) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

FourVertexKind classify_four_subset(const Graph& g, const std::array<int, 4>& vertices) {
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = i + 1; j < 4; ++j) {
      if (vertices[i] == vertices[j]) {
        throw std::invalid_argument("classify_four_subset: vertices must be distinct");
      }
    }
  }
  int mask = 0;
  for (int b = 0; b < 6; ++b) {
    auto [i, j] = pair_order[static_cast<size_t>(b)];
    if (g.has_edge(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)])) mask |= 1 << b;
  }
  return classification_table()[static_cast<size_t>(mask)];
}

std::optional<InducedWitness> find_induced(const Graph& g, KindSet kinds) {
  if (kinds.empty()) return std::nullopt;
  int n = g.order();
  const auto& table = classification_table();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int eab = g.has_edge(a, b) ? 1 : 0;
      for (int c = b + 1; c < n; ++c) {
        int eac = g.has_edge(a, c) ? 2 : 0;
        int ebc = g.has_edge(b, c) ? 4 : 0;
        int base = eab | eac | ebc;
        for (int d = c + 1; d < n; ++d) {
          int mask = base;
          if (g.has_edge(a, d)) mask |= 8;
          if (g.has_edge(b, d)) mask |= 16;
          if (g.has_edge(c, d)) mask |= 32;
          FourVertexKind k = table[static_cast<size_t>(mask)];
          if (kinds.contains(k)) return InducedWitness{k, {a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace csf
