#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

// The eleven isomorphism classes of graphs on four vertices.
enum class FourVertexKind : uint8_t {
  p4,
  k4,
  diamond,
  c4,
  paw,
  claw,
  four_k1,
  co_diamond,
  two_k2,
  co_paw,
  co_claw,
};

inline constexpr int four_vertex_kind_count = 11;
inline constexpr std::array<FourVertexKind, four_vertex_kind_count> all_four_vertex_kinds = {
    FourVertexKind::p4,         FourVertexKind::k4,      FourVertexKind::diamond,
    FourVertexKind::c4,         FourVertexKind::paw,     FourVertexKind::claw,
    FourVertexKind::four_k1,    FourVertexKind::co_diamond, FourVertexKind::two_k2,
    FourVertexKind::co_paw,     FourVertexKind::co_claw,
};

std::string_view kind_name(FourVertexKind k);
// Accepts the names above plus tolerant spellings ("codiamond", "P4", ...).
std::optional<FourVertexKind> kind_from_name(std::string_view name);

// The complement of each class: K4 <-> 4K1, diamond <-> co-diamond,
// C4 <-> 2K2, paw <-> co-paw, claw <-> co-claw, P4 <-> P4.
FourVertexKind complement_kind(FourVertexKind k);

// Canonical 4-vertex representative of the class.
Graph kind_prototype(FourVertexKind k);

// Small set of kinds, used for freeness filters.
class KindSet {
public:
  KindSet() = default;
  KindSet(std::initializer_list<FourVertexKind> kinds) {
    for (auto k : kinds) insert(k);
  }
  void insert(FourVertexKind k) { bits_ |= mask(k); }
  bool contains(FourVertexKind k) const { return bits_ & mask(k); }
  bool empty() const { return bits_ == 0; }
  friend bool operator==(KindSet a, KindSet b) = default;

  // Parses a comma-separated list like "claw,co-diamond".
  static KindSet parse(std::string_view list);
  std::vector<FourVertexKind> kinds() const;

private:
  static uint16_t mask(FourVertexKind k) { return static_cast<uint16_t>(1u << static_cast<int>(k)); }
  uint16_t bits_ = 0;
};

// Class of the subgraph induced by four distinct vertices.
FourVertexKind classify_four_subset(const Graph& g, const std::array<int, 4>& vertices);

struct InducedWitness {
  FourVertexKind kind;
  std::array<int, 4> vertices;
};

// First induced occurrence (in lexicographic vertex order) of any kind in
// `kinds`, or nullopt when g is free of all of them.
std::optional<InducedWitness> find_induced(const Graph& g, KindSet kinds);

inline bool is_h_free(const Graph& g, KindSet kinds) { return !find_induced(g, kinds).has_value(); }

}  // namespace csf
