#include "csf/chromatic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csf/canonical.hpp"
#include "csf/transitions.hpp"

namespace csf {

namespace {

// Merges vertex v into vertex u (u keeps the combined adjacency) and drops v.
// Vertices above v shift down by one.  `map_out`, when given, receives the
// old-to-new vertex mapping with map_out[v] == -1.
Graph contract_edge(const Graph& g, int u, int v, std::vector<int>* map_out = nullptr) {
  int n = g.order();
  std::vector<int> map(static_cast<size_t>(n));
  for (int w = 0; w < n; ++w) map[static_cast<size_t>(w)] = w < v ? w : w - 1;
  map[static_cast<size_t>(v)] = -1;
  Graph out(n - 1);
  for (auto [a, b] : g.edges()) {
    int na = a == v ? map[static_cast<size_t>(u)] : map[static_cast<size_t>(a)];
    int nb = b == v ? map[static_cast<size_t>(u)] : map[static_cast<size_t>(b)];
    if (na == nb) continue;  // the contracted edge itself
    out.add_edge(na, nb);
  }
  if (map_out) *map_out = std::move(map);
  return out;
}

// Deterministic pivot: the edge with the largest endpoint degree sum, ties
// broken lexicographically.  High-degree pivots shrink both branches fastest.
std::pair<int, int> pick_pivot(const Graph& g) {
  std::pair<int, int> best{-1, -1};
  int best_score = -1;
  for (auto [u, v] : g.edges()) {
    int score = g.degree(u) + g.degree(v);
    if (score > best_score) {
      best_score = score;
      best = {u, v};
    }
  }
  return best;
}

constexpr int canonical_memo_limit = 16;  // canonical_form's own vertex cap
constexpr size_t memo_entry_cap = size_t{1} << 20;

// Deletion-contraction over vertex-weighted graphs.  X of a weighted graph
// with no edges is p_{(weights)}; contracting an edge adds its endpoint
// weights.  Results are memoized by the weight-aware canonical key whenever
// the subproblem is small enough to canonicalize.
struct WeightedEngine {
  std::unordered_map<std::string, SymPoly> memo;

  SymPoly run(const Graph& g, std::vector<int> weights) {
    int n = g.order();
    if (n == 0) return SymPoly::term(Basis::power, Partition());

    auto comps = g.components();
    if (comps.size() > 1) {
      SymPoly prod = SymPoly::term(Basis::power, Partition());
      for (const auto& comp : comps) {
        uint64_t mask = 0;
        for (int v : comp) mask |= uint64_t{1} << v;
        std::vector<int> ids(comp.begin(), comp.end());
        std::sort(ids.begin(), ids.end());
        std::vector<int> sub_weights;
        sub_weights.reserve(ids.size());
        for (int v : ids) sub_weights.push_back(weights[static_cast<size_t>(v)]);
        prod = multiply_power(prod, run(g.induced_subgraph(mask), std::move(sub_weights)));
      }
      return prod;
    }

    if (g.edge_count() == 0) {
      // Connected and edgeless means a single vertex.
      return SymPoly::term(Basis::power, Partition(std::vector<int>{weights[0]}));
    }

    std::string key;
    if (n <= canonical_memo_limit) {
      key = canonical_key(g, weights);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }

    auto [u, v] = pick_pivot(g);
    Graph deleted = g;
    deleted.remove_edge(u, v);
    SymPoly result = run(deleted, weights);

    std::vector<int> map;
    Graph contracted = contract_edge(g, u, v, &map);
    std::vector<int> cw(static_cast<size_t>(n - 1));
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      cw[static_cast<size_t>(map[static_cast<size_t>(w)])] = weights[static_cast<size_t>(w)];
    }
    cw[static_cast<size_t>(map[static_cast<size_t>(u)])] += weights[static_cast<size_t>(v)];
    result -= run(contracted, std::move(cw));

    if (!key.empty()) {
      if (memo.size() >= memo_entry_cap) memo.clear();
      memo.emplace(std::move(key), result);
    }
    return result;
  }
};

SymPoly to_monomial(const SymPoly& f) {
  if (f.basis() == Basis::monomial) return f;
  if (f.basis() != Basis::power) {
    throw std::logic_error("to_monomial: expected a power-basis expansion");
  }
  SymPoly out(Basis::monomial);
  for (const auto& [lambda, c] : f.terms()) {
    SymPoly row = p_to_m(lambda);
    row *= c;
    out += row;
  }
  return out;
}

bool algorithm_feasible(CsfAlgorithm a, const Graph& g) {
  switch (a) {
    case CsfAlgorithm::stable_partitions: return g.order() <= 20;
    case CsfAlgorithm::edge_subsets: return g.edge_count() <= 28;
    case CsfAlgorithm::deletion_contraction: return true;
    case CsfAlgorithm::automatic: return true;
  }
  return false;
}

CsfAlgorithm pick_automatic(const Graph& g) {
  int n = g.order();
  long long m = g.edge_count();
  // Stable-partition enumeration costs one visit per partition into
  // independent sets, which is small precisely when the graph is dense;
  // deletion-contraction collapses fastest when edges are scarce.
  if (n <= 20 && 4 * m >= static_cast<long long>(n) * (n - 1)) {
    return CsfAlgorithm::stable_partitions;
  }
  return CsfAlgorithm::deletion_contraction;
}

SymPoly run_algorithm(CsfAlgorithm a, const Graph& g) {
  switch (a) {
    case CsfAlgorithm::stable_partitions: return csf_stable_partitions(g);
    case CsfAlgorithm::edge_subsets: return csf_edge_subsets(g);
    case CsfAlgorithm::deletion_contraction: return csf_deletion_contraction(g);
    case CsfAlgorithm::automatic: break;
  }
  throw std::logic_error("run_algorithm: unresolved algorithm tag");
}

}  // namespace

const char* algorithm_name(CsfAlgorithm a) {
  switch (a) {
    case CsfAlgorithm::automatic: return "auto";
    case CsfAlgorithm::stable_partitions: return "stable-partitions";
    case CsfAlgorithm::edge_subsets: return "edge-subsets";
    case CsfAlgorithm::deletion_contraction: return "deletion-contraction";
  }
  return "?";
}

CsfAlgorithm algorithm_from_name(std::string_view name) {
  if (name == "auto") return CsfAlgorithm::automatic;
  if (name == "stable-partitions") return CsfAlgorithm::stable_partitions;
  if (name == "edge-subsets") return CsfAlgorithm::edge_subsets;
  if (name == "deletion-contraction") return CsfAlgorithm::deletion_contraction;
  throw ParseError("unknown algorithm '" + std::string(name) +
                   "'; expected auto, stable-partitions, edge-subsets or deletion-contraction");
}

SymPoly csf_stable_partitions(const Graph& g) {
  int n = g.order();
  if (n > 20) {
    throw std::invalid_argument("csf_stable_partitions: supported for at most 20 vertices");
  }
  // Restricted-growth enumeration: vertex v joins an existing independent
  // block or opens a new one, so each partition is visited exactly once.
  std::map<std::vector<int>, long long> counts;
  std::vector<uint64_t> block_masks;
  std::vector<int> block_sizes;
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == n) {
      std::vector<int> sizes = block_sizes;
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      ++counts[sizes];
      return;
    }
    uint64_t bit = uint64_t{1} << v;
    uint64_t nbrs = g.adjacency(v);
    for (size_t b = 0; b < block_masks.size(); ++b) {
      if ((nbrs & block_masks[b]) != 0) continue;
      block_masks[b] |= bit;
      ++block_sizes[b];
      self(self, v + 1);
      --block_sizes[b];
      block_masks[b] &= ~bit;
    }
    block_masks.push_back(bit);
    block_sizes.push_back(1);
    self(self, v + 1);
    block_masks.pop_back();
    block_sizes.pop_back();
  };
  recurse(recurse, 0);

  SymPoly out(Basis::monomial);
  for (const auto& [sizes, count] : counts) {
    Partition lambda(sizes);
    Coeff c = lambda.multiplicity_factorial();
    c *= Coeff(count);
    out.add_term(lambda, c);
  }
  return out;
}

SymPoly csf_edge_subsets(const Graph& g) {
  int n = g.order();
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  if (m > 28) {
    throw std::invalid_argument("csf_edge_subsets: supported for at most 28 edges");
  }

  // Union-find by size, no path compression, so unions roll back in O(1).
  std::vector<int> parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
    return x;
  };

  std::map<Partition, long long> acc;
  auto leaf = [&](int sign) {
    std::vector<int> sizes;
    for (int v = 0; v < n; ++v) {
      if (find(v) == v) sizes.push_back(size[static_cast<size_t>(v)]);
    }
    acc[Partition(sizes)] += sign;
  };
  // When the next edge's endpoints are already connected, every completion
  // with the edge cancels the same completion without it, so the whole
  // subtree sums to zero and is skipped.
  auto recurse = [&](auto&& self, int i, int sign) -> void {
    if (i == m) {
      leaf(sign);
      return;
    }
    int ru = find(edges[static_cast<size_t>(i)].first);
    int rv = find(edges[static_cast<size_t>(i)].second);
    if (ru == rv) return;
    self(self, i + 1, sign);
    if (size[static_cast<size_t>(ru)] < size[static_cast<size_t>(rv)]) std::swap(ru, rv);
    parent[static_cast<size_t>(rv)] = ru;
    size[static_cast<size_t>(ru)] += size[static_cast<size_t>(rv)];
    self(self, i + 1, -sign);
    size[static_cast<size_t>(ru)] -= size[static_cast<size_t>(rv)];
    parent[static_cast<size_t>(rv)] = rv;
  };
  recurse(recurse, 0, 1);

  SymPoly out(Basis::power);
  for (const auto& [lambda, c] : acc) out.add_term(lambda, Coeff(c));
  return out;
}

SymPoly csf_deletion_contraction(const Graph& g) {
  WeightedEngine engine;
  std::vector<int> unit_weights(static_cast<size_t>(g.order()), 1);
  return engine.run(g, std::move(unit_weights));
}

CsfResult compute_csf(const Graph& g, const CsfOptions& options) {
  auto start = std::chrono::steady_clock::now();
  CsfAlgorithm chosen = options.algorithm == CsfAlgorithm::automatic
                            ? pick_automatic(g)
                            : options.algorithm;
  if (!algorithm_feasible(chosen, g)) {
    throw std::invalid_argument(std::string("compute_csf: ") + algorithm_name(chosen) +
                                " cannot handle this graph size");
  }

  CsfResult result;
  result.algorithm_used = chosen;
  result.monomial = to_monomial(run_algorithm(chosen, g));

  if (options.cross_check) {
    constexpr CsfAlgorithm order[] = {
        CsfAlgorithm::stable_partitions,
        CsfAlgorithm::edge_subsets,
        CsfAlgorithm::deletion_contraction,
    };
    CsfAlgorithm alt = CsfAlgorithm::automatic;
    for (CsfAlgorithm candidate : order) {
      if (candidate != chosen && algorithm_feasible(candidate, g)) {
        alt = candidate;
        break;
      }
    }
    if (alt == CsfAlgorithm::automatic) {
      throw std::invalid_argument("compute_csf: no second algorithm is feasible for cross-checking");
    }
    SymPoly again = to_monomial(run_algorithm(alt, g));
    if (!(again == result.monomial)) {
      throw std::logic_error(std::string("compute_csf: ") + algorithm_name(chosen) + " and " +
                             algorithm_name(alt) + " disagree");
    }
  }

  result.elementary = expand_in_e(result.monomial);
  result.schur = expand_in_s(result.monomial);
  result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

namespace {

// Integer deletion-contraction for proper-coloring counts; shares nothing
// with the symmetric-function pipeline beyond the Graph type.
struct ColoringEngine {
  int k;
  std::unordered_map<std::string, Coeff> memo;

  Coeff run(const Graph& g) {
    int n = g.order();
    if (g.edge_count() == 0) {
      Coeff value(1);
      for (int i = 0; i < n; ++i) value *= Coeff(k);
      return value;
    }
    auto comps = g.components();
    if (comps.size() > 1) {
      Coeff value(1);
      for (const auto& comp : comps) {
        uint64_t mask = 0;
        for (int v : comp) mask |= uint64_t{1} << v;
        value *= run(g.induced_subgraph(mask));
      }
      return value;
    }

    std::string key;
    if (n <= canonical_memo_limit) {
      key = canonical_key(g);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }

    auto [u, v] = pick_pivot(g);
    Graph deleted = g;
    deleted.remove_edge(u, v);
    Coeff value = run(deleted);
    value -= run(contract_edge(g, u, v));

    if (!key.empty()) {
      if (memo.size() >= memo_entry_cap) memo.clear();
      memo.emplace(std::move(key), value);
    }
    return value;
  }
};

}  // namespace

Coeff chromatic_polynomial_at(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("chromatic_polynomial_at: negative color count");
  ColoringEngine engine{k, {}};
  return engine.run(g);
}

}  // namespace csf
