#include "csf/enumerate.hpp"

#include <stdexcept>
#include <unordered_set>

#include "csf/canonical.hpp"

namespace csf {

std::vector<std::vector<Graph>> enumerate_levels(int n, const EnumerateOptions& options) {
  if (n < 1) throw std::invalid_argument("enumerate_levels: need n >= 1");
  if (n > 12) throw std::invalid_argument("enumerate_levels: n > 12 is unsupported");
  if (n > 9 && !options.allow_large) {
    throw std::invalid_argument("enumerate_levels: n > 9 requires allow_large");
  }
  const auto& filter = options.hereditary_filter;

  std::vector<std::vector<Graph>> levels;
  levels.emplace_back();
  Graph k1(1);
  if (!filter || filter(k1)) levels.back().push_back(k1);

  for (int level = 2; level <= n; ++level) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    uint32_t subsets = uint32_t{1} << (level - 1);
    for (const Graph& parent : levels.back()) {
      // Attach a new vertex to every subset of the parent's vertices; the
      // canonical key deduplicates isomorphic results.
      for (uint32_t mask = 0; mask < subsets; ++mask) {
        Graph child(level);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for (int v = 0; v < level - 1; ++v) {
          if ((mask >> v) & 1) child.add_edge(v, level - 1);
        }
        CanonicalResult canon = canonical_form(child);
        if (!seen.insert(adjacency_key(canon.graph)).second) continue;
        if (filter && !filter(canon.graph)) continue;
        next.push_back(canon.graph);
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& options) {
  auto levels = enumerate_levels(n, options);
  return std::move(levels.back());
}

}  // namespace csf
