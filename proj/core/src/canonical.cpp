#include "csf/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace csf {

namespace {

constexpr int soft_limit = 16;

using Cells = std::vector<uint32_t>;  // ordered partition, one bitmask per cell

struct Search {
  int n = 0;
  std::array<uint32_t, soft_limit> adj{};
  unsigned __int128 best_code = 0;
  std::array<int, soft_limit> best_order{};
  bool have_best = false;

  // Splits cells by neighbor counts until the partition is equitable.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      Cells next;
      next.reserve(cells.size());
      for (uint32_t cell : cells) {
        if (__builtin_popcount(cell) <= 1) {
          next.push_back(cell);
          continue;
        }
        // Signature: neighbor count in every current cell, packed 4 bits
        // each (counts are < 16).
        std::array<std::pair<uint64_t, int>, soft_limit> members;
        int count = 0;
        uint32_t rest = cell;
        while (rest) {
          int v = __builtin_ctz(rest);
          rest &= rest - 1;
          uint64_t sig = 0;
          for (uint32_t other : cells) {
            sig = (sig << 4) | static_cast<uint64_t>(__builtin_popcount(adj[static_cast<size_t>(v)] & other));
          }
          members[static_cast<size_t>(count++)] = {sig, v};
        }
        std::sort(members.begin(), members.begin() + count);
        int groups = 0;
        int i = 0;
        while (i < count) {
          int j = i;
          uint32_t group = 0;
          while (j < count && members[static_cast<size_t>(j)].first == members[static_cast<size_t>(i)].first) {
            group |= uint32_t{1} << members[static_cast<size_t>(j)].second;
            ++j;
          }
          next.push_back(group);
          ++groups;
          i = j;
        }
        if (groups > 1) changed = true;
      }
      cells = std::move(next);
    }
  }

  void leaf(const Cells& cells) {
    std::array<int, soft_limit> order{};
    for (size_t pos = 0; pos < cells.size(); ++pos) {
      order[pos] = __builtin_ctz(cells[pos]);
    }
    unsigned __int128 code = 0;
    for (int j = 1; j < n; ++j) {
      uint32_t col = adj[static_cast<size_t>(order[static_cast<size_t>(j)])];
      for (int i = 0; i < j; ++i) {
        code = (code << 1) | ((col >> order[static_cast<size_t>(i)]) & 1u);
      }
    }
    if (!have_best || code < best_code) {
      best_code = code;
      best_order = order;
      have_best = true;
    }
  }

  void descend(Cells cells) {
    refine(cells);
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (__builtin_popcount(cells[i]) > 1) {
        target = static_cast<int>(i);
        break;
      }
    }
    if (target < 0) {
      leaf(cells);
      return;
    }
    uint32_t cell = cells[static_cast<size_t>(target)];
    std::array<int, soft_limit> tried{};
    int tried_count = 0;
    uint32_t rest = cell;
    while (rest) {
      int v = __builtin_ctz(rest);
      rest &= rest - 1;
      // Skip vertices interchangeable with an already-explored sibling:
      // swapping two such twins is an automorphism, so the subtree repeats.
      bool dup = false;
      for (int t = 0; t < tried_count; ++t) {
        int u = tried[static_cast<size_t>(t)];
        uint32_t au = adj[static_cast<size_t>(u)] & ~(uint32_t{1} << v);
        uint32_t av = adj[static_cast<size_t>(v)] & ~(uint32_t{1} << u);
        if (au == av) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      tried[static_cast<size_t>(tried_count++)] = v;

      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == target) {
          child.push_back(uint32_t{1} << v);
          child.push_back(cell & ~(uint32_t{1} << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      descend(std::move(child));
    }
  }
};

CanonicalResult run_canonical(const Graph& g, std::span<const int> colors) {
  int n = g.order();
  if (n > soft_limit) {
    throw std::invalid_argument("canonical_form: supported for at most 16 vertices");
  }
  CanonicalResult result{Graph(n), std::vector<int>(static_cast<size_t>(n))};
  if (n == 0) return result;

  Search s;
  s.n = n;
  for (int v = 0; v < n; ++v) s.adj[static_cast<size_t>(v)] = static_cast<uint32_t>(g.adjacency(v));

  Cells initial;
  if (colors.empty()) {
    initial.push_back((uint32_t{1} << n) - 1);
  } else {
    if (static_cast<int>(colors.size()) != n) {
      throw std::invalid_argument("canonical_form: color vector size mismatch");
    }
    std::vector<int> distinct(colors.begin(), colors.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int c : distinct) {
      uint32_t cell = 0;
      for (int v = 0; v < n; ++v) {
        if (colors[static_cast<size_t>(v)] == c) cell |= uint32_t{1} << v;
      }
      initial.push_back(cell);
    }
  }
  s.descend(std::move(initial));

  std::vector<int> relabeling(static_cast<size_t>(n));
  for (int pos = 0; pos < n; ++pos) relabeling[static_cast<size_t>(s.best_order[static_cast<size_t>(pos)])] = pos;
  result.graph = g.permuted(relabeling);
  result.relabeling = std::move(relabeling);
  return result;
}

std::string key_bytes(const Graph& graph, std::span<const int> color_bytes) {
  int n = graph.order();
  std::string key;
  key.push_back(static_cast<char>(n));
  for (int c : color_bytes) key.push_back(static_cast<char>(c));
  int bits = n * (n - 1) / 2;
  key.reserve(key.size() + static_cast<size_t>((bits + 7) / 8));
  uint8_t acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = static_cast<uint8_t>((acc << 1) | (graph.has_edge(i, j) ? 1 : 0));
      if (++filled == 8) {
        key.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) key.push_back(static_cast<char>(acc << (8 - filled)));
  return key;
}

}  // namespace

CanonicalResult canonical_form(const Graph& g) { return run_canonical(g, {}); }

CanonicalResult canonical_form(const Graph& g, std::span<const int> colors) {
  return run_canonical(g, colors);
}

std::string adjacency_key(const Graph& g) { return key_bytes(g, {}); }

std::string canonical_key(const Graph& g) {
  CanonicalResult c = canonical_form(g);
  return key_bytes(c.graph, {});
}

std::string canonical_key(const Graph& g, std::span<const int> colors) {
  CanonicalResult c = canonical_form(g, colors);
  std::vector<int> new_colors(colors.size());
  for (size_t v = 0; v < colors.size(); ++v) {
    new_colors[static_cast<size_t>(c.relabeling[v])] = colors[v];
  }
  return key_bytes(c.graph, new_colors);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace csf
