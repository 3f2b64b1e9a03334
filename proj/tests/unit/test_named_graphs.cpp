#include "doctest.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csf/canonical.hpp"
#include "csf/four_vertex.hpp"
#include "csf/graph.hpp"
#include "csf/named_graphs.hpp"
#include "csf/sympoly.hpp"  // ParseError

using csf::Graph;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace

TEST_CASE("paths, cycles, complete and empty graphs have the right shape") {
  for (int k = 1; k <= 8; ++k) {
    Graph p = csf::path_graph(k);
    CHECK(p.order() == k);
    CHECK(p.edge_count() == k - 1);
    CHECK(p.connected());
  }
  for (int k = 3; k <= 8; ++k) {
    Graph c = csf::cycle_graph(k);
    CHECK(c.order() == k);
    CHECK(c.edge_count() == k);
    for (int v = 0; v < k; ++v) CHECK(c.degree(v) == 2);
    CHECK(c.connected());
  }
  for (int k = 0; k <= 8; ++k) {
    Graph kn = csf::complete_graph(k);
    CHECK(kn.order() == k);
    CHECK(kn.edge_count() == k * (k - 1) / 2);
    CHECK(csf::empty_graph(k).edge_count() == 0);
    CHECK(csf::empty_graph(k).order() == k);
  }

  CHECK_THROWS_AS(csf::path_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(csf::cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(csf::complete_graph(-1), std::invalid_argument);
}

TEST_CASE("the three-sun is a triangle with a pendant at each corner") {
  Graph g = csf::three_sun();
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 6);
  CHECK(g.connected());
  CHECK(g.has_triangle());
  CHECK(degree_sequence(g) == std::vector<int>{3, 3, 3, 1, 1, 1});
}

TEST_CASE("generalized pyramids") {
  SUBCASE("orders and edge counts") {
    // Stable triple {a,b,c} + ovals of sizes p,q,r.  Vertices: 3 + p + q + r.
    Graph g = csf::generalized_pyramid(1, 1, 1);
    CHECK(g.order() == 6);
    // Each oval vertex meets 2 stable vertices (3*2 edges) plus the 3 edges
    // between the three distinct singleton ovals.
    CHECK(g.edge_count() == 9);
    CHECK(g.independence_number() == 3);

    Graph h = csf::generalized_pyramid(2, 2, 1);
    CHECK(h.order() == 8);
    CHECK(h.independence_number() == 3);
  }

  SUBCASE("the construction realizes its defining adjacency rule") {
    // Anchors 0,1,2 are pairwise non-adjacent; each oval is a clique joined
    // to its two anchors; vertices of distinct ovals are always adjacent.
    const std::array<std::pair<int, int>, 3> anchors_of = {{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& sizes :
         std::vector<std::array<int, 3>>{{1, 1, 0}, {2, 1, 0}, {1, 1, 1}, {2, 2, 1}, {3, 2, 2}}) {
      CAPTURE(sizes[0]);
      CAPTURE(sizes[1]);
      CAPTURE(sizes[2]);
      Graph g = csf::generalized_pyramid(sizes[0], sizes[1], sizes[2]);
      auto block_of = [&](int v) -> int {  // -1 for anchors, else the oval index
        if (v < 3) return -1;
        int offset = v - 3;
        for (int o = 0; o < 3; ++o) {
          if (offset < sizes[static_cast<size_t>(o)]) return o;
          offset -= sizes[static_cast<size_t>(o)];
        }
        FAIL("vertex outside every block");
        return -2;
      };
      for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
          const int bu = block_of(u), bv = block_of(v);
          bool expected;
          if (bu == -1 && bv == -1) {
            expected = false;
          } else if (bu == bv || (bu != -1 && bv != -1)) {
            expected = true;
          } else {
            const int anchor = bu == -1 ? u : v;
            const auto ends = anchors_of[static_cast<size_t>(bu == -1 ? bv : bu)];
            expected = anchor == ends.first || anchor == ends.second;
          }
          CHECK(g.has_edge(u, v) == expected);
        }
      }
    }

    // With one oval empty the smallest instance is the bull: a triangle with
    // two pendants on distinct corners.
    CHECK(degree_sequence(csf::generalized_pyramid(1, 1, 0)) ==
          std::vector<int>{3, 3, 2, 1, 1});
  }

  SUBCASE("size validation") {
    CHECK_THROWS_AS(csf::generalized_pyramid(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(csf::generalized_pyramid(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(csf::generalized_pyramid(-1, 1, 1), std::invalid_argument);
  }
}

TEST_CASE("named_graph resolves the documented vocabulary") {
  CHECK(csf::named_graph("path:5") == csf::path_graph(5));
  CHECK(csf::named_graph("cycle:6") == csf::cycle_graph(6));
  CHECK(csf::named_graph("complete:4") == csf::complete_graph(4));
  CHECK(csf::named_graph("empty:3") == csf::empty_graph(3));
  CHECK(csf::named_graph("three-sun") == csf::three_sun());
  CHECK(csf::named_graph("pyramid:2,1,1") == csf::generalized_pyramid(2, 1, 1));

  // All eleven four-vertex class names resolve to their prototypes.
  for (csf::FourVertexKind k : csf::all_four_vertex_kinds) {
    CHECK(csf::named_graph(csf::kind_name(k)) == csf::kind_prototype(k));
  }

  CHECK_THROWS_AS(csf::named_graph("petersen"), csf::ParseError);
  CHECK_THROWS_AS(csf::named_graph("path:"), csf::ParseError);
  CHECK_THROWS_AS(csf::named_graph("path:x"), csf::ParseError);
  CHECK_THROWS_AS(csf::named_graph(""), csf::ParseError);
  // Structurally invalid parameters are reported as bad argument values.
  CHECK_THROWS_AS(csf::named_graph("pyramid:1,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(csf::named_graph("cycle:2"), std::invalid_argument);

  std::string vocab = csf::named_graph_vocabulary();
  CHECK(vocab.find("claw") != std::string::npos);
  CHECK(vocab.find("pyramid:") != std::string::npos);
}

TEST_CASE("four-vertex prototypes have the expected edge counts") {
  using K = csf::FourVertexKind;
  auto edges_of = [](K k) { return csf::kind_prototype(k).edge_count(); };
  CHECK(edges_of(K::p4) == 3);
  CHECK(edges_of(K::k4) == 6);
  CHECK(edges_of(K::diamond) == 5);
  CHECK(edges_of(K::c4) == 4);
  CHECK(edges_of(K::paw) == 4);
  CHECK(edges_of(K::claw) == 3);
  CHECK(edges_of(K::four_k1) == 0);
  CHECK(edges_of(K::co_diamond) == 1);
  CHECK(edges_of(K::two_k2) == 2);
  CHECK(edges_of(K::co_paw) == 2);
  CHECK(edges_of(K::co_claw) == 3);

  for (K k : csf::all_four_vertex_kinds) {
    CHECK(csf::kind_prototype(k).order() == 4);
  }
}
