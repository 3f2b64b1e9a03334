#include "doctest.h"

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "csf/four_vertex.hpp"
#include "csf/graph.hpp"
#include "csf/named_graphs.hpp"
#include "csf/sympoly.hpp"  // ParseError
#include "test_util.hpp"

using csf::FourVertexKind;
using csf::Graph;
using csf::KindSet;
using K = csf::FourVertexKind;
using namespace csf::testing;

TEST_CASE("classify_four_subset recognizes every prototype under relabeling") {
  std::mt19937 rng(17u);
  for (K k : csf::all_four_vertex_kinds) {
    Graph proto = csf::kind_prototype(k);
    CHECK(csf::classify_four_subset(proto, {0, 1, 2, 3}) == k);
    // Embed the prototype into a larger vertex set under random permutations.
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm = random_permutation(7, rng);
      Graph big(7);
      for (auto [u, v] : proto.edges()) {
        big.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
      }
      std::array<int, 4> quad{perm[0], perm[1], perm[2], perm[3]};
      std::sort(quad.begin(), quad.end());
      CHECK(csf::classify_four_subset(big, quad) == k);
    }
  }
}

TEST_CASE("complement_kind is an involution compatible with classification") {
  for (K k : csf::all_four_vertex_kinds) {
    CHECK(csf::complement_kind(csf::complement_kind(k)) == k);
    CHECK(csf::classify_four_subset(csf::kind_prototype(k).complement(), {0, 1, 2, 3}) ==
          csf::complement_kind(k));
  }
  CHECK(csf::complement_kind(K::p4) == K::p4);
  CHECK(csf::complement_kind(K::k4) == K::four_k1);
  CHECK(csf::complement_kind(K::claw) == K::co_claw);

  // Classification commutes with complement on random four-subsets.
  std::mt19937 rng(19u);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(8, rng);
    Graph c = g.complement();
    std::vector<int> vs = random_permutation(8, rng);
    std::array<int, 4> quad{vs[0], vs[1], vs[2], vs[3]};
    std::sort(quad.begin(), quad.end());
    CHECK(csf::classify_four_subset(c, quad) ==
          csf::complement_kind(csf::classify_four_subset(g, quad)));
  }
}

TEST_CASE("kind names round trip and accept tolerant spellings") {
  for (K k : csf::all_four_vertex_kinds) {
    auto back = csf::kind_from_name(csf::kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK(csf::kind_name(K::co_diamond) == "co-diamond");
  CHECK(csf::kind_name(K::four_k1) == "4K1");
  CHECK(csf::kind_from_name("codiamond") == K::co_diamond);
  CHECK(csf::kind_from_name("p4") == K::p4);
  CHECK(csf::kind_from_name("2k2") == K::two_k2);
  CHECK_FALSE(csf::kind_from_name("pentagon").has_value());
  CHECK_FALSE(csf::kind_from_name("").has_value());
}

TEST_CASE("kind sets parse comma-separated lists") {
  KindSet s = KindSet::parse("claw,co-diamond");
  CHECK(s.contains(K::claw));
  CHECK(s.contains(K::co_diamond));
  CHECK_FALSE(s.contains(K::paw));
  CHECK(s.kinds() == std::vector<K>{K::claw, K::co_diamond});

  CHECK(KindSet::parse("claw, paw") == KindSet({K::claw, K::paw}));
  CHECK_THROWS_AS(KindSet::parse("claw,nonsense"), csf::ParseError);
  CHECK_THROWS_AS(KindSet::parse(""), csf::ParseError);

  KindSet empty;
  CHECK(empty.empty());
  CHECK_FALSE(KindSet({K::c4}).empty());
}

TEST_CASE("find_induced returns the lexicographically least witness") {
  SUBCASE("matches a brute-force scan on random graphs") {
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 50; ++trial) {
      int n = 4 + static_cast<int>(rng() % 5);
      Graph g = random_graph(n, rng);
      KindSet kinds;
      for (K k : csf::all_four_vertex_kinds) {
        if (rng() & 1u) kinds.insert(k);
      }
      if (kinds.empty()) kinds.insert(K::p4);

      // Brute force: first 4-subset (in lexicographic order) whose class is
      // in the set.
      std::optional<csf::InducedWitness> expect;
      for (int a = 0; a < n && !expect; ++a)
        for (int b = a + 1; b < n && !expect; ++b)
          for (int c = b + 1; c < n && !expect; ++c)
            for (int d = c + 1; d < n && !expect; ++d) {
              K k = csf::classify_four_subset(g, {a, b, c, d});
              if (kinds.contains(k)) expect = csf::InducedWitness{k, {a, b, c, d}};
            }

      auto got = csf::find_induced(g, kinds);
      CHECK(got.has_value() == expect.has_value());
      if (got && expect) {
        CHECK(got->vertices == expect->vertices);
        CHECK(got->kind == expect->kind);
      }
      CHECK(csf::is_h_free(g, kinds) == !expect.has_value());
    }
  }

  SUBCASE("hand-checked cases") {
    // A path on five vertices contains P4 (first at {0,1,2,3}) but no claw.
    Graph p5 = csf::path_graph(5);
    auto w = csf::find_induced(p5, KindSet({K::p4}));
    REQUIRE(w.has_value());
    CHECK(w->vertices == std::array<int, 4>{0, 1, 2, 3});
    CHECK(csf::is_h_free(p5, KindSet({K::claw})));
    CHECK_FALSE(csf::is_h_free(p5, KindSet({K::claw, K::p4})));

    // Graphs with fewer than four vertices are free of everything.
    CHECK(csf::is_h_free(csf::complete_graph(3), KindSet({K::k4, K::four_k1})));
  }
}
