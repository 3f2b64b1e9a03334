#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "csf/chromatic.hpp"
#include "csf/enumerate.hpp"
#include "csf/graph.hpp"
#include "csf/named_graphs.hpp"
#include "csf/sympoly.hpp"
#include "csf/transitions.hpp"
#include "test_util.hpp"

using csf::Coeff;
using csf::CsfAlgorithm;
using csf::Graph;
using csf::SymPoly;
using namespace csf::testing;

TEST_CASE("hand-checked monomial expansions") {
  // Path on 3 vertices: 6 ways to use three distinct colors, plus the two
  // endpoints may share one color.
  CHECK(csf::csf_stable_partitions(csf::path_graph(3)) ==
        SymPoly::parse("m[2,1] + 6m[1,1,1]"));

  // A single vertex and a single edge.
  CHECK(csf::csf_stable_partitions(Graph(1)) == SymPoly::parse("m[1]"));
  CHECK(csf::csf_stable_partitions(csf::path_graph(2)) ==
        SymPoly::parse("2m[1,1]"));

  // The graph with no vertices has the empty-product chromatic function 1.
  CHECK(csf::csf_stable_partitions(Graph(0)) == SymPoly::parse("m[]"));

  // Complete graphs force all-distinct colors: n! m_{1^n}.
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> ones(static_cast<size_t>(n), 1);
    SymPoly expect(csf::Basis::monomial);
    expect.add_term(csf::Partition(ones), Coeff::factorial(n));
    CHECK(csf::csf_stable_partitions(csf::complete_graph(n)) == expect);
  }
}

TEST_CASE("the claw expansion, cross-checked against a coloring count") {
  csf::CsfResult res = csf::compute_csf(csf::named_graph("claw"));
  CHECK(res.elementary == SymPoly::parse("4e[4] + 5e[3,1] - 2e[2,2] + e[2,1,1]"));

  // Independent sanity check of the leading coefficient: with 4 colors the
  // claw has 4 * 3^3 = 108 proper colorings, and the expansion above gives
  // X(1^4) = 4*1 + 5*4 - 2*4 + 1*12 = 108.  An e[4] coefficient of 1 would
  // give 105 and contradict the direct count.
  CHECK(res.monomial.evaluate_at_ones(4) == Coeff(108));
  CHECK(csf::chromatic_polynomial_at(csf::named_graph("claw"), 4) == Coeff(108));

  // The claw is the smallest graph whose Schur expansion has a negative term.
  CHECK(res.schur ==
        SymPoly::parse("8s[1,1,1,1] + 5s[2,1,1] - s[2,2] + s[3,1]"));
  CHECK_FALSE(csf::is_positive(res.schur));
  // Monomial coefficients count colorings by type, so they are positive.
  for (const auto& [lambda, c] : res.monomial.terms()) {
    CAPTURE(lambda.str());
    CHECK_FALSE(c.is_negative());
    CHECK_FALSE(c.is_zero());
  }
}

TEST_CASE("the three algorithms agree") {
  SUBCASE("on a spot-check set of structured graphs") {
    std::vector<Graph> graphs{
        csf::path_graph(6),        csf::cycle_graph(6),
        csf::complete_graph(5),    csf::named_graph("claw"),
        csf::three_sun(),          csf::generalized_pyramid(2, 1, 1),
        csf::path_graph(3).disjoint_union(csf::cycle_graph(3)),
        csf::empty_graph(4),
    };
    for (const Graph& g : graphs) {
      SymPoly direct = csf::csf_stable_partitions(g);
      CHECK(csf::to_monomial_basis(csf::csf_edge_subsets(g)) == direct);
      CHECK(csf::to_monomial_basis(csf::csf_deletion_contraction(g)) == direct);
    }
  }

  SUBCASE("on random graphs") {
    std::mt19937 rng(47u);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 1 + static_cast<int>(rng() % 8);
      Graph g = random_graph(n, rng);
      SymPoly direct = csf::csf_stable_partitions(g);
      CHECK(csf::to_monomial_basis(csf::csf_edge_subsets(g)) == direct);
      CHECK(csf::to_monomial_basis(csf::csf_deletion_contraction(g)) == direct);
    }
  }
}

TEST_CASE("evaluating at k ones equals the chromatic polynomial") {
  SUBCASE("hand values") {
    CHECK(csf::chromatic_polynomial_at(csf::path_graph(4), 3) == Coeff(24));
    CHECK(csf::chromatic_polynomial_at(csf::cycle_graph(4), 3) == Coeff(18));
    CHECK(csf::chromatic_polynomial_at(csf::cycle_graph(5), 3) == Coeff(30));
    CHECK(csf::chromatic_polynomial_at(csf::complete_graph(4), 4) == Coeff(24));
    CHECK(csf::chromatic_polynomial_at(csf::complete_graph(4), 3) == Coeff(0));
    CHECK(csf::chromatic_polynomial_at(csf::empty_graph(3), 2) == Coeff(8));
    CHECK(csf::chromatic_polynomial_at(Graph(0), 5) == Coeff(1));
  }

  SUBCASE("specialization identity on random graphs") {
    std::mt19937 rng(53u);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 1 + static_cast<int>(rng() % 7);
      Graph g = random_graph(n, rng);
      SymPoly x = csf::csf_stable_partitions(g);
      for (int k = 0; k <= n + 1; ++k) {
        CHECK(x.evaluate_at_ones(k) == csf::chromatic_polynomial_at(g, k));
      }
    }
  }
}

TEST_CASE("compute_csf honors algorithm selection and cross-checking") {
  Graph g = csf::cycle_graph(5);
  csf::CsfOptions opts;

  opts.algorithm = CsfAlgorithm::stable_partitions;
  csf::CsfResult a = csf::compute_csf(g, opts);
  CHECK(a.algorithm_used == CsfAlgorithm::stable_partitions);

  opts.algorithm = CsfAlgorithm::edge_subsets;
  csf::CsfResult b = csf::compute_csf(g, opts);
  CHECK(b.algorithm_used == CsfAlgorithm::edge_subsets);
  CHECK(a.monomial == b.monomial);
  CHECK(a.elementary == b.elementary);
  CHECK(a.schur == b.schur);

  opts.algorithm = CsfAlgorithm::deletion_contraction;
  csf::CsfResult c = csf::compute_csf(g, opts);
  CHECK(c.algorithm_used == CsfAlgorithm::deletion_contraction);
  CHECK(c.monomial == a.monomial);

  opts.algorithm = CsfAlgorithm::automatic;
  opts.cross_check = true;
  csf::CsfResult d = csf::compute_csf(g, opts);
  CHECK(d.monomial == a.monomial);
  CHECK(d.algorithm_used != CsfAlgorithm::automatic);  // resolved to a real one

  // The elementary and Schur expansions are consistent with the monomial one.
  CHECK(csf::to_monomial_basis(d.elementary) == d.monomial);
  CHECK(csf::to_monomial_basis(d.schur) == d.monomial);
}

TEST_CASE("algorithm names round trip") {
  for (CsfAlgorithm a :
       {CsfAlgorithm::automatic, CsfAlgorithm::stable_partitions,
        CsfAlgorithm::edge_subsets, CsfAlgorithm::deletion_contraction}) {
    CHECK(csf::algorithm_from_name(csf::algorithm_name(a)) == a);
  }
  CHECK(csf::algorithm_from_name("auto") == CsfAlgorithm::automatic);
  CHECK_THROWS_AS(csf::algorithm_from_name("magic"), csf::ParseError);
}

TEST_CASE("infeasible requests are rejected up front") {
  // Stable-partition enumeration is capped at 20 vertices.
  CHECK_THROWS_AS(csf::csf_stable_partitions(csf::path_graph(21)),
                  std::invalid_argument);
  // The edge-subset sum is capped at 28 edges; complete:8 has 28 and passes,
  // complete:9 has 36 and must refuse.
  CHECK_THROWS_AS(csf::csf_edge_subsets(csf::complete_graph(9)),
                  std::invalid_argument);
  // A sparse graph on many vertices still works through the automatic path.
  csf::CsfResult r = csf::compute_csf(csf::path_graph(24));
  CHECK(r.monomial.degree() == 24);
  CHECK(csf::is_positive(csf::expand_in_e(r.monomial)));
}
