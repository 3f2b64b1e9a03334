#pragma once

#include <chrono>
#include <string>

#include "csf/graph.hpp"
#include "csf/sympoly.hpp"

namespace csf {

// The three independent ways to compute the chromatic symmetric function.
enum class CsfAlgorithm : char {
  automatic,
  stable_partitions,
  edge_subsets,
  deletion_contraction,
};

const char* algorithm_name(CsfAlgorithm a);
CsfAlgorithm algorithm_from_name(std::string_view name);

// Monomial expansion by direct enumeration of partitions of the vertex set
// into independent sets.  Cost scales with the number of such partitions, so
// this shines on dense graphs.  Requires order <= 20.
SymPoly csf_stable_partitions(const Graph& g);

// Power-sum expansion as a signed sum over edge subsets.  Subsets containing
// a cycle-closing edge cancel in pairs and are pruned, so only certain
// forests are visited.  Requires at most 28 edges.
SymPoly csf_edge_subsets(const Graph& g);

// Power-sum expansion by deletion-contraction on vertex-weighted graphs
// (contracting an edge adds the endpoint weights), with memoization keyed by
// the weight-aware canonical form on small subproblems.
SymPoly csf_deletion_contraction(const Graph& g);

struct CsfOptions {
  CsfAlgorithm algorithm = CsfAlgorithm::automatic;
  // Recompute with a second algorithm and require identical results.
  bool cross_check = false;
};

struct CsfResult {
  SymPoly monomial{Basis::monomial};
  SymPoly elementary{Basis::elementary};
  SymPoly schur{Basis::schur};
  CsfAlgorithm algorithm_used = CsfAlgorithm::automatic;
  std::chrono::microseconds elapsed{0};
};

// Computes X_G and expands it in the monomial, elementary and Schur bases.
CsfResult compute_csf(const Graph& g, const CsfOptions& options = {});

// Number of proper colorings with colors {1..k}, by integer-only
// deletion-contraction.  Shares no code with the symmetric-function
// pipeline, so it serves as an independent oracle for specialization.
Coeff chromatic_polynomial_at(const Graph& g, int k);

}  // namespace csf
