#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

// Configuration family built around three pairwise non-adjacent anchor
// vertices a, b, c: three vertex groups ("ovals") attach to the anchor pairs
// {a,b}, {a,c}, {b,c}, and every vertex pair spanning two different ovals is
// an optional edge.  The built-in case list covers all size triples with
// parts at most two and at least two occupied ovals, up to permutation.
struct CaseSpec {
  std::array<int, 3> oval_sizes{};  // |S_ab|, |S_ac|, |S_bc|
  // When false, vertex pairs inside one oval also become optional edges
  // (exploratory mode; the default keeps each oval edgeless).
  bool stable_ovals = true;
  // Permits size triples outside the built-in seven, each part <= 5.
  bool allow_custom_sizes = false;
};

struct PeculiarCase {
  Graph graph;  // anchors 0,1,2 then the ovals as consecutive blocks
  std::array<int, 3> oval_sizes;
  uint32_t inter_oval_edges = 0;  // chosen subset of the cross-oval pairs
  uint32_t intra_oval_edges = 0;  // nonzero only when stable_ovals is false
};

// The seven built-in size triples: (1,1,0) (2,1,0) (2,2,0) (1,1,1) (2,1,1)
// (2,2,1) (2,2,2), with 1, 2, 4, 3, 5, 8, 12 cross-oval pairs respectively.
const std::array<std::array<int, 3>, 7>& peculiar_base_cases();

// Number of vertex pairs spanning two different ovals.
int inter_oval_pair_count(const std::array<int, 3>& oval_sizes);

// Every graph for one size triple, one per subset of the optional pairs, in
// ascending bitmask order.  Throws on invalid sizes or when the subset space
// exceeds 2^20 graphs.
std::vector<PeculiarCase> generate_peculiar_cases(const CaseSpec& spec);

// Census over the seven built-in cases: which generated graphs contain a
// triangle and avoid induced claws, co-diamonds, and (per variant) diamonds
// or co-claws, plus e-positivity of every survivor.
struct CaseCheckReport {
  struct Row {
    std::array<int, 3> oval_sizes{};
    int optional_pairs = 0;
    long long generated = 0;        // 2^optional_pairs
    long long diamond_variant = 0;  // triangle + {claw, co-diamond, diamond}-free
    long long co_claw_variant = 0;  // triangle + {claw, co-diamond, co-claw}-free
    long long either_variant = 0;
  };
  std::vector<Row> rows;
  long long diamond_total = 0;
  long long co_claw_total = 0;
  long long union_total = 0;   // survivors passing at least one variant
  long long variant_sum = 0;   // diamond_total + co_claw_total
  long long union_iso_classes = 0;
  bool all_survivors_e_positive = false;
  std::vector<std::string> negative_survivors;  // graph6 of non-e-positive survivors
  std::chrono::milliseconds elapsed{0};
};

CaseCheckReport run_case_check();

// One generalized pyramid per clique-size multiset within the vertex budget.
struct PyramidRow {
  int p = 0, q = 0, r = 0;  // p >= q >= r, at least two positive
  bool e_positive = false;
  bool s_positive = false;
  std::string negative_witness;  // most negative e-term when not e-positive
};

// All rows with p+q+r+3 <= max_total; requires max_total <= 14.
std::vector<PyramidRow> pyramid_sweep(int max_total);

// Census of graphs with no triangle and no independent triple, up to six
// vertices.  The n=6 count being zero bounds any such vertex group at five.
struct BoundReport {
  std::array<long long, 6> counts{};               // n = 1..6
  std::vector<std::string> five_vertex_witnesses;  // graph6, canonical form
  bool none_on_six = false;
  bool c5_among_witnesses = false;
};

BoundReport k4_oval_bound_check();

}  // namespace csf
