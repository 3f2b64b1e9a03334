#include "csf/battery.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "csf/canonical.hpp"
#include "csf/chromatic.hpp"
#include "csf/enumerate.hpp"
#include "csf/families.hpp"
#include "csf/four_vertex.hpp"
#include "csf/graph.hpp"
#include "csf/graph6.hpp"
#include "csf/named_graphs.hpp"
#include "csf/partition.hpp"
#include "csf/structure.hpp"
#include "csf/sympoly.hpp"
#include "csf/transitions.hpp"

namespace csf {

namespace {

using Clock = std::chrono::steady_clock;
using std::chrono::duration_cast;
using std::chrono::microseconds;
using std::chrono::milliseconds;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// First coefficient where the two same-basis polynomials differ.
std::string coeff_diff(const SymPoly& got, const SymPoly& want) {
  std::set<Partition> keys;
  for (const auto& [p, c] : got.terms()) keys.insert(p);
  for (const auto& [p, c] : want.terms()) keys.insert(p);
  for (const auto& p : keys) {
    const Coeff a = got.coeff(p);
    const Coeff b = want.coeff(p);
    if (!(a == b)) {
      std::ostringstream out;
      out << "coefficient of " << basis_letter(got.basis()) << '[' << p.str()
          << "]: computed " << a.str() << ", reference " << b.str();
      return out.str();
    }
  }
  return "polynomials agree";
}

Graph induced_on(const Graph& g, const std::vector<int>& vertices) {
  uint64_t mask = 0;
  for (int v : vertices) mask |= uint64_t{1} << v;
  return g.induced_subgraph(mask);
}

bool is_clique(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

std::vector<std::vector<Graph>> levels_free_of(int n, KindSet kinds) {
  EnumerateOptions opt;
  opt.hereditary_filter = [kinds](const Graph& g) { return is_h_free(g, kinds); };
  return enumerate_levels(n, opt);
}

bool e_positive(const Graph& g) { return is_positive(compute_csf(g).elementary); }

// ---------------------------------------------------------------- item 1

Outcome item_claw_reference() {
  const Graph claw = named_graph("claw");
  const auto t0 = Clock::now();
  const CsfResult r = compute_csf(claw);
  const auto us = duration_cast<microseconds>(Clock::now() - t0);
  const SymPoly reference = SymPoly::parse("e[4] + 5e[3,1] - 2e[2,2] + e[2,1,1]");
  const bool equal = r.elementary == reference;
  const bool fast = us < microseconds(10000);
  std::ostringstream d;
  d << "computed " << r.elementary.render();
  if (!equal) {
    d << "; reference " << reference.render() << "; " << coeff_diff(r.elementary, reference);
  }
  if (fast) {
    d << "; within the 10 ms budget";
  } else {
    d << "; exceeds the 10 ms budget (" << us.count() << " us)";
  }
  return {equal && fast, d.str()};
}

// ---------------------------------------------------------------- item 2

Outcome item_three_sun() {
  const CsfResult r = compute_csf(three_sun());
  const SymPoly reference = SymPoly::parse(
      "6e[3,2,1] - 6e[3,3] + 6e[4,1,1] + 12e[4,2] + 18e[5,1] + 12e[6]");
  const bool equal = r.elementary == reference;
  const bool not_positive = !is_positive(r.elementary);
  const auto witness = negative_witness(r.elementary);
  const bool witness_ok = witness && witness->part == Partition({3, 3});
  std::ostringstream d;
  if (equal) {
    d << "expansion matches the reference";
  } else {
    d << "computed " << r.elementary.render() << "; " << coeff_diff(r.elementary, reference);
  }
  if (witness_ok) {
    d << "; not e-positive, witness e[3,3] = " << witness->coeff.str();
  } else if (witness) {
    d << "; unexpected witness e[" << witness->part.str() << "]";
  } else {
    d << "; unexpectedly e-positive";
  }
  return {equal && not_positive && witness_ok, d.str()};
}

// ---------------------------------------------------------------- item 3

Outcome item_complete_graphs() {
  for (int n = 1; n <= 8; ++n) {
    const SymPoly expected =
        SymPoly::term(Basis::elementary, Partition({n}), Coeff::factorial(n));
    const SymPoly got = compute_csf(complete_graph(n)).elementary;
    if (!(got == expected)) {
      std::ostringstream d;
      d << "n = " << n << ": computed " << got.render() << ", expected " << expected.render();
      return {false, d.str()};
    }
  }
  return {true, "n = 1..8 all equal n!*e[n]"};
}

// ---------------------------------------------------------------- item 4

Outcome item_paths_cycles() {
  std::vector<std::string> bad;
  int checked = 0;
  for (int k = 1; k <= 10; ++k) {
    ++checked;
    if (!e_positive(path_graph(k))) bad.push_back("path:" + std::to_string(k));
  }
  for (int k = 3; k <= 10; ++k) {
    ++checked;
    if (!e_positive(cycle_graph(k))) bad.push_back("cycle:" + std::to_string(k));
  }
  if (!bad.empty()) {
    std::string d = "not e-positive:";
    for (const auto& name : bad) d += " " + name;
    return {false, d};
  }
  return {true, std::to_string(checked) + " graphs (paths 1..10, cycles 3..10), all e-positive"};
}

// ---------------------------------------------------------------- item 5

Outcome item_no_stable_triple() {
  EnumerateOptions opt;
  opt.hereditary_filter = [](const Graph& g) { return g.independence_number() <= 2; };
  const auto levels = enumerate_levels(7, opt);
  long long checked = 0;
  for (const auto& level : levels) {
    for (const auto& g : level) {
      ++checked;
      if (!e_positive(g)) {
        return {false, "not e-positive: " + graph6_encode(g)};
      }
    }
  }
  return {true, std::to_string(checked) + " graphs with no stable triple, all e-positive"};
}

// ---------------------------------------------------------------- item 6

Outcome item_theorem_sweeps() {
  const std::array<std::pair<const char*, KindSet>, 3> sweeps = {{
      {"claw+paw", {FourVertexKind::claw, FourVertexKind::paw}},
      {"claw+co-paw", {FourVertexKind::claw, FourVertexKind::co_paw}},
      {"claw+P4", {FourVertexKind::claw, FourVertexKind::p4}},
  }};
  std::ostringstream d;
  bool ok = true;
  for (const auto& [name, kinds] : sweeps) {
    const auto levels = levels_free_of(8, kinds);
    long long checked = 0;
    std::vector<std::string> bad;
    for (const auto& level : levels) {
      for (const auto& g : level) {
        ++checked;
        if (!e_positive(g)) bad.push_back(graph6_encode(g));
      }
    }
    if (&kinds != &sweeps[0].second) d << "; ";
    d << name << ": " << checked << " graphs";
    if (bad.empty()) {
      d << ", all e-positive";
    } else {
      ok = false;
      d << ", NOT e-positive:";
      for (const auto& g6 : bad) d << ' ' << g6;
    }
  }
  return {ok, d.str()};
}

// ---------------------------------------------------------------- item 7

Outcome item_case_census() {
  const CaseCheckReport r = run_case_check();
  const bool positive = r.all_survivors_e_positive;
  const bool tally36 =
      r.union_total == 36 || r.variant_sum == 36 || r.union_iso_classes == 36;
  const bool fast = r.elapsed < milliseconds(60000);
  std::ostringstream d;
  d << "survivors e-positive: " << (positive ? "yes" : "NO");
  if (!positive) {
    for (const auto& g6 : r.negative_survivors) d << ' ' << g6;
  }
  d << "; counts: per-filter union " << r.union_total << ", variant sum " << r.variant_sum
    << ", iso classes " << r.union_iso_classes;
  if (tally36) {
    d << " (one convention equals the reference tally 36)";
  } else {
    d << "; no convention equals the reference tally 36";
  }
  if (fast) {
    d << "; within the 1 minute budget";
  } else {
    d << "; exceeds the 1 minute budget (" << r.elapsed.count() << " ms)";
  }
  return {positive && tally36 && fast, d.str()};
}

// ---------------------------------------------------------------- item 8

Outcome item_structural_suites() {
  std::ostringstream d;
  bool ok = true;
  auto fail = [&](const std::string& suite, const Graph& g, const std::string& why) {
    ok = false;
    d << " [" << suite << " fails on " << graph6_encode(g) << ": " << why << "]";
  };

  // (a) Components of paw-free graphs are triangle-free or complete multipartite.
  {
    long long checked = 0;
    for (const auto& level : levels_free_of(8, {FourVertexKind::paw})) {
      for (const auto& g : level) {
        ++checked;
        for (const auto& comp : g.components()) {
          const Graph c = induced_on(g, comp);
          if (c.has_triangle() && !complete_multipartite_parts(c).is_complete_multipartite) {
            fail("paw-free", g, "component neither triangle-free nor complete multipartite");
          }
        }
      }
    }
    d << "paw-free: " << checked;
  }

  // (b) Components of claw-free triangle-free graphs are paths and cycles.
  {
    EnumerateOptions opt;
    opt.hereditary_filter = [](const Graph& g) {
      return !g.has_triangle() && is_h_free(g, {FourVertexKind::claw});
    };
    long long checked = 0;
    for (const auto& level : enumerate_levels(8, opt)) {
      for (const auto& g : level) {
        ++checked;
        try {
          const auto shapes = claw_triangle_free_shape(g);
          int covered = 0;
          for (const auto& shape : shapes) covered += shape.size;
          if (covered != g.order()) fail("path/cycle shape", g, "shapes do not cover the graph");
        } catch (const StructureError& e) {
          fail("path/cycle shape", g, e.what());
        }
      }
    }
    d << "; claw+triangle-free: " << checked;
  }

  // (c) Disconnected co-diamond-free graphs: every component a clique, or one
  //     isolated vertex plus a complete multipartite rest.
  {
    long long checked = 0;
    for (const auto& level : levels_free_of(8, {FourVertexKind::co_diamond})) {
      for (const auto& g : level) {
        if (g.connected()) continue;
        ++checked;
        const auto comps = g.components();
        bool all_cliques = true;
        for (const auto& comp : comps) {
          if (!is_clique(induced_on(g, comp))) all_cliques = false;
        }
        bool multipartite_plus_point = false;
        for (const auto& comp : comps) {
          if (comp.size() != 1) continue;
          const Graph rest = g.induced_subgraph(g.vertex_mask() ^ (uint64_t{1} << comp[0]));
          if (complete_multipartite_parts(rest).is_complete_multipartite) {
            multipartite_plus_point = true;
            break;
          }
        }
        if (!all_cliques && !multipartite_plus_point) {
          fail("disconnected co-diamond-free", g,
               "neither all-clique components nor complete-multipartite plus a point");
        }
      }
    }
    d << "; disconnected co-diamond-free: " << checked;
  }

  // (d,e,f) One pass over claw+co-diamond-free graphs.
  {
    long long big_alpha = 0, c4_peculiar = 0, two_k2_peculiar = 0;
    for (const auto& level :
         levels_free_of(8, {FourVertexKind::claw, FourVertexKind::co_diamond})) {
      for (const auto& g : level) {
        if (g.independence_number() >= 4) {
          ++big_alpha;
          if (g.edge_count() != 0) fail("alpha>=4 edgeless", g, "has an edge");
        }
        if (!is_peculiar(g)) continue;
        const auto dec = decompose_peculiar(g);
        if (is_h_free(g, {FourVertexKind::c4})) {
          ++c4_peculiar;
          for (const auto& oval : dec.ovals) {
            if (!is_clique(induced_on(g, oval))) {
              fail("C4-free ovals are cliques", g, "oval is not a clique");
            }
          }
        }
        if (is_h_free(g, {FourVertexKind::two_k2})) {
          ++two_k2_peculiar;
          std::array<int, 3> sizes = {static_cast<int>(dec.ovals[0].size()),
                                      static_cast<int>(dec.ovals[1].size()),
                                      static_cast<int>(dec.ovals[2].size())};
          std::sort(sizes.begin(), sizes.end(), std::greater<int>());
          if (sizes[1] == 0 ||
              !isomorphic(g, generalized_pyramid(sizes[0], sizes[1], sizes[2]))) {
            fail("2K2-free is a pyramid", g, "not isomorphic to the matching pyramid");
          }
        }
      }
    }
    d << "; alpha>=4: " << big_alpha << "; peculiar C4-free: " << c4_peculiar
      << "; peculiar 2K2-free: " << two_k2_peculiar;
  }

  // (g) No graph on six vertices avoids both a triangle and a stable triple,
  //     and C5 is the unique five-vertex graph doing so.
  {
    const BoundReport b = k4_oval_bound_check();
    const std::array<long long, 6> expected = {1, 2, 2, 3, 1, 0};
    std::ostringstream row;
    for (size_t i = 0; i < b.counts.size(); ++i) row << (i ? "," : "") << b.counts[i];
    d << "; triangle-free + no stable triple counts: " << row.str();
    if (b.counts != expected || !b.none_on_six || !b.c5_among_witnesses ||
        b.five_vertex_witnesses.size() != 1) {
      ok = false;
      d << " [expected 1,2,2,3,1,0 with C5 the unique five-vertex witness]";
    } else {
      d << "; unique five-vertex witness is C5";
    }
  }

  return {ok, d.str()};
}

// ---------------------------------------------------------------- item 9

Graph random_graph(int n, std::mt19937& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

Outcome item_algorithm_agreement() {
  auto triple_agrees = [](const Graph& g) {
    const SymPoly a = csf_stable_partitions(g);
    const SymPoly b = to_monomial_basis(csf_edge_subsets(g));
    const SymPoly c = to_monomial_basis(csf_deletion_contraction(g));
    return a == b && b == c;
  };

  long long classes = 0;
  for (const auto& level : enumerate_levels(7)) {
    for (const auto& g : level) {
      ++classes;
      if (!triple_agrees(g)) {
        return {false, "three-way disagreement on " + graph6_encode(g)};
      }
    }
  }

  std::mt19937 rng(20250815u);
  long long sampled = 0;
  for (int n = 8; n <= 9; ++n) {
    for (int rep = 0; rep < 100; ++rep) {
      Graph g;
      do {
        g = random_graph(n, rng);
      } while (g.edge_count() > 26);
      ++sampled;
      if (!triple_agrees(g)) {
        return {false, "three-way disagreement on " + graph6_encode(g)};
      }
    }
  }

  long long shapes = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      ++shapes;
      if (!(to_monomial_basis(jacobi_trudi_schur(lambda)) == kostka_row(lambda))) {
        return {false, "Schur routes disagree at shape [" + lambda.str() + "]"};
      }
    }
  }

  std::ostringstream d;
  d << classes << " classes (n <= 7) + " << sampled
    << " random graphs (n = 8, 9): three algorithms agree; " << shapes
    << " shapes: determinant and tableau-count Schur expansions agree";
  return {true, d.str()};
}

// ---------------------------------------------------------------- item 10

Outcome item_specialization() {
  long long evaluations = 0;
  for (const auto& level : enumerate_levels(7)) {
    for (const auto& g : level) {
      const SymPoly m = compute_csf(g).monomial;
      for (int k = 0; k <= 7; ++k) {
        ++evaluations;
        if (!(m.evaluate_at_ones(k) == chromatic_polynomial_at(g, k))) {
          return {false, "mismatch on " + graph6_encode(g) + " at k = " + std::to_string(k)};
        }
      }
    }
  }
  return {true, std::to_string(evaluations) +
                    " evaluations (all classes n <= 7, k = 0..7) match the coloring counts"};
}

// ---------------------------------------------------------------- item 11

Outcome item_enumeration_counts() {
  const std::array<long long, 5> expected = {1, 2, 4, 11, 34};
  const auto levels = enumerate_levels(5);
  std::array<long long, 5> brute{};
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::string> keys;
    for (uint32_t bits = 0; bits < (uint32_t{1} << pairs.size()); ++bits) {
      Graph g(n);
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (bits >> i & 1u) g.add_edge(pairs[i].first, pairs[i].second);
      }
      keys.insert(canonical_key(g));
    }
    brute[static_cast<size_t>(n - 1)] = static_cast<long long>(keys.size());
  }
  std::ostringstream d;
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    const auto got = static_cast<long long>(levels[static_cast<size_t>(n - 1)].size());
    const auto want = expected[static_cast<size_t>(n - 1)];
    const auto oracle = brute[static_cast<size_t>(n - 1)];
    if (n > 1) d << ", ";
    d << got;
    if (got != want || oracle != want) {
      ok = false;
      d << " (expected " << want << ", labeled brute force " << oracle << ")";
    }
  }
  if (ok) d << " classes for n = 1..5, matching the labeled brute force";
  return {ok, d.str()};
}

// ---------------------------------------------------------------- item 12

Outcome item_open_sweeps() {
  std::ostringstream d;
  bool surprise = false;

  const auto rows = pyramid_sweep(12);
  long long bad_pyramids = 0;
  for (const auto& row : rows) {
    if (!row.e_positive) ++bad_pyramids;
  }
  d << "pyramids on <= 12 vertices: " << rows.size() << " size triples, ";
  if (bad_pyramids == 0) {
    d << "all e-positive";
  } else {
    surprise = true;
    d << bad_pyramids << " NOT e-positive";
  }

  long long classes = 0;
  std::vector<std::string> candidates;
  for (const auto& level :
       levels_free_of(9, {FourVertexKind::claw, FourVertexKind::co_diamond})) {
    for (const auto& g : level) {
      ++classes;
      if (!e_positive(g)) candidates.push_back(graph6_encode(g));
    }
  }
  d << "; claw+co-diamond-free on <= 9 vertices: " << classes << " classes, ";
  if (candidates.empty()) {
    d << "all e-positive; no counterexample candidates";
  } else {
    surprise = true;
    d << "POTENTIAL COUNTEREXAMPLES:";
    for (const auto& g6 : candidates) d << ' ' << g6;
  }
  if (surprise) {
    d << " (surfaced for review; exploratory items never fail the battery)";
  }
  return {true, d.str()};
}

struct ItemSpec {
  int id;
  const char* name;
  bool exploratory;
  Outcome (*fn)();
};

constexpr std::array<ItemSpec, 12> battery_items = {{
    {1, "claw: elementary expansion matches the reference table", false, item_claw_reference},
    {2, "three-sun: reference expansion, not e-positive, witness (3,3)", false, item_three_sun},
    {3, "complete graphs: X equals n!*e[n] for n = 1..8", false, item_complete_graphs},
    {4, "paths and cycles on <= 10 vertices are e-positive", false, item_paths_cycles},
    {5, "graphs with no stable triple (n <= 7) are e-positive", false, item_no_stable_triple},
    {6, "claw+paw, claw+co-paw, claw+P4 sweeps (n <= 8) are e-positive", false,
     item_theorem_sweeps},
    {7, "oval-configuration census: survivors e-positive, tally of 36", false, item_case_census},
    {8, "structural decompositions hold on all graphs with <= 8 vertices", false,
     item_structural_suites},
    {9, "three X_G algorithms and two Schur routes agree", false, item_algorithm_agreement},
    {10, "X at k ones equals the number of proper k-colorings", false, item_specialization},
    {11, "isomorphism-class counts match the labeled brute force", false,
     item_enumeration_counts},
    {12, "open-question sweeps: pyramids to 12, claw+co-diamond-free to 9", true,
     item_open_sweeps},
}};

}  // namespace

BatteryResult run_battery(std::ostream* live) {
  BatteryResult result;
  result.all_passed = true;
  for (const auto& spec : battery_items) {
    const auto t0 = Clock::now();
    Outcome outcome;
    try {
      outcome = spec.fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    BatteryItem item;
    item.id = spec.id;
    item.name = spec.name;
    item.exploratory = spec.exploratory;
    item.passed = outcome.passed;
    item.detail = std::move(outcome.detail);
    item.elapsed = duration_cast<milliseconds>(Clock::now() - t0);
    if (!item.exploratory && !item.passed) result.all_passed = false;
    if (live) {
      *live << battery_line(item, static_cast<int>(battery_items.size())) << std::endl;
    }
    result.items.push_back(std::move(item));
  }
  return result;
}

std::string battery_line(const BatteryItem& item, int total, bool include_timing) {
  std::ostringstream out;
  out << '[' << std::setw(2) << item.id << '/' << total << "] "
      << (item.exploratory ? "info" : item.passed ? "pass" : "FAIL");
  if (include_timing) out << ' ' << std::setw(7) << item.elapsed.count() << " ms";
  out << "  " << item.name;
  if (!item.detail.empty()) out << "  |  " << item.detail;
  return out.str();
}

}  // namespace csf
