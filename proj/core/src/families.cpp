#include "csf/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "csf/canonical.hpp"
#include "csf/chromatic.hpp"
#include "csf/enumerate.hpp"
#include "csf/four_vertex.hpp"
#include "csf/graph6.hpp"
#include "csf/named_graphs.hpp"
#include "csf/transitions.hpp"

namespace csf {

namespace {

constexpr std::array<std::array<int, 3>, 7> base_cases = {{
    {1, 1, 0},
    {2, 1, 0},
    {2, 2, 0},
    {1, 1, 1},
    {2, 1, 1},
    {2, 2, 1},
    {2, 2, 2},
}};

bool is_base_case(const std::array<int, 3>& sizes) {
  std::array<int, 3> sorted = sizes;
  std::sort(sorted.rbegin(), sorted.rend());
  for (const auto& base : base_cases) {
    if (sorted == base) return true;
  }
  return false;
}

}  // namespace

const std::array<std::array<int, 3>, 7>& peculiar_base_cases() { return base_cases; }

int inter_oval_pair_count(const std::array<int, 3>& s) {
  return s[0] * s[1] + s[0] * s[2] + s[1] * s[2];
}

std::vector<PeculiarCase> generate_peculiar_cases(const CaseSpec& spec) {
  const auto& sizes = spec.oval_sizes;
  for (int s : sizes) {
    if (s < 0 || s > 5) {
      throw std::invalid_argument("generate_peculiar_cases: oval sizes must be in 0..5");
    }
  }
  if (!spec.allow_custom_sizes && !is_base_case(sizes)) {
    throw std::invalid_argument(
        "generate_peculiar_cases: size triple is not one of the seven built-in cases "
        "(set allow_custom_sizes to explore others)");
  }

  int n = 3 + sizes[0] + sizes[1] + sizes[2];
  // Oval vertex ranges and their two anchors.
  std::array<std::pair<int, int>, 3> range;
  std::array<std::pair<int, int>, 3> anchors = {{{0, 1}, {0, 2}, {1, 2}}};
  int next = 3;
  for (int i = 0; i < 3; ++i) {
    range[static_cast<size_t>(i)] = {next, next + sizes[static_cast<size_t>(i)]};
    next += sizes[static_cast<size_t>(i)];
  }

  std::vector<std::pair<int, int>> inter_pairs;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (int u = range[static_cast<size_t>(i)].first; u < range[static_cast<size_t>(i)].second; ++u) {
        for (int v = range[static_cast<size_t>(j)].first; v < range[static_cast<size_t>(j)].second; ++v) {
          inter_pairs.emplace_back(u, v);
        }
      }
    }
  }
  std::vector<std::pair<int, int>> intra_pairs;
  if (!spec.stable_ovals) {
    for (int i = 0; i < 3; ++i) {
      for (int u = range[static_cast<size_t>(i)].first; u < range[static_cast<size_t>(i)].second; ++u) {
        for (int v = u + 1; v < range[static_cast<size_t>(i)].second; ++v) {
          intra_pairs.emplace_back(u, v);
        }
      }
    }
  }
  if (inter_pairs.size() + intra_pairs.size() > 20) {
    throw std::invalid_argument("generate_peculiar_cases: more than 2^20 subsets");
  }

  Graph base(n);
  for (int i = 0; i < 3; ++i) {
    auto [a, b] = anchors[static_cast<size_t>(i)];
    for (int v = range[static_cast<size_t>(i)].first; v < range[static_cast<size_t>(i)].second; ++v) {
      base.add_edge(v, a);
      base.add_edge(v, b);
    }
  }

  std::vector<PeculiarCase> out;
  uint32_t inter_count = uint32_t{1} << inter_pairs.size();
  uint32_t intra_count = uint32_t{1} << intra_pairs.size();
  out.reserve(static_cast<size_t>(inter_count) * intra_count);
  for (uint32_t inter = 0; inter < inter_count; ++inter) {
    for (uint32_t intra = 0; intra < intra_count; ++intra) {
      Graph g = base;
      for (size_t i = 0; i < inter_pairs.size(); ++i) {
        if ((inter >> i) & 1) g.add_edge(inter_pairs[i].first, inter_pairs[i].second);
      }
      for (size_t i = 0; i < intra_pairs.size(); ++i) {
        if ((intra >> i) & 1) g.add_edge(intra_pairs[i].first, intra_pairs[i].second);
      }
      out.push_back(PeculiarCase{std::move(g), sizes, inter, intra});
    }
  }
  return out;
}

CaseCheckReport run_case_check() {
  auto start = std::chrono::steady_clock::now();
  const KindSet diamond_filter{FourVertexKind::claw, FourVertexKind::co_diamond,
                               FourVertexKind::diamond};
  const KindSet co_claw_filter{FourVertexKind::claw, FourVertexKind::co_diamond,
                               FourVertexKind::co_claw};

  CaseCheckReport report;
  std::unordered_set<std::string> iso_classes;
  for (const auto& sizes : base_cases) {
    CaseCheckReport::Row row;
    row.oval_sizes = sizes;
    row.optional_pairs = inter_oval_pair_count(sizes);
    auto cases = generate_peculiar_cases(CaseSpec{sizes});
    row.generated = static_cast<long long>(cases.size());
    for (const PeculiarCase& pc : cases) {
      if (!pc.graph.has_triangle()) continue;
      bool diamond_ok = is_h_free(pc.graph, diamond_filter);
      bool co_claw_ok = is_h_free(pc.graph, co_claw_filter);
      if (diamond_ok) ++row.diamond_variant;
      if (co_claw_ok) ++row.co_claw_variant;
      if (!diamond_ok && !co_claw_ok) continue;
      ++row.either_variant;
      iso_classes.insert(canonical_key(pc.graph));
      CsfResult csf = compute_csf(pc.graph);
      if (!is_positive(csf.elementary)) {
        report.negative_survivors.push_back(graph6_encode(canonical_form(pc.graph).graph));
      }
    }
    report.diamond_total += row.diamond_variant;
    report.co_claw_total += row.co_claw_variant;
    report.union_total += row.either_variant;
    report.rows.push_back(row);
  }
  report.variant_sum = report.diamond_total + report.co_claw_total;
  report.union_iso_classes = static_cast<long long>(iso_classes.size());
  report.all_survivors_e_positive = report.negative_survivors.empty();
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<PyramidRow> pyramid_sweep(int max_total) {
  if (max_total > 14) {
    throw std::invalid_argument("pyramid_sweep: vertex budget above 14 is unsupported");
  }
  std::vector<PyramidRow> rows;
  for (int total = 5; total <= max_total; ++total) {
    int s = total - 3;
    for (int p = s; p >= 1; --p) {
      for (int q = std::min(p, s - p); q >= 1; --q) {
        int r = s - p - q;
        if (r < 0 || r > q) continue;
        Graph g = generalized_pyramid(p, q, r);
        CsfResult csf = compute_csf(g);
        PyramidRow row;
        row.p = p;
        row.q = q;
        row.r = r;
        row.e_positive = is_positive(csf.elementary);
        row.s_positive = is_positive(csf.schur);
        if (!row.e_positive) {
          auto witness = negative_witness(csf.elementary);
          row.negative_witness = "e[" + witness->part.str() + "]: " + witness->coeff.str();
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

BoundReport k4_oval_bound_check() {
  EnumerateOptions options;
  options.hereditary_filter = [](const Graph& g) {
    return !g.has_triangle() && g.independence_number() <= 2;
  };
  auto levels = enumerate_levels(6, options);

  BoundReport report;
  for (int n = 1; n <= 6; ++n) {
    report.counts[static_cast<size_t>(n - 1)] =
        static_cast<long long>(levels[static_cast<size_t>(n - 1)].size());
  }
  Graph c5 = cycle_graph(5);
  for (const Graph& g : levels[4]) {
    report.five_vertex_witnesses.push_back(graph6_encode(g));
    if (isomorphic(g, c5)) report.c5_among_witnesses = true;
  }
  report.none_on_six = levels[5].empty();
  return report;
}

}  // namespace csf
