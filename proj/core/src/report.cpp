#include "csf/report.hpp"

#include <chrono>
#include <sstream>

#include "csf/canonical.hpp"
#include "csf/graph6.hpp"
#include "csf/sympoly.hpp"

#include "json.hpp"

namespace csf {

namespace {

using ordered_json = nlohmann::ordered_json;
using steady = std::chrono::steady_clock;

std::string stable_graph_id(const Graph& g) {
  if (g.order() <= 16) return graph6_encode(canonical_form(g).graph);
  return graph6_encode(g);
}

// One pass over the 4-subsets, recording which of the eleven kinds occur.
std::array<bool, four_vertex_kind_count> kinds_present(const Graph& g) {
  std::array<bool, four_vertex_kind_count> present{};
  const int n = g.order();
  int remaining = four_vertex_kind_count;
  for (int a = 0; a < n && remaining > 0; ++a) {
    for (int b = a + 1; b < n && remaining > 0; ++b) {
      for (int c = b + 1; c < n && remaining > 0; ++c) {
        for (int d = c + 1; d < n && remaining > 0; ++d) {
          auto& slot = present[static_cast<size_t>(
              classify_four_subset(g, {a, b, c, d}))];
          if (!slot) {
            slot = true;
            --remaining;
          }
        }
      }
    }
  }
  return present;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

ordered_json timings_json(const StageTimings& t) {
  ordered_json j;
  j["csf_us"] = t.csf.count();
  j["freeness_us"] = t.freeness.count();
  j["total_us"] = t.total.count();
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string join_sizes(const std::array<int, 3>& sizes) {
  std::ostringstream out;
  out << sizes[0] << ',' << sizes[1] << ',' << sizes[2];
  return out.str();
}

}  // namespace

std::string report_graph_id(const Graph& g) { return stable_graph_id(g); }

Report make_report(const Graph& g, const CsfOptions& options) {
  const auto t0 = steady::now();
  Report r;
  r.graph_id = stable_graph_id(g);
  r.n = g.order();
  r.m = g.edge_count();
  r.alpha = g.independence_number();

  CsfResult csf = compute_csf(g, options);
  r.e_expansion = csf.elementary.render();
  r.s_expansion = csf.schur.render();
  r.e_positive = is_positive(csf.elementary);
  r.s_positive = is_positive(csf.schur);
  r.algorithm_used = csf.algorithm_used;
  r.timings.csf = csf.elapsed;

  const auto t1 = steady::now();
  const auto present = kinds_present(g);
  for (FourVertexKind kind : all_four_vertex_kinds) {
    r.freeness.emplace_back(std::string(kind_name(kind)),
                            !present[static_cast<size_t>(kind)]);
  }
  const auto t2 = steady::now();
  r.timings.freeness = std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1);
  r.timings.total = std::chrono::duration_cast<std::chrono::microseconds>(t2 - t0);
  return r;
}

std::vector<FreenessCheck> check_freeness(const Graph& g, KindSet kinds) {
  std::vector<FreenessCheck> out;
  for (FourVertexKind kind : kinds.kinds()) {
    FreenessCheck check;
    check.kind = kind;
    if (auto hit = find_induced(g, KindSet{kind})) {
      check.free = false;
      check.witness = hit->vertices;
    } else {
      check.free = true;
    }
    out.push_back(check);
  }
  return out;
}

std::string report_json(const Report& r, bool include_timings) {
  ordered_json j;
  j["schema"] = "csf-report/1";
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  ordered_json freeness = ordered_json::object();
  for (const auto& [name, free] : r.freeness) freeness[name] = free;
  j["freeness"] = std::move(freeness);
  j["alpha"] = r.alpha;
  j["e_expansion"] = r.e_expansion;
  j["s_expansion"] = r.s_expansion;
  j["e_positive"] = r.e_positive;
  j["s_positive"] = r.s_positive;
  if (include_timings) j["timings"] = timings_json(r.timings);
  return dump(j);
}

std::string report_tsv_header(bool include_timings) {
  std::ostringstream head;
  head << "graph_id\tn\tm";
  for (FourVertexKind kind : all_four_vertex_kinds) head << "\tfree:" << kind_name(kind);
  head << "\talpha\te_expansion\ts_expansion\te_positive\ts_positive";
  if (include_timings) head << "\tcsf_us\tfreeness_us\ttotal_us";
  head << '\n';
  return head.str();
}

std::string report_tsv_row(const Report& r, bool include_timings) {
  std::ostringstream row;
  row << r.graph_id << '\t' << r.n << '\t' << r.m;
  for (const auto& [name, free] : r.freeness) row << '\t' << bool_word(free);
  row << '\t' << r.alpha << '\t' << r.e_expansion << '\t' << r.s_expansion << '\t'
      << bool_word(r.e_positive) << '\t' << bool_word(r.s_positive);
  if (include_timings) {
    row << '\t' << r.timings.csf.count() << '\t' << r.timings.freeness.count() << '\t'
        << r.timings.total.count();
  }
  row << '\n';
  return row.str();
}

std::string report_tsv(const Report& r, bool include_timings) {
  return report_tsv_header(include_timings) + report_tsv_row(r, include_timings);
}

std::string freeness_json(const Graph& g, const std::vector<FreenessCheck>& checks) {
  ordered_json j;
  j["schema"] = "csf-freeness/1";
  j["graph_id"] = stable_graph_id(g);
  j["n"] = g.order();
  j["m"] = g.edge_count();
  ordered_json rows = ordered_json::array();
  for (const auto& check : checks) {
    ordered_json row;
    row["kind"] = std::string(kind_name(check.kind));
    row["free"] = check.free;
    if (check.witness) row["witness"] = *check.witness;
    rows.push_back(std::move(row));
  }
  j["checks"] = std::move(rows);
  return dump(j);
}

std::string freeness_tsv_header() { return "graph_id\tkind\tfree\twitness\n"; }

std::string freeness_tsv_rows(const std::string& graph_id,
                              const std::vector<FreenessCheck>& checks) {
  std::ostringstream out;
  for (const auto& check : checks) {
    out << graph_id << '\t' << kind_name(check.kind) << '\t' << bool_word(check.free) << '\t';
    if (check.witness) {
      const auto& w = *check.witness;
      out << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3];
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

std::string case_check_json(const CaseCheckReport& r, bool include_timings) {
  ordered_json j;
  j["schema"] = "csf-case-check/1";
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json jr;
    jr["oval_sizes"] = row.oval_sizes;
    jr["optional_pairs"] = row.optional_pairs;
    jr["generated"] = row.generated;
    jr["diamond_variant"] = row.diamond_variant;
    jr["co_claw_variant"] = row.co_claw_variant;
    jr["either_variant"] = row.either_variant;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["diamond_total"] = r.diamond_total;
  j["co_claw_total"] = r.co_claw_total;
  j["union_total"] = r.union_total;
  j["variant_sum"] = r.variant_sum;
  j["union_iso_classes"] = r.union_iso_classes;
  j["all_survivors_e_positive"] = r.all_survivors_e_positive;
  j["negative_survivors"] = r.negative_survivors;
  if (include_timings) j["elapsed_ms"] = r.elapsed.count();
  return dump(j);
}

std::string case_check_tsv(const CaseCheckReport& r) {
  std::ostringstream out;
  out << "oval_sizes\toptional_pairs\tgenerated\tdiamond_variant\tco_claw_variant\teither_variant\n";
  for (const auto& row : r.rows) {
    out << join_sizes(row.oval_sizes) << '\t' << row.optional_pairs << '\t' << row.generated
        << '\t' << row.diamond_variant << '\t' << row.co_claw_variant << '\t'
        << row.either_variant << '\n';
  }
  out << "total\t-\t-\t" << r.diamond_total << '\t' << r.co_claw_total << '\t' << r.union_total
      << '\n';
  out << "# variant_sum\t" << r.variant_sum << '\n';
  out << "# union_iso_classes\t" << r.union_iso_classes << '\n';
  out << "# all_survivors_e_positive\t" << bool_word(r.all_survivors_e_positive) << '\n';
  for (const auto& g6 : r.negative_survivors) out << "# negative_survivor\t" << g6 << '\n';
  return out.str();
}

std::string pyramid_json(const std::vector<PyramidRow>& rows) {
  ordered_json j;
  j["schema"] = "csf-pyramid-sweep/1";
  ordered_json table = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json jr;
    jr["sizes"] = std::array<int, 3>{row.p, row.q, row.r};
    jr["e_positive"] = row.e_positive;
    jr["s_positive"] = row.s_positive;
    if (!row.negative_witness.empty()) jr["negative_witness"] = row.negative_witness;
    table.push_back(std::move(jr));
  }
  j["rows"] = std::move(table);
  return dump(j);
}

std::string pyramid_tsv(const std::vector<PyramidRow>& rows) {
  std::ostringstream out;
  out << "p\tq\tr\te_positive\ts_positive\tnegative_witness\n";
  for (const auto& row : rows) {
    out << row.p << '\t' << row.q << '\t' << row.r << '\t' << bool_word(row.e_positive) << '\t'
        << bool_word(row.s_positive) << '\t'
        << (row.negative_witness.empty() ? "-" : row.negative_witness) << '\n';
  }
  return out.str();
}

std::string bound_json(const BoundReport& r) {
  ordered_json j;
  j["schema"] = "csf-bound-check/1";
  ordered_json counts = ordered_json::array();
  for (size_t i = 0; i < r.counts.size(); ++i) {
    counts.push_back(ordered_json{{"n", static_cast<int>(i) + 1}, {"count", r.counts[i]}});
  }
  j["counts"] = std::move(counts);
  j["five_vertex_witnesses"] = r.five_vertex_witnesses;
  j["none_on_six"] = r.none_on_six;
  j["c5_among_witnesses"] = r.c5_among_witnesses;
  return dump(j);
}

std::string bound_tsv(const BoundReport& r) {
  std::ostringstream out;
  out << "n\tcount\n";
  for (size_t i = 0; i < r.counts.size(); ++i) {
    out << (i + 1) << '\t' << r.counts[i] << '\n';
  }
  out << "# none_on_six\t" << bool_word(r.none_on_six) << '\n';
  out << "# c5_among_witnesses\t" << bool_word(r.c5_among_witnesses) << '\n';
  for (const auto& g6 : r.five_vertex_witnesses) out << "# five_vertex_witness\t" << g6 << '\n';
  return out.str();
}

}  // namespace csf
