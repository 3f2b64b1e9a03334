#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csf/chromatic.hpp"
#include "csf/families.hpp"
#include "csf/four_vertex.hpp"
#include "csf/graph.hpp"

namespace csf {

// Wall-clock stage breakdown for one report.  Timings vary run to run, so the
// serializers emit them only when asked; everything else is deterministic.
struct StageTimings {
  std::chrono::microseconds csf{0};       // chromatic symmetric function + expansions
  std::chrono::microseconds freeness{0};  // four-vertex subgraph classification
  std::chrono::microseconds total{0};
};

// Full analysis record for one graph (JSON schema "csf-report/1").
struct Report {
  // graph6 line of the canonical form when the order allows canonicalization
  // (<= 16 vertices); the input labeling otherwise.
  std::string graph_id;
  int n = 0;
  int m = 0;
  int alpha = 0;  // independence number
  // kind name -> true when the graph has no induced copy; all eleven
  // four-vertex kinds, in the fixed enum order.
  std::vector<std::pair<std::string, bool>> freeness;
  std::string e_expansion;  // rendered elementary expansion of X_G
  std::string s_expansion;  // rendered Schur expansion of X_G
  bool e_positive = false;
  bool s_positive = false;
  CsfAlgorithm algorithm_used = CsfAlgorithm::automatic;
  StageTimings timings;
};

// Computes X_G, both expansions, the independence number and the freeness map.
Report make_report(const Graph& g, const CsfOptions& options = {});

// The identifier used in reports: graph6 of the canonical form when the
// order permits canonicalization (<= 16), graph6 of the input otherwise.
std::string report_graph_id(const Graph& g);

// One classification line per requested kind, with an induced witness when
// the graph is not free of it.
struct FreenessCheck {
  FourVertexKind kind;
  bool free = false;
  std::optional<std::array<int, 4>> witness;
};

std::vector<FreenessCheck> check_freeness(const Graph& g, KindSet kinds);

// --- serialization ------------------------------------------------------
//
// Every *_json function returns a pretty-printed JSON document (trailing
// newline included); every *_tsv function returns tab-separated lines with a
// leading header row.  Field order is fixed for byte-reproducible output.

std::string report_json(const Report& r, bool include_timings);
// Header and row split out so several reports can share one table.
std::string report_tsv_header(bool include_timings);
std::string report_tsv_row(const Report& r, bool include_timings);
std::string report_tsv(const Report& r, bool include_timings);

std::string freeness_json(const Graph& g, const std::vector<FreenessCheck>& checks);
std::string freeness_tsv_header();
std::string freeness_tsv_rows(const std::string& graph_id,
                              const std::vector<FreenessCheck>& checks);

std::string case_check_json(const CaseCheckReport& r, bool include_timings);
std::string case_check_tsv(const CaseCheckReport& r);

std::string pyramid_json(const std::vector<PyramidRow>& rows);
std::string pyramid_tsv(const std::vector<PyramidRow>& rows);

std::string bound_json(const BoundReport& r);
std::string bound_tsv(const BoundReport& r);

}  // namespace csf
