// csfkit: batch command-line front end for the chromatic-symmetric-function
// library.  Subcommands analyze single graphs, sweep enumerated graph
// classes, and run the reproduction battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
// parse error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "csf/battery.hpp"
#include "csf/canonical.hpp"
#include "csf/chromatic.hpp"
#include "csf/enumerate.hpp"
#include "csf/families.hpp"
#include "csf/four_vertex.hpp"
#include "csf/graph.hpp"
#include "csf/graph6.hpp"
#include "csf/named_graphs.hpp"
#include "csf/report.hpp"
#include "csf/sympoly.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using csf::Graph;
using ordered_json = nlohmann::ordered_json;

// Flag-vocabulary problems that CLI11 cannot catch itself (they surface while
// interpreting option values); mapped to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutFormat { json, tsv };

struct InputOpts {
  std::string input;   // file path, or "-" for stdin
  std::string format = "graph6";
  std::string name;    // named graph, alternative to --input
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw csf::ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::vector<Graph> load_graphs(const InputOpts& in, long long limit) {
  std::vector<Graph> graphs;
  if (!in.name.empty()) {
    graphs.push_back(csf::named_graph(in.name));
  } else if (in.format == "edges") {
    graphs.push_back(csf::parse_edge_list(read_all(in.input)));
  } else {
    graphs = csf::read_graph6(read_all(in.input));
  }
  if (limit > 0 && static_cast<long long>(graphs.size()) > limit) {
    graphs.resize(static_cast<size_t>(limit));
  }
  return graphs;
}

csf::KindSet parse_kinds(const std::string& list) {
  try {
    return csf::KindSet::parse(list);
  } catch (const csf::ParseError& e) {
    throw UsageError(e.what());
  }
}

// ------------------------------------------------------------------ compute

struct ComputeOpts {
  InputOpts in;
  OutFormat out = OutFormat::json;
  long long limit = 0;
  std::string algorithm = "auto";
  bool cross_check = false;
  bool timings = false;
};

int run_compute(const ComputeOpts& o) {
  csf::CsfOptions options;
  options.algorithm = csf::algorithm_from_name(o.algorithm);
  options.cross_check = o.cross_check;
  const auto graphs = load_graphs(o.in, o.limit);
  if (o.out == OutFormat::tsv) std::cout << csf::report_tsv_header(o.timings);
  for (const Graph& g : graphs) {
    const csf::Report report = csf::make_report(g, options);
    if (o.out == OutFormat::tsv) {
      std::cout << csf::report_tsv_row(report, o.timings);
    } else {
      std::cout << csf::report_json(report, o.timings);
    }
  }
  return 0;
}

// --------------------------------------------------------------- free-check

struct FreeCheckOpts {
  InputOpts in;
  OutFormat out = OutFormat::json;
  long long limit = 0;
  std::string kinds;  // empty = all eleven
};

int run_free_check(const FreeCheckOpts& o) {
  csf::KindSet kinds;
  if (o.kinds.empty()) {
    for (csf::FourVertexKind kind : csf::all_four_vertex_kinds) kinds.insert(kind);
  } else {
    kinds = parse_kinds(o.kinds);
  }
  const auto graphs = load_graphs(o.in, o.limit);
  if (o.out == OutFormat::tsv) std::cout << csf::freeness_tsv_header();
  for (const Graph& g : graphs) {
    const auto checks = csf::check_freeness(g, kinds);
    if (o.out == OutFormat::tsv) {
      std::cout << csf::freeness_tsv_rows(csf::report_graph_id(g), checks);
    } else {
      std::cout << csf::freeness_json(g, checks);
    }
  }
  return 0;
}

// ------------------------------------------------------------------- survey

struct SurveyOpts {
  int size = 0;
  std::string kinds;  // freeness filter, empty = no filter
  OutFormat out = OutFormat::tsv;
  long long limit = 0;
  int threads = 1;
  bool allow_large = false;
};

struct SurveyRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  int alpha = 0;
  bool e_positive = false;
  bool s_positive = false;
  std::string witness;  // most negative e-term, empty when e-positive
};

SurveyRow survey_row(const Graph& g) {
  SurveyRow row;
  row.graph6 = csf::graph6_encode(g);
  row.n = g.order();
  row.m = g.edge_count();
  row.alpha = g.independence_number();
  const csf::CsfResult r = csf::compute_csf(g);
  row.e_positive = csf::is_positive(r.elementary);
  row.s_positive = csf::is_positive(r.schur);
  if (!row.e_positive) {
    const auto w = csf::negative_witness(r.elementary);
    row.witness = "e[" + w->part.str() + "]: " + w->coeff.str();
  }
  return row;
}

int run_survey(const SurveyOpts& o) {
  csf::EnumerateOptions opt;
  opt.allow_large = o.allow_large;
  if (!o.kinds.empty()) {
    const csf::KindSet kinds = parse_kinds(o.kinds);
    opt.hereditary_filter = [kinds](const Graph& g) { return csf::is_h_free(g, kinds); };
  }

  std::vector<Graph> graphs;
  for (const auto& level : csf::enumerate_levels(o.size, opt)) {
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  bool truncated = false;
  if (o.limit > 0 && static_cast<long long>(graphs.size()) > o.limit) {
    graphs.resize(static_cast<size_t>(o.limit));
    truncated = true;
  }

  // Verdicts may be computed in parallel; rows keep enumeration order.
  std::vector<SurveyRow> rows(graphs.size());
  const int workers = std::max(1, std::min(o.threads, 64));
  if (workers == 1) {
    for (size_t i = 0; i < graphs.size(); ++i) rows[i] = survey_row(graphs[i]);
  } else {
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (size_t i; (i = next.fetch_add(1)) < graphs.size();) {
        rows[i] = survey_row(graphs[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  long long positive = 0;
  for (const auto& row : rows) positive += row.e_positive ? 1 : 0;
  const long long negative = static_cast<long long>(rows.size()) - positive;

  if (o.out == OutFormat::tsv) {
    std::cout << "graph6\tn\tm\talpha\te_positive\ts_positive\tnegative_witness\n";
    for (const auto& row : rows) {
      std::cout << row.graph6 << '\t' << row.n << '\t' << row.m << '\t' << row.alpha << '\t'
                << (row.e_positive ? "true" : "false") << '\t'
                << (row.s_positive ? "true" : "false") << '\t'
                << (row.witness.empty() ? "-" : row.witness) << '\n';
    }
    std::cout << "# total\t" << rows.size() << '\n';
    std::cout << "# e_positive\t" << positive << '\n';
    std::cout << "# not_e_positive\t" << negative << '\n';
    if (truncated) std::cout << "# truncated\ttrue\n";
  } else {
    ordered_json j;
    j["schema"] = "csf-survey/1";
    j["size"] = o.size;
    j["freeness"] = o.kinds;
    ordered_json table = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json jr;
      jr["graph6"] = row.graph6;
      jr["n"] = row.n;
      jr["m"] = row.m;
      jr["alpha"] = row.alpha;
      jr["e_positive"] = row.e_positive;
      jr["s_positive"] = row.s_positive;
      if (!row.witness.empty()) jr["negative_witness"] = row.witness;
      table.push_back(std::move(jr));
    }
    j["rows"] = std::move(table);
    j["summary"] = ordered_json{{"total", rows.size()},
                                {"e_positive", positive},
                                {"not_e_positive", negative},
                                {"truncated", truncated}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOpts {
  int size = 0;
  std::string kinds;
  long long limit = 0;
  bool allow_large = false;
  bool json = false;
  bool tsv = false;
};

int run_enumerate(const EnumerateOpts& o) {
  csf::EnumerateOptions opt;
  opt.allow_large = o.allow_large;
  if (!o.kinds.empty()) {
    const csf::KindSet kinds = parse_kinds(o.kinds);
    opt.hereditary_filter = [kinds](const Graph& g) { return csf::is_h_free(g, kinds); };
  }
  auto graphs = csf::enumerate_graphs(o.size, opt);
  bool truncated = false;
  if (o.limit > 0 && static_cast<long long>(graphs.size()) > o.limit) {
    graphs.resize(static_cast<size_t>(o.limit));
    truncated = true;
  }
  if (o.json) {
    ordered_json j;
    j["schema"] = "csf-enumerate/1";
    j["size"] = o.size;
    j["freeness"] = o.kinds;
    ordered_json lines = ordered_json::array();
    for (const Graph& g : graphs) lines.push_back(csf::graph6_encode(g));
    j["graphs"] = std::move(lines);
    j["count"] = graphs.size();
    j["truncated"] = truncated;
    std::cout << j.dump(2) << "\n";
  } else if (o.tsv) {
    std::cout << "n\tm\tgraph6\n";
    for (const Graph& g : graphs) {
      std::cout << g.order() << '\t' << g.edge_count() << '\t' << csf::graph6_encode(g) << '\n';
    }
    if (truncated) std::cout << "# truncated\ttrue\n";
  } else {
    std::cout << csf::write_graph6(graphs);
  }
  return 0;
}

// -------------------------------------------------- families-module wrappers

int run_case_check(OutFormat out, bool timings) {
  const csf::CaseCheckReport report = csf::run_case_check();
  if (out == OutFormat::tsv) {
    std::cout << csf::case_check_tsv(report);
  } else {
    std::cout << csf::case_check_json(report, timings);
  }
  return 0;
}

int run_pyramid_sweep(int max_vertices, OutFormat out) {
  const auto rows = csf::pyramid_sweep(max_vertices);
  if (out == OutFormat::tsv) {
    std::cout << csf::pyramid_tsv(rows);
  } else {
    std::cout << csf::pyramid_json(rows);
  }
  return 0;
}

int run_bound_check(OutFormat out) {
  const csf::BoundReport report = csf::k4_oval_bound_check();
  if (out == OutFormat::tsv) {
    std::cout << csf::bound_tsv(report);
  } else {
    std::cout << csf::bound_json(report);
  }
  return 0;
}

// ------------------------------------------------------------- verify-paper

int run_verify(bool timings) {
  csf::BatteryResult result;
  if (timings) {
    result = csf::run_battery(&std::cout);
  } else {
    result = csf::run_battery(nullptr);
    for (const auto& item : result.items) {
      std::cout << csf::battery_line(item, static_cast<int>(result.items.size()), false)
                << "\n";
    }
  }
  int anchored = 0, anchored_passed = 0, exploratory = 0;
  for (const auto& item : result.items) {
    if (item.exploratory) {
      ++exploratory;
    } else {
      ++anchored;
      anchored_passed += item.passed ? 1 : 0;
    }
  }
  std::cout << "result: " << (result.all_passed ? "pass" : "FAIL") << " (" << anchored_passed
            << "/" << anchored << " anchored items passed, " << exploratory
            << " exploratory reported)\n";
  return result.all_passed ? 0 : 1;
}

void add_input_options(CLI::App* cmd, InputOpts& in) {
  auto* source = cmd->add_option_group("input source");
  source->add_option("--input", in.input,
                     "input file ('-' for stdin); contents per --format");
  source->add_option("--name", in.name,
                     "named graph (see 'named graphs' in the README): " +
                         csf::named_graph_vocabulary());
  source->require_option(1);
  cmd->add_option("--format", in.format, "input file format")
      ->check(CLI::IsMember({"graph6", "edges"}))
      ->capture_default_str();
}

void add_format_flags(CLI::App* cmd, bool& json, bool& tsv) {
  auto* json_flag = cmd->add_flag("--json", json, "JSON output");
  auto* tsv_flag = cmd->add_flag("--tsv", tsv, "TSV output");
  json_flag->excludes(tsv_flag);
  tsv_flag->excludes(json_flag);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic symmetric functions of graphs: exact expansions, "
               "positivity checks, and structure sweeps"};
  app.require_subcommand(1);

  ComputeOpts compute_opts;
  bool compute_json = false, compute_tsv = false;
  auto* compute_cmd =
      app.add_subcommand("compute", "expand X_G in the e and Schur bases (JSON by default)");
  add_input_options(compute_cmd, compute_opts.in);
  add_format_flags(compute_cmd, compute_json, compute_tsv);
  compute_cmd->add_option("--limit", compute_opts.limit, "process at most N input graphs");
  compute_cmd->add_option("--algorithm", compute_opts.algorithm, "X_G algorithm")
      ->check(CLI::IsMember(
          {"auto", "stable-partitions", "edge-subsets", "deletion-contraction"}))
      ->capture_default_str();
  compute_cmd->add_flag("--cross-check", compute_opts.cross_check,
                        "recompute with a second algorithm and compare");
  compute_cmd->add_flag("--timings", compute_opts.timings, "include wall times in the output");

  FreeCheckOpts free_opts;
  bool free_json = false, free_tsv = false;
  auto* free_cmd = app.add_subcommand(
      "free-check", "test for induced four-vertex subgraphs (JSON by default)");
  add_input_options(free_cmd, free_opts.in);
  add_format_flags(free_cmd, free_json, free_tsv);
  free_cmd->add_option("--free", free_opts.kinds,
                       "comma-separated four-vertex kinds (default: all eleven)");
  free_cmd->add_option("--limit", free_opts.limit, "process at most N input graphs");

  SurveyOpts survey_opts;
  bool survey_json = false, survey_tsv = false;
  auto* survey_cmd = app.add_subcommand(
      "survey", "e-positivity verdicts over all graph classes up to a size (TSV by default)");
  survey_cmd->add_option("-n,--size", survey_opts.size, "maximum vertex count")
      ->required()
      ->check(CLI::Range(1, 12));
  survey_cmd->add_option("--free", survey_opts.kinds,
                         "restrict to graphs free of these four-vertex kinds");
  add_format_flags(survey_cmd, survey_json, survey_tsv);
  survey_cmd->add_option("--limit", survey_opts.limit, "emit at most N rows");
  survey_cmd->add_option("--threads", survey_opts.threads, "worker threads for the verdicts")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  survey_cmd->add_flag("--allow-large", survey_opts.allow_large,
                       "permit sizes 10..12 (enumeration grows quickly)");

  EnumerateOpts enum_opts;
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "isomorphism-class representatives of one size (graph6 lines by default)");
  enum_cmd->add_option("-n,--size", enum_opts.size, "vertex count")
      ->required()
      ->check(CLI::Range(1, 12));
  enum_cmd->add_option("--free", enum_opts.kinds,
                       "restrict to graphs free of these four-vertex kinds");
  add_format_flags(enum_cmd, enum_opts.json, enum_opts.tsv);
  enum_cmd->add_option("--limit", enum_opts.limit, "emit at most N graphs");
  enum_cmd->add_flag("--allow-large", enum_opts.allow_large,
                     "permit sizes 10..12 (enumeration grows quickly)");

  bool case_json = false, case_tsv = false, case_timings = false;
  auto* case_cmd = app.add_subcommand(
      "case-check", "census of the seven oval configuration cases (JSON by default)");
  add_format_flags(case_cmd, case_json, case_tsv);
  case_cmd->add_flag("--timings", case_timings, "include wall times in the output");

  int pyramid_max = 12;
  bool pyramid_json_f = false, pyramid_tsv_f = false;
  auto* pyramid_cmd = app.add_subcommand(
      "pyramid-sweep", "positivity of generalized pyramids by size (JSON by default)");
  pyramid_cmd->add_option("--max-vertices", pyramid_max, "largest total vertex count")
      ->check(CLI::Range(5, 14))
      ->capture_default_str();
  add_format_flags(pyramid_cmd, pyramid_json_f, pyramid_tsv_f);

  bool bound_json_f = false, bound_tsv_f = false;
  auto* bound_cmd = app.add_subcommand(
      "bound-check",
      "census of graphs with no triangle and no stable triple (JSON by default)");
  add_format_flags(bound_cmd, bound_json_f, bound_tsv_f);

  bool verify_timings = false;
  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "run the reproduction battery; exit 0 only if every anchored item passes");
  verify_cmd->add_flag("--timings", verify_timings,
                       "stream items as they finish, with wall times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(compute_cmd)) {
      compute_opts.out = compute_tsv ? OutFormat::tsv : OutFormat::json;
      return run_compute(compute_opts);
    }
    if (app.got_subcommand(free_cmd)) {
      free_opts.out = free_tsv ? OutFormat::tsv : OutFormat::json;
      return run_free_check(free_opts);
    }
    if (app.got_subcommand(survey_cmd)) {
      survey_opts.out = survey_json ? OutFormat::json : OutFormat::tsv;
      return run_survey(survey_opts);
    }
    if (app.got_subcommand(enum_cmd)) return run_enumerate(enum_opts);
    if (app.got_subcommand(case_cmd)) {
      return run_case_check(case_tsv ? OutFormat::tsv : OutFormat::json, case_timings);
    }
    if (app.got_subcommand(pyramid_cmd)) {
      return run_pyramid_sweep(pyramid_max, pyramid_tsv_f ? OutFormat::tsv : OutFormat::json);
    }
    if (app.got_subcommand(bound_cmd)) {
      return run_bound_check(bound_tsv_f ? OutFormat::tsv : OutFormat::json);
    }
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_timings);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const csf::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
