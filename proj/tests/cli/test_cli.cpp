// End-to-end tests of the csfkit executable: spec'd output values, formats,
// exit codes, determinism, and the verify-paper line protocol.  The binary
// path arrives via CSFKIT_CLI_PATH from the build system.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_shell(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  int status = pclose(pipe);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  result.exit_code = WEXITSTATUS(status);
  return result;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(CSFKIT_CLI_PATH) + " " + args + " 2>/dev/null");
}

// Feeds `content` on stdin through a temporary file, avoiding any shell
// quoting of graph6 bytes.
RunResult run_cli_stdin(const std::string& content, const std::string& args) {
  std::string path = "/tmp/csfkit_cli_test_input.txt";
  {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    REQUIRE(file.good());
    file << content;
  }
  return run_shell(std::string(CSFKIT_CLI_PATH) + " " + args + " 2>/dev/null < " + path);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool has_line(const std::vector<std::string>& lines, const std::string& wanted) {
  for (const auto& line : lines) {
    if (line == wanted) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("compute on named graphs emits the documented expansions") {
  RunResult claw = run_cli("compute --name claw");
  CHECK(claw.exit_code == 0);
  ordered_json j = ordered_json::parse(claw.out);
  CHECK(j["schema"] == "csf-report/1");
  CHECK(j["graph_id"] == "CF");
  CHECK(j["n"] == 4);
  CHECK(j["m"] == 3);
  CHECK(j["alpha"] == 3);
  CHECK(j["e_expansion"] == "e[2,1,1] - 2e[2,2] + 5e[3,1] + 4e[4]");
  CHECK(j["s_expansion"] == "8s[1,1,1,1] + 5s[2,1,1] - s[2,2] + s[3,1]");
  CHECK(j["e_positive"] == false);
  CHECK(j["s_positive"] == false);
  CHECK(j["freeness"]["claw"] == false);
  CHECK_FALSE(j.contains("timings"));

  RunResult k5 = run_cli("compute --name complete:5");
  CHECK(k5.exit_code == 0);
  ordered_json jk = ordered_json::parse(k5.out);
  CHECK(jk["e_expansion"] == "120e[5]");
  CHECK(jk["e_positive"] == true);
  CHECK(jk["s_positive"] == true);

  RunResult p1 = run_cli("compute --name path:1");
  CHECK(p1.exit_code == 0);
  CHECK(ordered_json::parse(p1.out)["e_expansion"] == "e[1]");
}

TEST_CASE("compute format and timing flags") {
  RunResult timed = run_cli("compute --name claw --timings");
  CHECK(timed.exit_code == 0);
  ordered_json j = ordered_json::parse(timed.out);
  REQUIRE(j.contains("timings"));
  CHECK(j["timings"]["total_us"].get<long long>() >= 0);

  RunResult tsv = run_cli("compute --name claw --tsv");
  CHECK(tsv.exit_code == 0);
  auto lines = split_lines(tsv.out);
  REQUIRE(lines.size() == 2);
  auto header = split_tabs(lines[0]);
  auto row = split_tabs(lines[1]);
  CHECK(header.size() == 19);
  CHECK(row.size() == 19);
  CHECK(header[0] == "graph_id");
  CHECK(row[0] == "CF");
  CHECK(row[1] == "4");
  CHECK(row[2] == "3");

  RunResult tsv_timed = run_cli("compute --name claw --tsv --timings");
  auto timed_lines = split_lines(tsv_timed.out);
  REQUIRE(timed_lines.size() == 2);
  CHECK(split_tabs(timed_lines[0]).size() == 22);
  CHECK(split_tabs(timed_lines[1]).size() == 22);
}

TEST_CASE("identical invocations produce byte-identical output") {
  for (const char* args :
       {"compute --name claw", "enumerate -n 5", "pyramid-sweep --max-vertices 7 --tsv"}) {
    CAPTURE(args);
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("graph input arrives via stdin, files, and edge lists") {
  // K3 in graph6 on stdin; its canonical form is itself.
  RunResult k3 = run_cli_stdin("Bw\n", "compute --input - --tsv");
  CHECK(k3.exit_code == 0);
  auto lines = split_lines(k3.out);
  REQUIRE(lines.size() == 2);
  auto row = split_tabs(lines[1]);
  CHECK(row[0] == "Bw");
  CHECK(row[1] == "3");
  CHECK(row[2] == "3");
  CHECK(row[17] == "true");  // e_positive: X = 6e[3]

  // Two graphs, limited to the first.
  RunResult limited = run_cli_stdin("Bw\nA_\n", "compute --input - --tsv --limit 1");
  CHECK(limited.exit_code == 0);
  CHECK(split_lines(limited.out).size() == 2);

  // An edge list names vertices 0..n-1 directly.
  RunResult edges = run_cli_stdin("0 1\n1 2\n", "compute --input - --format edges --tsv");
  CHECK(edges.exit_code == 0);
  auto edge_lines = split_lines(edges.out);
  REQUIRE(edge_lines.size() == 2);
  auto edge_row = split_tabs(edge_lines[1]);
  CHECK(edge_row[1] == "3");
  CHECK(edge_row[2] == "2");
}

TEST_CASE("input problems exit with the parse-error code") {
  CHECK(run_cli("compute --input /nonexistent/graphs.g6").exit_code == 3);
  CHECK(run_cli("compute --name nosuchgraph").exit_code == 3);
  CHECK(run_cli_stdin("B~\n", "compute --input -").exit_code == 3);   // bad padding
  CHECK(run_cli_stdin("0 1\nbogus\n", "compute --input - --format edges").exit_code == 3);
}

TEST_CASE("usage problems exit with the usage code") {
  CHECK(run_cli("").exit_code == 2);                                  // no subcommand
  CHECK(run_cli("frobnicate").exit_code == 2);                        // unknown subcommand
  CHECK(run_cli("compute").exit_code == 2);                           // no input source
  CHECK(run_cli("compute --name claw --json --tsv").exit_code == 2);  // exclusive flags
  CHECK(run_cli("compute --name claw --algorithm magic").exit_code == 2);
  CHECK(run_cli("compute --name claw --frobnicate").exit_code == 2);  // unknown flag
  CHECK(run_cli("survey").exit_code == 2);                            // missing size
  CHECK(run_cli("survey -n 13").exit_code == 2);                      // out of range
  CHECK(run_cli("enumerate -n 10").exit_code == 2);                   // needs --allow-large
  CHECK(run_cli("free-check --name claw --free bogus").exit_code == 2);
  CHECK(run_cli("pyramid-sweep --max-vertices 4").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("free-check lists verdicts per kind") {
  RunResult all = run_cli("free-check --name paw");
  CHECK(all.exit_code == 0);
  ordered_json j = ordered_json::parse(all.out);
  CHECK(j["schema"] == "csf-freeness/1");
  CHECK(j["checks"].size() == 11);

  RunResult two = run_cli("free-check --name claw --tsv --free claw,K4");
  CHECK(two.exit_code == 0);
  auto lines = split_lines(two.out);
  REQUIRE(lines.size() == 3);  // header + K4 + claw (fixed kind order)
  auto k4_row = split_tabs(lines[1]);
  auto claw_row = split_tabs(lines[2]);
  CHECK(k4_row[1] == "K4");
  CHECK(k4_row[2] == "true");
  CHECK(k4_row[3] == "-");
  CHECK(claw_row[1] == "claw");
  CHECK(claw_row[2] == "false");
  CHECK(claw_row[3] == "0,1,2,3");
}

TEST_CASE("survey sweeps a filtered class and summarizes positivity") {
  RunResult tsv = run_cli("survey -n 5 --free claw,paw --tsv");
  CHECK(tsv.exit_code == 0);
  auto lines = split_lines(tsv.out);
  REQUIRE(lines.size() > 4);
  CHECK(lines[0] == "graph6\tn\tm\talpha\te_positive\ts_positive\tnegative_witness");
  CHECK(has_line(lines, "# not_e_positive\t0"));  // the sweep finds no exceptions

  RunResult json = run_cli("survey -n 4 --json");
  CHECK(json.exit_code == 0);
  ordered_json j = ordered_json::parse(json.out);
  CHECK(j["schema"] == "csf-survey/1");
  CHECK(j["rows"].size() == 18);  // 1 + 2 + 4 + 11 classes on sizes 1..4
  CHECK(j["summary"]["total"] == 18);
  CHECK(j["summary"]["e_positive"].get<long long>() +
            j["summary"]["not_e_positive"].get<long long>() ==
        18);
  CHECK(j["summary"]["truncated"] == false);

  // Worker threads must not change the output bytes.
  RunResult serial = run_cli("survey -n 4 --tsv");
  RunResult parallel = run_cli("survey -n 4 --tsv --threads 3");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("enumerate emits one canonical graph6 line per class") {
  RunResult plain = run_cli("enumerate -n 4");
  CHECK(plain.exit_code == 0);
  CHECK(split_lines(plain.out).size() == 11);

  RunResult filtered = run_cli("enumerate -n 4 --free claw");
  CHECK(filtered.exit_code == 0);
  CHECK(split_lines(filtered.out).size() == 10);  // all four-vertex classes but the claw

  RunResult json = run_cli("enumerate -n 4 --json");
  CHECK(json.exit_code == 0);
  ordered_json j = ordered_json::parse(json.out);
  CHECK(j["schema"] == "csf-enumerate/1");
  CHECK(j["count"] == 11);
  CHECK(j["graphs"].size() == 11);
  CHECK(j["truncated"] == false);

  RunResult tsv = run_cli("enumerate -n 4 --tsv");
  CHECK(tsv.exit_code == 0);
  auto lines = split_lines(tsv.out);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "n\tm\tgraph6");

  RunResult limited = run_cli("enumerate -n 5 --limit 3");
  CHECK(limited.exit_code == 0);
  CHECK(split_lines(limited.out).size() == 3);
}

TEST_CASE("case-check reproduces the oval-configuration census") {
  RunResult tsv = run_cli("case-check --tsv");
  CHECK(tsv.exit_code == 0);
  auto lines = split_lines(tsv.out);
  REQUIRE(lines.size() == 12);  // header + 7 cases + total + 3 summary keys
  CHECK(lines[0] ==
        "oval_sizes\toptional_pairs\tgenerated\tdiamond_variant\tco_claw_variant\teither_variant");
  CHECK(lines[8] == "total\t-\t-\t25\t21\t26");
  CHECK(lines[9] == "# variant_sum\t46");
  CHECK(lines[10] == "# union_iso_classes\t10");
  CHECK(lines[11] == "# all_survivors_e_positive\ttrue");

  RunResult json = run_cli("case-check");
  CHECK(json.exit_code == 0);
  ordered_json j = ordered_json::parse(json.out);
  CHECK(j["schema"] == "csf-case-check/1");
  CHECK(j["rows"].size() == 7);
  CHECK(j["union_total"] == 26);
  CHECK(j["variant_sum"] == 46);
  CHECK(j["union_iso_classes"] == 10);
  CHECK(j["all_survivors_e_positive"] == true);
  CHECK_FALSE(j.contains("elapsed_ms"));
}

TEST_CASE("pyramid-sweep and bound-check emit their tables") {
  RunResult pyramids = run_cli("pyramid-sweep --max-vertices 8 --tsv");
  CHECK(pyramids.exit_code == 0);
  auto lines = split_lines(pyramids.out);
  REQUIRE(lines.size() == 11);  // header + ten size triples with at most 8 vertices
  CHECK(lines[0] == "p\tq\tr\te_positive\ts_positive\tnegative_witness");
  CHECK(split_tabs(lines[1])[0] == "1");

  RunResult bound = run_cli("bound-check --tsv");
  CHECK(bound.exit_code == 0);
  auto bound_lines = split_lines(bound.out);
  REQUIRE(bound_lines.size() == 10);
  CHECK(bound_lines[0] == "n\tcount");
  CHECK(bound_lines[1] == "1\t1");
  CHECK(bound_lines[2] == "2\t2");
  CHECK(bound_lines[3] == "3\t2");
  CHECK(bound_lines[4] == "4\t3");
  CHECK(bound_lines[5] == "5\t1");
  CHECK(bound_lines[6] == "6\t0");
  CHECK(bound_lines[7] == "# none_on_six\ttrue");
  CHECK(bound_lines[8] == "# c5_among_witnesses\ttrue");
  CHECK(bound_lines[9] == "# five_vertex_witness\tDLo");
}

TEST_CASE("verify-paper prints one line per battery item and a result line") {
  RunResult r = run_cli("verify-paper");
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 13);

  const std::regex item_pattern(R"(^\[ ?\d{1,2}/12\] (pass|FAIL|info)  .+$)");
  for (int i = 0; i < 12; ++i) {
    CAPTURE(lines[static_cast<size_t>(i)]);
    CHECK(std::regex_match(lines[static_cast<size_t>(i)], item_pattern));
    // Items run in order.
    const std::string id_field = lines[static_cast<size_t>(i)].substr(1, 2);
    CHECK(std::stoi(id_field) == i + 1);
  }
  // The last item is the exploratory open-question sweep.
  CHECK(lines[11].find("info") != std::string::npos);

  const std::string& verdict = lines[12];
  REQUIRE(verdict.rfind("result: ", 0) == 0);
  const bool reported_pass = verdict.rfind("result: pass", 0) == 0;
  CHECK(r.exit_code == (reported_pass ? 0 : 1));
  CHECK(verdict.find("anchored items passed") != std::string::npos);
  CHECK(verdict.find("1 exploratory reported") != std::string::npos);

  // The default output is byte-reproducible.
  RunResult again = run_cli("verify-paper");
  CHECK(again.out == r.out);
  CHECK(again.exit_code == r.exit_code);
}
