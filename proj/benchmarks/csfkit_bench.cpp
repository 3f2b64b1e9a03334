// Microbenchmarks for the hot paths: canonicalization, enumeration, the
// three X_G algorithms, and the basis-change pipeline.  Global transition
// caches are cleared inside timed loops so every iteration measures a cold
// computation.

#include <random>

#include <benchmark/benchmark.h>

#include "csf/canonical.hpp"
#include "csf/chromatic.hpp"
#include "csf/enumerate.hpp"
#include "csf/four_vertex.hpp"
#include "csf/graph.hpp"
#include "csf/named_graphs.hpp"
#include "csf/transitions.hpp"

namespace {

csf::Graph random_graph(int n, uint32_t seed, double density = 0.5) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  csf::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_CanonicalForm(benchmark::State& state) {
  const csf::Graph g = random_graph(static_cast<int>(state.range(0)), 7u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf::canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_EnumerateClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf::enumerate_graphs(n));
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateClawFree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  csf::EnumerateOptions options;
  options.hereditary_filter = [](const csf::Graph& g) {
    return csf::is_h_free(g, csf::KindSet{csf::FourVertexKind::claw});
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf::enumerate_graphs(n, options));
  }
}
BENCHMARK(BM_EnumerateClawFree)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CsfStablePartitions(benchmark::State& state) {
  const csf::Graph g = random_graph(static_cast<int>(state.range(0)), 11u, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf::csf_stable_partitions(g));
  }
}
BENCHMARK(BM_CsfStablePartitions)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_CsfEdgeSubsets(benchmark::State& state) {
  const csf::Graph g = csf::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf::csf_edge_subsets(g));
  }
}
BENCHMARK(BM_CsfEdgeSubsets)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CsfDeletionContraction(benchmark::State& state) {
  const csf::Graph g = csf::path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf::csf_deletion_contraction(g));
  }
}
BENCHMARK(BM_CsfDeletionContraction)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

// Basis changes, measured cold: the monomial input is prepared once, the
// shared expansion caches are rebuilt every iteration.
void BM_ExpandInE(benchmark::State& state) {
  const csf::SymPoly m =
      csf::to_monomial_basis(csf::csf_deletion_contraction(csf::path_graph(
          static_cast<int>(state.range(0)))));
  for (auto _ : state) {
    csf::clear_transition_caches();
    benchmark::DoNotOptimize(csf::expand_in_e(m));
  }
}
BENCHMARK(BM_ExpandInE)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ExpandInS(benchmark::State& state) {
  const csf::SymPoly m =
      csf::to_monomial_basis(csf::csf_deletion_contraction(csf::path_graph(
          static_cast<int>(state.range(0)))));
  for (auto _ : state) {
    csf::clear_transition_caches();
    benchmark::DoNotOptimize(csf::expand_in_s(m));
  }
}
BENCHMARK(BM_ExpandInS)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

// The Kostka-row engine behind Schur expansion, on a staircase shape.
void BM_KostkaRow(benchmark::State& state) {
  const int top = static_cast<int>(state.range(0));
  std::vector<int> parts;
  for (int p = top; p >= 1; --p) parts.push_back(p);
  const csf::Partition lambda(std::move(parts));
  for (auto _ : state) {
    csf::clear_transition_caches();
    benchmark::DoNotOptimize(csf::kostka_row(lambda));
  }
}
BENCHMARK(BM_KostkaRow)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
