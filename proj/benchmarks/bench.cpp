#include <benchmark/benchmark.h>

#include "domlab/checks.hpp"
#include "domlab/closed_forms.hpp"
#include "domlab/families.hpp"
#include "domlab/io.hpp"
#include "domlab/solve.hpp"

using namespace domlab;

namespace {

SolverConfig wide() {
  SolverConfig cfg = SolverConfig::defaults();
  cfg.element_cap = Graph::kMaxVertices;
  return cfg;
}

void bm_gamma_tm_path(benchmark::State& state) {
  Graph g = make_family(FamilySpec::path(static_cast<int>(state.range(0))));
  SolverConfig cfg = wide();
  for (auto _ : state) benchmark::DoNotOptimize(gamma_tm(g, cfg).value);
}
BENCHMARK(bm_gamma_tm_path)->Arg(10)->Arg(14)->Arg(20);

void bm_gamma_tm_complete(benchmark::State& state) {
  Graph g = make_family(FamilySpec::complete(static_cast<int>(state.range(0))));
  SolverConfig cfg = wide();
  for (auto _ : state) benchmark::DoNotOptimize(gamma_tm(g, cfg).value);
}
BENCHMARK(bm_gamma_tm_complete)->Arg(6)->Arg(8);

void bm_gamma_tm_direct_cycle(benchmark::State& state) {
  Graph g = make_family(FamilySpec::cycle(static_cast<int>(state.range(0))));
  SolverConfig cfg = wide();
  for (auto _ : state) benchmark::DoNotOptimize(gamma_tm_direct(g, cfg).value);
}
BENCHMARK(bm_gamma_tm_direct_cycle)->Arg(7)->Arg(10);

void bm_graph6_roundtrip(benchmark::State& state) {
  Graph g = make_family(FamilySpec::complete(32));
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(encode_graph6(g)).order());
}
BENCHMARK(bm_graph6_roundtrip);

void bm_enumerate_connected(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_connected_graphs(static_cast<int>(state.range(0)), true).size());
}
BENCHMARK(bm_enumerate_connected)->Arg(5)->Arg(6);

void bm_tree_construction(benchmark::State& state) {
  auto trees = enumerate_trees(9);
  for (auto _ : state)
    for (const Graph& t : trees)
      if (t.order() >= 3) benchmark::DoNotOptimize(tree_tmds(t).value);
}
BENCHMARK(bm_tree_construction);

}  // namespace

BENCHMARK_MAIN();
