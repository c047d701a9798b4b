// Microbenchmarks for the hot paths: root system construction, support
// enumeration, row classification and full table sweeps.

#include <benchmark/benchmark.h>

#include "lieorbit/report.hpp"

using namespace lieorbit;

namespace {

void BM_RootSystemE8(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs({Family::E, 8});
    benchmark::DoNotOptimize(rs.positive_count());
  }
}
BENCHMARK(BM_RootSystemE8);

void BM_EnumerateE8(benchmark::State& state) {
  RootData rd(VoganDiagram({Family::E, 8}, {1}));
  for (auto _ : state) {
    auto sols = enumerate_special(rd);
    benchmark::DoNotOptimize(sols.data());
  }
}
BENCHMARK(BM_EnumerateE8);

void BM_ClassifyE8(benchmark::State& state) {
  RootData rd(VoganDiagram({Family::E, 8}, {1, 6}));
  const auto sols = enumerate_special(rd);
  for (auto _ : state)
    for (const auto& sol : sols) {
      OrbitReport rep = classify(rd, sol);
      benchmark::DoNotOptimize(rep.dims.dim_m);
    }
}
BENCHMARK(BM_ClassifyE8);

// Every painted subset of B6: enumerate and classify, the unit of work the
// sweep budget is stated in.
void BM_PaintedSweepB6(benchmark::State& state) {
  for (auto _ : state) {
    long long rows = 0;
    for (int mask = 1; mask < (1 << 6); ++mask) {
      std::set<int> painted;
      for (int i = 0; i < 6; ++i)
        if (mask & (1 << i)) painted.insert(i + 1);
      RootData rd(VoganDiagram({Family::B, 6}, painted));
      for (const auto& sol : enumerate_special(rd)) {
        classify(rd, sol);
        ++rows;
      }
    }
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_PaintedSweepB6);

void BM_TablesRank4Csv(benchmark::State& state) {
  TableConfig cfg;
  cfg.workers = 1;
  for (auto _ : state) {
    auto results = run_tables(cfg);
    auto text = render(results, cfg);
    benchmark::DoNotOptimize(text.data());
  }
}
BENCHMARK(BM_TablesRank4Csv);

} // namespace

BENCHMARK_MAIN();
