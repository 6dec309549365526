// Serial vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "flagvar/kernels.hpp"

using namespace flagvar;

namespace {

const RootSystem& system_for(int which) {
  static const RootSystem f4({Family::F, 4});
  static const RootSystem b5({Family::B, 5});
  static const RootSystem e6({Family::E, 6});
  switch (which) {
    case 0: return f4;
    case 1: return b5;
    default: return e6;
  }
}

void label(benchmark::State& state, const RootSystem& rs) { state.SetLabel(rs.type().label()); }

void BM_GradedBFS_Serial(benchmark::State& state) {
  const RootSystem& rs = system_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::graded_bfs_serial(rs, NodeSet{}, 10'000'000));
  label(state, rs);
}

void BM_GradedBFS_Parallel(benchmark::State& state) {
  const RootSystem& rs = system_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::graded_bfs_parallel(rs, NodeSet{}, 10'000'000));
  label(state, rs);
}

void BM_Lengths_Serial(benchmark::State& state) {
  const RootSystem& rs = system_for(static_cast<int>(state.range(0)));
  const GradedElements all = kernels::graded_bfs_parallel(rs, NodeSet{}, 10'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lengths_serial(rs, all.elements));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.elements.size()));
  label(state, rs);
}

void BM_Lengths_Parallel(benchmark::State& state) {
  const RootSystem& rs = system_for(static_cast<int>(state.range(0)));
  const GradedElements all = kernels::graded_bfs_parallel(rs, NodeSet{}, 10'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lengths_parallel(rs, all.elements));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.elements.size()));
  label(state, rs);
}

}  // namespace

BENCHMARK(BM_GradedBFS_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GradedBFS_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lengths_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lengths_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
