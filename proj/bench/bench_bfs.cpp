// Serial reference BFS against the OpenMP level-synchronous version.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "chevsk/bfs.hpp"

using namespace chevsk;

namespace {

GenSet unipotents(u64 p, int n) {
  const RingParams r = RingParams::make(p, n);
  const i64 u[] = {1, 1, 0, 1}, l[] = {1, 0, 1, 1};
  return GenSet::make({GroupElement(ModMatrix::from_integers(r, 2, u)), GroupElement(ModMatrix::from_integers(r, 2, l))});
}

template <BfsResult (*Search)(const GenSet&, const BfsOptions&)>
void run(benchmark::State& state) {
  const GenSet s = unipotents(static_cast<u64>(state.range(0)), static_cast<int>(state.range(1)));
  std::size_t size = 0;
  for (auto _ : state) {
    const BfsResult r = Search(s, {});
    size = r.size();
    benchmark::DoNotOptimize(r.keys.data());
  }
  state.counters["elements"] = static_cast<double>(size);
  state.counters["threads"] = omp_get_max_threads();
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * size));
}

void args(benchmark::internal::Benchmark* b) { b->Args({3, 3})->Args({3, 4})->Args({5, 2})->Args({7, 2})->Unit(benchmark::kMillisecond); }

}  // namespace

BENCHMARK(run<bfs_serial>)->Name("bfs_serial")->Apply(args);
BENCHMARK(run<bfs_parallel>)->Name("bfs_parallel")->Apply(args);

BENCHMARK_MAIN();
