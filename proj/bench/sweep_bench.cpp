// Serial reference sweep against the OpenMP sweep on the same corpus.
//   grlab_bench --benchmark_filter=Sweep

#include <benchmark/benchmark.h>
#include <omp.h>

#include "grlab/sweep.hpp"

namespace {

grlab::SweepOptions options(int max_frobenius) {
  grlab::SweepOptions opt;
  opt.max_frobenius = max_frobenius;
  opt.random_ideals = 20;
  opt.check_precision = false;
  return opt;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto opt = options(static_cast<int>(state.range(0)));
  const auto corpus = grlab::build_corpus(opt);
  for (auto _ : state) benchmark::DoNotOptimize(grlab::sweep_serial(corpus, opt));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto opt = options(static_cast<int>(state.range(0)));
  const auto corpus = grlab::build_corpus(opt);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(grlab::sweep_parallel(corpus, opt, threads));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.size()));
  state.counters["threads"] = threads;
}

void thread_counts(benchmark::internal::Benchmark* b) {
  for (int f : {6, 9}) {
    for (int t = 1; t <= omp_get_max_threads(); t *= 2) b->Args({f, t});
    if ((omp_get_max_threads() & (omp_get_max_threads() - 1)) != 0) b->Args({f, omp_get_max_threads()});
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Apply(thread_counts)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
