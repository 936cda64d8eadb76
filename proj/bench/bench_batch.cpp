// Serial vs OpenMP batch evaluation, one benchmark per branch of the dispatcher.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "clausen/batch.hpp"

namespace {

std::vector<double> grid(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  std::vector<double> xs(n);
  for (double& x : xs) x = dist(rng);
  return xs;
}

template <auto Kernel>
void run(benchmark::State& state, clausen::Kind kind, int order) {
  const auto xs = grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(xs.size());
  for (auto _ : state) {
    Kernel(kind, order, xs, out);
    benchmark::DoNotOptimize(out.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Serial(benchmark::State& s, clausen::Kind k, int j) { run<clausen::evaluate_batch_serial>(s, k, j); }
void BM_OpenMP(benchmark::State& s, clausen::Kind k, int j) { run<clausen::evaluate_batch>(s, k, j); }

}  // namespace

// Order 1: closed form; 2: cl2 power series; 3 (Clausen = C_3): Chebyshev bootstrap;
// 4 (S_4): Chebyshev bootstrap; 5 (sin): polynomial; 14: direct summation.
#define CLAUSEN_BENCH(kind, order)                                                             \
  BENCHMARK_CAPTURE(BM_Serial, kind##_##order, clausen::Kind::kind, order)->Arg(1 << 16);     \
  BENCHMARK_CAPTURE(BM_OpenMP, kind##_##order, clausen::Kind::kind, order)->Arg(1 << 16);

CLAUSEN_BENCH(Clausen, 1)
CLAUSEN_BENCH(Clausen, 2)
CLAUSEN_BENCH(Clausen, 3)
CLAUSEN_BENCH(Clausen, 4)
CLAUSEN_BENCH(SinSum, 5)
CLAUSEN_BENCH(Clausen, 14)

BENCHMARK_MAIN();
