// Micro-benchmarks for the hot paths: exact combinatorics, Schur basis
// construction, and one protocol round. Run with --benchmark_filter=... to
// select a subset.

#include "repmatch/cost_model.hpp"
#include "repmatch/irrep_table.hpp"
#include "repmatch/random_unitary.hpp"
#include "repmatch/rep_matching.hpp"
#include "repmatch/schur_basis.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace repmatch;

namespace {

void BM_BuildTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table(n, d, Role::kUnitaryArray));
  }
}
BENCHMARK(BM_BuildTable)->Args({100, 2})->Args({100, 5})->Args({200, 3});

void BM_ScanTablesUpTo(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    BigInt acc = 0;
    scan_tables_up_to(n_max, d, Role::kUnitaryArray,
                      [&acc](const IrrepTable& t) { acc += t.d_tot_sq; });
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ScanTablesUpTo)->Args({200, 2})->Args({200, 3})->Args({100, 5});

void BM_CostReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost_report(n, d, Task::kUnitaryArray));
  }
}
BENCHMARK(BM_CostReport)->Args({100, 2})->Args({100, 5});

void BM_SchurBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_schur_basis(n, d));
  }
}
BENCHMARK(BM_SchurBuild)->Args({4, 2})->Args({6, 2})->Args({8, 2})->Args({4, 3})
    ->Unit(benchmark::kMillisecond);

void BM_SchurVerifySample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SchurBasis basis = build_schur_basis(n, 2);
  uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_schur_basis(basis, 1, seed++));
  }
}
BENCHMARK(BM_SchurVerifySample)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RepmatchRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SchurBasis basis = build_schur_basis(n, 2);
  std::mt19937_64 rng(42);
  TargetSpec target;
  target.task = Task::kUnitaryArray;
  target.n = n;
  target.d = 2;
  target.g = haar_su(2, rng);
  const Vector psi = random_state(1LL << n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_repmatch(psi, target, basis));
  }
}
BENCHMARK(BM_RepmatchRound)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
