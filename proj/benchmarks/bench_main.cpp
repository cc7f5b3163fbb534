#include <benchmark/benchmark.h>

#include "polygauss/classify.hpp"
#include "polygauss/polysum.hpp"

using namespace polygauss;

namespace {

const Polytope& fundamental() {
  static const auto p = simplex_polytope<3>(fundamental_tetrahedron());
  return p;
}

void BM_DirectSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(polyhedral_gauss_sum_direct(fundamental(), state.range(0)));
}
BENCHMARK(BM_DirectSum)->Arg(4)->Arg(16)->Arg(32);

void BM_FoldedSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(polyhedral_gauss_sum_folded(fundamental(), state.range(0)));
}
BENCHMARK(BM_FoldedSum)->Arg(4)->Arg(16)->Arg(32);

void BM_TetraFormula(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tetra_gauss_sum_formula(fundamental(), state.range(0)));
}
BENCHMARK(BM_TetraFormula)->Arg(4)->Arg(16)->Arg(32);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_minimal_tetrahedra(2, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
