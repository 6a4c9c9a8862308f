#include <benchmark/benchmark.h>

#include "wildmoduli/betti.hpp"

namespace {

using namespace wildmoduli;

void BM_SampleFkvTuple(benchmark::State& state) {
  const std::array<Complex, 4> traces{Complex(0.3, 0.1), Complex(-0.7, 0.2), Complex(1.1, -0.4), Complex(0.5, 0.5)};
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_fkv_tuple(traces, ++seed));
}
BENCHMARK(BM_SampleFkvTuple);

void BM_RunFkv(benchmark::State& state) {
  const std::array<Complex, 4> traces{1.0, -1.0, 0.5, Complex(0.0, 1.5)};
  for (auto _ : state) benchmark::DoNotOptimize(run_fkv(traces, std::size_t(state.range(0)), 1));
}
BENCHMARK(BM_RunFkv)->Arg(12)->Arg(40)->Arg(200);

void BM_FissionFiber(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_fission_fiber(int(state.range(0)), Complex(1.7, -0.4), ++seed));
}
BENCHMARK(BM_FissionFiber)->DenseRange(2, 5);

}  // namespace
