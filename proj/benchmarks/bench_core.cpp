#include <benchmark/benchmark.h>

#include "fusion/fusion.hpp"

using namespace fusion;

namespace {

void BM_PowerIterationTy(benchmark::State& state) {
  const FusionRing ty = tambara_yamagami(cyclic_group(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(fp_dimensions(ty));
}
BENCHMARK(BM_PowerIterationTy)->Arg(4)->Arg(16)->Arg(32);

void BM_PowerIterationFibonacciPower(benchmark::State& state) {
  FusionRing r = builtin_ring("fibonacci");
  for (int k = 1; k < state.range(0); ++k) r = product_ring(r, builtin_ring("fibonacci"));
  for (auto _ : state) benchmark::DoNotOptimize(fp_dimensions(r));
}
BENCHMARK(BM_PowerIterationFibonacciPower)->Arg(2)->Arg(4)->Arg(5);

void BM_EnumerateSubringsGroup(benchmark::State& state) {
  const FusionRing r = group_ring(named_group(state.range(0) == 0 ? "Z2^4" : "S4"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subrings(r));
}
BENCHMARK(BM_EnumerateSubringsGroup)->Arg(0)->Arg(1);

void BM_ValidateRing(benchmark::State& state) {
  const RawRing raw = group_ring(cyclic_group(static_cast<std::size_t>(state.range(0)))).to_raw();
  for (auto _ : state) benchmark::DoNotOptimize(validate_ring(raw));
}
BENCHMARK(BM_ValidateRing)->Arg(8)->Arg(16)->Arg(32);

void BM_SimplicityTy(benchmark::State& state) {
  const FusionRing ty = tambara_yamagami(cyclic_group(13));
  for (auto _ : state) benchmark::DoNotOptimize(simplicity_check(ty));
}
BENCHMARK(BM_SimplicityTy);

void BM_ExactSequenceCertificate(benchmark::State& state) {
  const auto f = builtin_morphism("ty4_to_z2");
  for (auto _ : state) benchmark::DoNotOptimize(exact_sequence_certificate(f));
}
BENCHMARK(BM_ExactSequenceCertificate);

}  // namespace
BENCHMARK_MAIN();
