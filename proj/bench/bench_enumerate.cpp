#include <benchmark/benchmark.h>

#include <memory>

#include "homacm/classifier.hpp"

using namespace homacm;

namespace {

PolarizedSpace space(Family f, int rank, std::vector<int> I) {
  return PolarizedSpace(std::make_shared<const RootSystem>(RootSystem::build({f, rank})), std::move(I));
}

// Cases: 0 = C3/P_{1,2}, 1 = B4/P_1, 2 = A4/P_{2,3}.
PolarizedSpace bench_space(int which) {
  switch (which) {
    case 0: return space(Family::C, 3, {1, 2});
    case 1: return space(Family::B, 4, {1});
    default: return space(Family::A, 4, {2, 3});
  }
}

void BM_EnumerateAcmSerial(benchmark::State& state) {
  const PolarizedSpace ps = bench_space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_acm_serial(ps));
}

void BM_EnumerateAcmParallel(benchmark::State& state) {
  const PolarizedSpace ps = bench_space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_acm(ps));
}

}  // namespace

BENCHMARK(BM_EnumerateAcmSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateAcmParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
