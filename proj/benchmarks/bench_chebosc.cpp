#include <benchmark/benchmark.h>

#include "chebosc/mandel.hpp"
#include "chebosc/normalization.hpp"
#include "chebosc/oscillator.hpp"
#include "chebosc/polynomials.hpp"

namespace {

void BM_EvalPoly(benchmark::State& state) {
  const chebosc::FamilySpec spec(2, 1.3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(chebosc::eval_poly(spec, n, 1.1));
}
BENCHMARK(BM_EvalPoly)->Arg(16)->Arg(64)->Arg(256);

void BM_CoeffListRecurrence(benchmark::State& state) {
  const chebosc::FamilySpec spec(2, 1.3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(chebosc::coeff_list_recurrence(spec, n));
}
BENCHMARK(BM_CoeffListRecurrence)->Arg(12)->Arg(24);

void BM_CoeffListExplicit(benchmark::State& state) {
  const chebosc::FamilySpec spec(2, 1.3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(chebosc::coeff_list_explicit(spec, n));
}
BENCHMARK(BM_CoeffListExplicit)->Arg(12)->Arg(24);

void BM_NormalizationSeries(benchmark::State& state) {
  const chebosc::FamilySpec spec(2, 1.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(chebosc::n_series(spec, 1.8));
}
BENCHMARK(BM_NormalizationSeries);

void BM_NormalizationClosed(benchmark::State& state) {
  const chebosc::FamilySpec spec(2, 1.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(chebosc::n_closed_general(spec, 1.8));
}
BENCHMARK(BM_NormalizationClosed);

void BM_CoherentMoments(benchmark::State& state) {
  const chebosc::FamilySpec spec(2, 1.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(chebosc::coherent_moments(spec, 1.5));
}
BENCHMARK(BM_CoherentMoments);

void BM_MandelAuto(benchmark::State& state) {
  const chebosc::FamilySpec spec(2, 2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(chebosc::mandel_auto(spec, 1.0));
}
BENCHMARK(BM_MandelAuto);

void BM_ScanRegions(benchmark::State& state) {
  const chebosc::FamilySpec spec(2, 2.0);
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(chebosc::scan_regions(spec, grid));
}
BENCHMARK(BM_ScanRegions)->Arg(1000)->Arg(10000);

void BM_IntegrateMeasure(benchmark::State& state) {
  for (auto _ : state) {
    const double moment = chebosc::integrate_measure(
        [](double x) { return x * x; }, 2.0, 1e-9);
    benchmark::DoNotOptimize(moment);
  }
}
BENCHMARK(BM_IntegrateMeasure);

}  // namespace

BENCHMARK_MAIN();
