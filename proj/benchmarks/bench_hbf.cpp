#include <benchmark/benchmark.h>

#include "hbf/calibrate.hpp"
#include "hbf/experiment.hpp"
#include "hbf/hypervector.hpp"
#include "hbf/index.hpp"
#include "hbf/rng.hpp"

namespace {

hbf::HyperVector gaussian(std::size_t d, std::uint64_t seed) {
  hbf::Rng rng(seed);
  std::vector<double> v(d);
  for (auto& x : v) x = rng.normal();
  return hbf::HyperVector(std::move(v));
}

void BM_ConvolveNaive(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = gaussian(d, 1), b = gaussian(d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hbf::convolve_naive(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvolveNaive)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_ConvolveFft(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = gaussian(d, 1), b = gaussian(d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hbf::convolve_fft(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvolveFft)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_Build(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = hbf::make_workload(n, 100, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbf::build(w.records, 4096, 1.0, w.key_seed, w.value_seed));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Build)->Arg(10)->Arg(100)->Arg(1000);

// One query: correlate, score every label, apply the margin rule.
void BM_Decode(benchmark::State& state) {
  const auto labels = static_cast<std::size_t>(state.range(0));
  const auto w = hbf::make_workload(100, labels, 1);
  const auto mem = hbf::build(w.records, 4096, 1.0, w.key_seed, w.value_seed);
  const hbf::LabelSet set(w.labels, w.value_seed, 4096);
  const hbf::DecoderConfig cfg{0.0, 0.0, 2};
  for (auto _ : state) benchmark::DoNotOptimize(hbf::decode(mem, "key-7", cfg, set));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decode)->RangeMultiplier(10)->Range(10, 10000)->Complexity();

void BM_Calibrate(benchmark::State& state) {
  const auto w = hbf::make_workload(100, 100, 1);
  const auto mem = hbf::build(w.records, 4096, 1.0, w.key_seed, w.value_seed);
  const hbf::LabelSet set(w.labels, w.value_seed, 4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbf::calibrate_decoder(mem, set, 200, 0.01, 3));
  }
}
BENCHMARK(BM_Calibrate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
