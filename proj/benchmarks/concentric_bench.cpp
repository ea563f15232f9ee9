#include <benchmark/benchmark.h>

#include "hatkit/concentric.hpp"
#include "hatkit/presets.hpp"

namespace {

using namespace hatkit;

void BM_Search(benchmark::State &state, char const *name)
{
  auto const &preset = concentric_preset(name);
  auto const loaded = load_concentric_preset(preset);
  for (auto _ : state)
    benchmark::DoNotOptimize(
      find_concentric_tuple(loaded.group, preset.m, std::size_t{1} << 20).outcome);
}
BENCHMARK_CAPTURE(BM_Search, found_D8xD8, "D8xD8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, none_D16xC2, "D16xC2")->Unit(benchmark::kMillisecond);

void BM_IsConcentricH7xC2(benchmark::State &state)
{
  auto const loaded = load_concentric_preset(concentric_preset("H7xC2"));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_concentric({loaded.group, loaded.tuple}).verdict);
}
BENCHMARK(BM_IsConcentricH7xC2)->Unit(benchmark::kMillisecond);

} // namespace
