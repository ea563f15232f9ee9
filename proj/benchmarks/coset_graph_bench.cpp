#include <benchmark/benchmark.h>

#include "hatkit/constructions.hpp"

namespace {

using namespace hatkit;

void BM_SigmaD8(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(build_sigma_d8().graph.vertex_count());
}
BENCHMARK(BM_SigmaD8)->Unit(benchmark::kMillisecond);

void BM_D8C2LocalConditions(benchmark::State &state)
{
  auto const m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_d8c2_action(m).all_pass());
}
BENCHMARK(BM_D8C2LocalConditions)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace
