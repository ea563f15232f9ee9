#include <benchmark/benchmark.h>

#include "hatkit/perm_group.hpp"

namespace {

using namespace hatkit;

void BM_SchreierSimsAlternating(benchmark::State &state)
{
  auto const n = static_cast<std::size_t>(state.range(0));
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i)
    cycle[i] = (i + 1) % n;
  // An n-cycle (even for odd n) with a 3-cycle generates Alt(n).
  std::vector<Permutation> gens = {Permutation::from_images(cycle),
                                   Permutation::from_cycles(n, {{0, 1, 2}})};
  for (auto _ : state)
    benchmark::DoNotOptimize(schreier_sims(gens).order());
}
BENCHMARK(BM_SchreierSimsAlternating)->Arg(11)->Arg(63)->Arg(255);

void BM_Membership(benchmark::State &state)
{
  auto const group = symmetric_group(64);
  auto const p = group.random_element(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(group.contains(p));
}
BENCHMARK(BM_Membership);

} // namespace
