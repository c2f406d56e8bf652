#include <benchmark/benchmark.h>

#include "nilpat/nilpat.hpp"

namespace {

using namespace nilpat;

// Full order-3 pattern: PN for odd p, so the search stops at the first hit.
// A_5 at p = 7 has no realization and the search runs to exhaustion.
void BM_Search_Full3(benchmark::State& state) {
  const auto a = ZnzPattern::from_rows({"***", "***", "***"});
  SearchOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_search(a, state.range(0), opts));
}

void BM_Search_Exhaustive_A5(benchmark::State& state) {
  const auto a = an_family(5);
  SearchOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_search(a, state.range(0), opts));
}

void BM_DecidePn_Order3(benchmark::State& state) {
  const auto classes = enumerate_irreducible(3);
  for (auto _ : state)
    for (const auto& c : classes) benchmark::DoNotOptimize(decide_pn(c, state.range(0)));
}

}  // namespace

BENCHMARK(BM_Search_Full3)->Args({5, 1})->Args({13, 1})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Search_Exhaustive_A5)->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecidePn_Order3)->Arg(2)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
