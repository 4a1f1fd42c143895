#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "nilcomplete/nilcomplete.hpp"

namespace {

// Random partition of n with parts drawn from [1, max_part] and at most r
// parts; deterministic per (n, r).
nilc::Partition sample(int n, int r, int max_part) {
  std::mt19937_64 rng(static_cast<unsigned>(n * 7919 + r));
  for (;;) {
    std::vector<int> parts;
    int left = n;
    std::uniform_int_distribution<int> d(1, max_part);
    while (left > 0) {
      const int p = std::min(left, d(rng));
      parts.push_back(p);
      left -= p;
    }
    if (static_cast<int>(parts.size()) <= r) return nilc::Partition::normalize(parts);
  }
}

void BM_Run(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = n / 2 - 1;
  const nilc::Partition lam = sample(n, r, 40);
  std::size_t grafts = 0;
  for (auto _ : state) {
    auto c = nilc::run(n, r, lam);
    grafts = c.grafts;
    benchmark::DoNotOptimize(c.x.data());
  }
  state.counters["grafts"] = static_cast<double>(grafts);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Run)->RangeMultiplier(4)->Range(64, 16384)->Unit(benchmark::kMillisecond)->Complexity();

void BM_RunChecked(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = n / 3;
  const nilc::Partition lam = sample(n, r, 12);
  for (auto _ : state) benchmark::DoNotOptimize(nilc::run(n, r, lam, {.check_invariants = true}).x.data());
}
BENCHMARK(BM_RunChecked)->Arg(30)->Arg(120)->Arg(480)->Unit(benchmark::kMillisecond);

void BM_JordanType(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = n / 3;
  const nilc::Partition lam = sample(n, r, 12);
  const nilc::IntMatrix a = nilc::make_nr(n, r) + nilc::run(n, r, lam).dense_x();
  for (auto _ : state) benchmark::DoNotOptimize(nilc::jordan_type(a));
}
BENCHMARK(BM_JordanType)->Arg(10)->Arg(20)->Arg(30)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
