#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "addcomb/chains.hpp"
#include "addcomb/dimension.hpp"
#include "addcomb/int_set.hpp"
#include "addcomb/search.hpp"

using namespace addcomb;

namespace {

IntSet random_set(std::size_t k, Int hull, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> pick(0, hull - 1);
  std::set<Int> s{0, hull - 1};
  while (s.size() < k) s.insert(pick(rng));
  return IntSet(std::vector<Int>(s.begin(), s.end()));
}

// Narrow hull: packed shift-or path.
void BM_SumsetDense(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const IntSet a = random_set(k, static_cast<Int>(4 * k), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SumsetDense)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

// Hull beyond the bit-vector limit: pairwise sums.
void BM_SumsetSparse(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const IntSet a = random_set(k, Int{1} << 40, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SumsetSparse)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Doubling(benchmark::State& state) {
  const IntSet a = random_set(static_cast<std::size_t>(state.range(0)), 64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(doubling(a));
}
BENCHMARK(BM_Doubling)->Arg(8)->Arg(32);

void BM_AdditiveDim(benchmark::State& state) {
  const IntSet a = random_set(static_cast<std::size_t>(state.range(0)),
                              3 * state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(additive_dim(a));
}
BENCHMARK(BM_AdditiveDim)->Arg(6)->Arg(12)->Arg(24);

void BM_Vol1Sweep(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  SearchOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_conjecture(k, opts));
}
BENCHMARK(BM_Vol1Sweep)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_ChainEnum(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  ChainEnumOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chains(k, opts));
}
BENCHMARK(BM_ChainEnum)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
