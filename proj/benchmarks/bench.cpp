#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "duflo/engine.hpp"
#include "duflo/oracle.hpp"
#include "duflo/rs.hpp"

namespace {

duflo::Word shuffled_word(int n, unsigned seed) {
  duflo::Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::mt19937 rng(seed);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

// Row insertion of a whole word, the workhorse behind every fiber question.
void BM_InsertionTableau(benchmark::State& state) {
  const duflo::Word w = shuffled_word(static_cast<int>(state.range(0)), 911);
  for (auto _ : state) {
    benchmark::DoNotOptimize(duflo::rs_tableau(w));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InsertionTableau)->Arg(64)->Arg(256)->Arg(1024);

// Full correspondence both ways.
void BM_PairRoundTrip(benchmark::State& state) {
  const duflo::Word w = shuffled_word(128, 7);
  for (auto _ : state) {
    const auto [t, q] = duflo::rs_pair(w);
    benchmark::DoNotOptimize(duflo::rs_inverse(t, q));
  }
}
BENCHMARK(BM_PairRoundTrip);

// Fiber of one tableau by scanning every arrangement of its alphabet.
void BM_CellByFilter(benchmark::State& state) {
  const duflo::Tableau t = duflo::rs_tableau(shuffled_word(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(duflo::cell_by_filter(t));
  }
}
BENCHMARK(BM_CellByFilter)->Arg(6)->Arg(7);

// Offspring sets of every tableau of the rank by one sweep of all words.
void BM_OffspringSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(duflo::offsprings_bruteforce_all(n));
  }
}
BENCHMARK(BM_OffspringSweep)->Arg(4)->Arg(5)->Arg(6);

// Closure of the one-step relation into the full order.
void BM_OrderClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(duflo::induced_order(n));
  }
}
BENCHMARK(BM_OrderClosure)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
