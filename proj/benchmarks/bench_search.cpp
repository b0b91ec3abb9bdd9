#include <benchmark/benchmark.h>

#include <random>

#include "stallings/stallings.hpp"

namespace {

using namespace stallings;

Word random_reduced(std::mt19937_64& rng, Alphabet alphabet, std::size_t length) {
  std::uniform_int_distribution<std::size_t> slot(0, alphabet.symbol_count() - 1);
  Word w(alphabet);
  while (w.size() < length) {
    Letter x = Letter::from_slot(slot(rng));
    if (!w.empty() && w[w.size() - 1] == x.inverse()) continue;
    w.push_back(x);
  }
  return w;
}

// One generator of length l over three letters: the Stallings graph is a
// long cycle with l/2-ish states.
void BM_StallingsGraph(benchmark::State& state) {
  Alphabet alpha(3);
  std::mt19937_64 rng(7);
  std::vector<Word> gens{random_reduced(rng, alpha, static_cast<std::size_t>(state.range(0)))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(stallings_graph(gens, alpha));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StallingsGraph)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

// d = 1: a single word over two letters.
void BM_FreeFactorSearch(benchmark::State& state) {
  Alphabet alpha(2);
  std::mt19937_64 rng(11);
  std::vector<Word> gens{random_reduced(rng, alpha, static_cast<std::size_t>(state.range(0)))};
  std::size_t nodes = 0;
  for (auto _ : state) {
    auto v = is_free_factor_of_free(gens, alpha);
    nodes = v.stats.nodes_explored;
    benchmark::DoNotOptimize(v);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FreeFactorSearch)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_FreeFactorOfSubgroup(benchmark::State& state) {
  Alphabet alpha(3);
  std::mt19937_64 rng(13);
  auto len = static_cast<std::size_t>(state.range(0));
  std::vector<Word> k{random_reduced(rng, alpha, len), random_reduced(rng, alpha, len)};
  std::vector<Word> h{multiply(k[0], k[1])};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_free_factor_of(h, k, alpha));
  }
}
BENCHMARK(BM_FreeFactorOfSubgroup)->RangeMultiplier(2)->Range(4, 32);

void BM_FedererJonsson(benchmark::State& state) {
  Alphabet alpha(2);
  std::mt19937_64 rng(17);
  std::vector<Word> gens{random_reduced(rng, alpha, static_cast<std::size_t>(state.range(0)))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(federer_jonsson(gens, alpha));
  }
}
BENCHMARK(BM_FedererJonsson)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
