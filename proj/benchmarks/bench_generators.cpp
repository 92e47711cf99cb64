#include <benchmark/benchmark.h>

#include <random>

#include "dfatest/cover.hpp"
#include "dfatest/dfa.hpp"
#include "dfatest/generate.hpp"

using namespace dfatest;

namespace {

const char* const kExample =
    "states: 1 2 3 A X\nalphabet: a b\ninitial: 1\nfinal: A\n"
    "1 a 2\n1 b X\n2 a 3\n2 b 2\n3 a A\n3 b 2\nA a X\nA b X\nX a X\nX b X\n";

// Minimized random automaton; retries until minimization keeps at least
// half the states.
Dfa random_automaton(std::size_t n, std::size_t k, unsigned seed) {
  std::mt19937 rng(seed);
  while (true) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    std::vector<StateId> delta(n * k);
    for (auto& t : delta) t = static_cast<StateId>(rng() % n);
    std::vector<bool> finals(n);
    for (std::size_t i = 0; i < n; ++i) finals[i] = rng() % 2;
    const Dfa m = minimize(Dfa(names, std::string("abc").substr(0, k), delta, 0, finals));
    if (m.num_states() * 2 >= n) return m;
  }
}

void BM_Roman(benchmark::State& state) {
  const Dfa d = random_automaton(static_cast<std::size_t>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(generate_roman(d));
}

void BM_Alg2(benchmark::State& state) {
  const Dfa d = random_automaton(static_cast<std::size_t>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(generate_alg2(d));
}

void BM_Alg3(benchmark::State& state) {
  const Dfa d = random_automaton(static_cast<std::size_t>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(generate_alg3(d));
}

void BM_ExampleAlg3(benchmark::State& state) {
  const Dfa d = parse_dfa_text(kExample);
  for (auto _ : state) benchmark::DoNotOptimize(generate_alg3(d));
}

void BM_ExampleExact(benchmark::State& state) {
  const Dfa d = parse_dfa_text(kExample);
  const auto seeds = generate_alg3(d).words();
  for (auto _ : state) {
    const auto instance = make_cover_instance(d, candidate_pool(d, 24, seeds), 24);
    benchmark::DoNotOptimize(solve_exact(instance));
  }
}

}  // namespace

BENCHMARK(BM_Roman)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Alg2)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Alg3)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_ExampleAlg3);
BENCHMARK(BM_ExampleExact)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
