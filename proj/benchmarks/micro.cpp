#include <benchmark/benchmark.h>

#include <random>

#include "tropsolve/assignment.hpp"
#include "tropsolve/games.hpp"
#include "tropsolve/linalg.hpp"
#include "tropsolve/selfcheck.hpp"

namespace {

using namespace tropsolve;

void BM_MaxAssignment(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const TropMatrix w = modulus_matrix(selfcheck::random_signed_matrix(rng, n, n, -1'000'000, 1'000'000));
  for (auto _ : state) benchmark::DoNotOptimize(max_assignment(w));
}
BENCHMARK(BM_MaxAssignment)->RangeMultiplier(2)->Range(4, 64);

void BM_TropicalDeterminant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const SignedMatrix m = selfcheck::random_signed_matrix(rng, n, n, -1'000'000, 1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(tdet(m));
}
BENCHMARK(BM_TropicalDeterminant)->RangeMultiplier(2)->Range(4, 64);

void BM_SolveGame(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Game> games;
  for (std::uint64_t s = 0; s < 16; ++s) games.push_back(random_game(n, n, PayoffRange{}, s));
  std::size_t k = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(is_winning(games[k++ % games.size()], n - 1));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_SolveGame)->DenseRange(3, 10)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
