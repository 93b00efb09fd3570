#include <benchmark/benchmark.h>

#include <random>

#include "siltgeo/qlinalg.hpp"

using namespace siltgeo;

namespace {

RatMatrix random_matrix(std::size_t r, std::size_t c, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(d(rng), 1 + (d(rng) & 3));
  return m;
}

void BM_rref(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix m = random_matrix(n, n + 4, 42);
  for (auto _ : state) {
    auto r = rref(m);
    benchmark::DoNotOptimize(r);
  }
}

void BM_kernel(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix m = random_matrix(n, 2 * n, 43);
  for (auto _ : state) {
    auto k = kernel(m);
    benchmark::DoNotOptimize(k);
  }
}

}  // namespace

BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_kernel)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
