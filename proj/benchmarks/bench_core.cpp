#include <benchmark/benchmark.h>

#include <random>

#include "lvmb/action.hpp"
#include "lvmb/exact.hpp"
#include "lvmb/lattice.hpp"
#include "lvmb/nvp.hpp"
#ifdef LVMB_BENCH_WITH_CLI
#include "lvmb/cli/generate.hpp"
#endif

namespace {

using namespace lvmb;

ExactMatrix random_exact(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = GaussianRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix m = random_exact(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Inverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix m = random_exact(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(m));
}
BENCHMARK(BM_Inverse)->Arg(4)->Arg(8)->Arg(16);

#ifdef LVMB_BENCH_WITH_CLI
void BM_DecideNvp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const LVMBConfig cfg = cli::random_config(n, m, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(decide_nvp(cfg));
}
BENCHMARK(BM_DecideNvp)->Args({5, 2})->Args({9, 4})->Args({16, 4});

void BM_LatticePresentation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LVMBConfig cfg = cli::random_config(n, 2, 0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_presentation(cfg));
}
BENCHMARK(BM_LatticePresentation)->Arg(6)->Arg(12)->Arg(16);
#endif

void BM_Act(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LVMBConfig cfg;
  cfg.n = n;
  cfg.m = 2;
  cfg.lambda = random_exact(2, n, 5);
  std::vector<Complex> z(n, Complex(0.5, 0.25));
  const auto p = ProjectivePoint::from_coordinates(z);
  const GroupElement t{{Complex(0.3, -0.1), Complex(-0.2, 0.4)}};
  for (auto _ : state) benchmark::DoNotOptimize(act(cfg, t, p));
}
BENCHMARK(BM_Act)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
