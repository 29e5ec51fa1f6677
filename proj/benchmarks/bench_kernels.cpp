#include <benchmark/benchmark.h>

#include "blocknorm/block_matrix.hpp"
#include "blocknorm/inequalities.hpp"
#include "blocknorm/norms.hpp"
#include "blocknorm/sampling.hpp"
#include "blocknorm/spectral.hpp"

using namespace blocknorm;

namespace {

ComplexMatrix hermitian_input(std::size_t n) {
  CounterRng rng(424242, n);
  return random_hermitian(n, rng);
}

void BM_HermEig(benchmark::State& state) {
  const auto h = hermitian_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(herm_eig(h));
  }
}
BENCHMARK(BM_HermEig)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_Svd(benchmark::State& state) {
  CounterRng rng(424243, static_cast<std::uint64_t>(state.range(0)));
  const auto x = random_matrix(static_cast<std::size_t>(state.range(0)),
                               static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svd(x));
  }
}
BENCHMARK(BM_Svd)->Arg(4)->Arg(8)->Arg(12);

void BM_MatrixSqrtPsd(benchmark::State& state) {
  CounterRng rng(424244, static_cast<std::uint64_t>(state.range(0)));
  const auto p = random_psd(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_sqrt_psd(p));
  }
}
BENCHMARK(BM_MatrixSqrtPsd)->Arg(4)->Arg(8)->Arg(12);

void BM_DecomposeHalfParts(benchmark::State& state) {
  CounterRng rng(424245, static_cast<std::uint64_t>(state.range(0)));
  const auto m = random_psd_block(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_half_parts(m, PartMode::im));
  }
}
BENCHMARK(BM_DecomposeHalfParts)->Arg(2)->Arg(4)->Arg(6);

void BM_CheckMainInequality(benchmark::State& state) {
  CounterRng rng(424246, static_cast<std::uint64_t>(state.range(0)));
  const auto m = random_psd_block(static_cast<std::size_t>(state.range(0)),
                                  XConstraint::hermitian, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_main_inequality(m));
  }
}
BENCHMARK(BM_CheckMainInequality)->Arg(2)->Arg(4)->Arg(6);

void BM_KyFanProfile(benchmark::State& state) {
  CounterRng rng(424247, static_cast<std::uint64_t>(state.range(0)));
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)),
                               static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ky_fan_profile(m, 2 * m.rows()));
  }
}
BENCHMARK(BM_KyFanProfile)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
