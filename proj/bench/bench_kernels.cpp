// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "fdosc/kernels.hpp"
#include "fdosc/model_catalog.hpp"
#include "fdosc/position_space.hpp"

namespace {

const fdosc::ModelParams kTpt = fdosc::ModelParams::tpt(4.0, 1.0);

template <bool Parallel>
void BM_TptTable(benchmark::State& state) {
  const auto grid = fdosc::make_tpt_grid(static_cast<std::size_t>(state.range(0)), kTpt);
  for (auto _ : state) {
    auto t = Parallel ? fdosc::kernels::tpt_basis_table(kTpt, 63, grid->nodes)
                      : fdosc::kernels::serial::tpt_basis_table(kTpt, 63, grid->nodes);
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_RadialTable(benchmark::State& state) {
  const auto grid = fdosc::make_radial_grid(static_cast<std::size_t>(state.range(0)), 120.0);
  for (auto _ : state) {
    auto t = Parallel ? fdosc::kernels::radial_basis_table(1.5, 63, grid->nodes)
                      : fdosc::kernels::serial::radial_basis_table(1.5, 63, grid->nodes);
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_Gram(benchmark::State& state) {
  const auto grid = fdosc::make_tpt_grid(static_cast<std::size_t>(state.range(0)), kTpt);
  const auto table = fdosc::kernels::tpt_basis_table(kTpt, 63, grid->nodes);
  for (auto _ : state) {
    auto g = Parallel ? fdosc::kernels::weighted_gram(table, grid->weights)
                      : fdosc::kernels::serial::weighted_gram(table, grid->weights);
    benchmark::DoNotOptimize(g.data());
  }
}

}  // namespace

BENCHMARK(BM_TptTable<false>)->Arg(1024)->Arg(8192);
BENCHMARK(BM_TptTable<true>)->Arg(1024)->Arg(8192);
BENCHMARK(BM_RadialTable<false>)->Arg(1024)->Arg(8192);
BENCHMARK(BM_RadialTable<true>)->Arg(1024)->Arg(8192);
BENCHMARK(BM_Gram<false>)->Arg(1024)->Arg(8192);
BENCHMARK(BM_Gram<true>)->Arg(1024)->Arg(8192);

BENCHMARK_MAIN();
