// Serial reference vs OpenMP seed-parallel execution of the same experiment.

#include <benchmark/benchmark.h>

#include <numeric>

#include "easm/experiment.hpp"

namespace {

easm::ExperimentConfig bench_config(std::int64_t seeds) {
  easm::ExperimentConfig cfg = easm::scenario_one();
  cfg.max_rounds = 1000;
  cfg.seeds.resize(static_cast<std::size_t>(seeds));
  std::iota(cfg.seeds.begin(), cfg.seeds.end(), 1);
  return cfg;
}

void BM_Seeds(benchmark::State& state, easm::Execution exec) {
  const auto cfg = bench_config(state.range(0));
  for (auto _ : state) {
    auto runs = easm::run_seeds(cfg, exec);
    benchmark::DoNotOptimize(runs.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SingleRound(benchmark::State& state) {
  easm::ExperimentConfig cfg = easm::scenario_one();
  auto nodes = easm::deploy(cfg.network);
  easm::Rng rng(1);
  easm::ElectionContext ctx{0, cfg.p_opt, cfg.network.het, cfg.reset_trigger};
  for (auto _ : state) {
    auto copy = nodes;
    benchmark::DoNotOptimize(
        easm::run_round(copy, cfg.protocol, ctx, cfg.radio, cfg.network.bs_pos, rng));
    ++ctx.round;
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Seeds, serial, easm::Execution::Serial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Seeds, parallel, easm::Execution::Parallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleRound);

BENCHMARK_MAIN();
