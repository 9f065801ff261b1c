#include <benchmark/benchmark.h>

#include "holr/selftest.hpp"

namespace {

holr::CrossingData fixed_crossing(const holr::RootConfig& cfg) {
  std::mt19937_64 rng(7);
  return holr::random_crossing(cfg, rng, 1);
}

void BM_RmatSerial(benchmark::State& st) {
  const holr::RootConfig cfg(int(st.range(0)));
  const holr::CrossingData c = fixed_crossing(cfg);
  for (auto _ : st) benchmark::DoNotOptimize(holr::rmat_serial(cfg, c).entries.data());
}

void BM_RmatParallel(benchmark::State& st) {
  const holr::RootConfig cfg(int(st.range(0)));
  const holr::CrossingData c = fixed_crossing(cfg);
  for (auto _ : st) benchmark::DoNotOptimize(holr::rmat(cfg, c).entries.data());
}

holr::ColoredBraid fixed_braid(const holr::RootConfig& cfg) {
  std::mt19937_64 rng(7);
  const holr::BraidWord w{3, {1, 2, -1, 2}};
  return holr::make_colored_braid(cfg, w, holr::random_top_colors(holr::build_diagram(w), rng));
}

void BM_JfuncSerial(benchmark::State& st) {
  const holr::RootConfig cfg(int(st.range(0)));
  const holr::ColoredBraid cb = fixed_braid(cfg);
  for (auto _ : st) benchmark::DoNotOptimize(holr::jfunc_eval_serial(cfg, cb.diagram, cb.log).data());
}

void BM_JfuncParallel(benchmark::State& st) {
  const holr::RootConfig cfg(int(st.range(0)));
  const holr::ColoredBraid cb = fixed_braid(cfg);
  for (auto _ : st) benchmark::DoNotOptimize(holr::jfunc_eval(cfg, cb.diagram, cb.log).data());
}

}  // namespace

BENCHMARK(BM_RmatSerial)->Arg(5)->Arg(11)->Arg(23);
BENCHMARK(BM_RmatParallel)->Arg(5)->Arg(11)->Arg(23);
BENCHMARK(BM_JfuncSerial)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_JfuncParallel)->Arg(3)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
