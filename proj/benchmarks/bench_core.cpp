#include <benchmark/benchmark.h>

#include "subvar/data/regression.hpp"
#include "subvar/engine/posterior.hpp"
#include "subvar/engine/sampler.hpp"
#include "subvar/forecast/moments.hpp"
#include "subvar/hyper/model.hpp"
#include "subvar/hyper/weights.hpp"
#include "subvar/sim/dgp.hpp"

using namespace subvar;

namespace {

data::RegressionData panel(int M, int T, int p) {
  sim::DgpSpec spec;
  spec.M = M;
  spec.q_true = 3;
  spec.T = T + p;
  spec.seed = 11;
  return data::build_lag_matrix(sim::simulate_dgp(spec).data, p);
}

void BM_ScoreGrid(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto variant = state.range(1) == 0 ? prior::PriorVariant::Flat : prior::PriorVariant::Minnesota;
  const hyper::SubspaceVar model(panel(M, 200, 2), variant);
  const auto grid = hyper::build_grid(hyper::HyperPriorConfig{}, M, variant);
  for (auto _ : state)
    benchmark::DoNotOptimize(model.score_grid(grid, hyper::HyperPriorConfig{}, {}));
  state.counters["points"] = static_cast<double>(grid.size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_ScoreGrid)->Args({10, 0})->Args({10, 1})->Args({20, 0})->Unit(benchmark::kMillisecond);

void BM_PosteriorMoments(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto rd = panel(M, 200, 2);
  const auto stats = engine::CrossProducts::from(rd);
  const prior::PriorBuilder builder(rd, prior::PriorVariant::Minnesota);
  const auto prior = builder.build(0.5, 3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(engine::posterior_moments(prior, stats));
}
BENCHMARK(BM_PosteriorMoments)->Arg(3)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_SamplePosterior(benchmark::State& state) {
  const auto rd = panel(static_cast<int>(state.range(0)), 200, 2);
  const auto prior = prior::assemble_prior(rd, prior::PriorVariant::Minnesota, 0.5, 3, 0.2);
  const auto post = engine::posterior_moments(prior, rd);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(engine::sample_posterior(post, 10, ++seed));
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_SamplePosterior)->Arg(3)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_HyperSampling(benchmark::State& state) {
  const hyper::SubspaceVar model(panel(10, 200, 2), prior::PriorVariant::Minnesota);
  const auto grid =
      model.score_grid(hyper::build_grid(hyper::HyperPriorConfig{}, 10, prior::PriorVariant::Minnesota),
                       hyper::HyperPriorConfig{}, {});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hyper::sample_hyper(grid, 200, ++seed));
}
BENCHMARK(BM_HyperSampling);

void BM_ForecastMomentPath(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto rd = panel(M, 200, 2);
  const auto post = engine::posterior_moments(
      prior::assemble_prior(rd, prior::PriorVariant::Minnesota, 0.5, 3, 0.2), rd);
  const auto draw = engine::sample_posterior(post, 1, 3).front();
  const Vector x_T = rd.X.bottomRows(1).transpose();
  for (auto _ : state) benchmark::DoNotOptimize(forecast::forecast_moment_path(draw, x_T, 8));
}
BENCHMARK(BM_ForecastMomentPath)->Arg(3)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
