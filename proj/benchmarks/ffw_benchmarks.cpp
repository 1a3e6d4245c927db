// Copyright 2026 The ffwiener Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "ffw/montecarlo.hpp"
#include "ffw/oracle.hpp"
#include "ffw/series.hpp"
#include "ffw/transform.hpp"

namespace {

using namespace ffw;

void BM_TLambdaPoly(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const MonomialFunctional f{MultiIndex{2 * p, 2 * p, 2 * p}};
  for (auto _ : state) benchmark::DoNotOptimize(t_lambda_poly(f));
}
BENCHMARK(BM_TLambdaPoly)->Arg(1)->Arg(3)->Arg(5);

void BM_PolyMul(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto a = t_lambda_poly(MonomialFunctional{MultiIndex{2 * p, 0}});
  const auto b = t_lambda_poly(MonomialFunctional{MultiIndex{0, 2 * p}});
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(2)->Arg(8)->Arg(16);

void BM_SeriesFftFull(benchmark::State& state) {
  const SmoothFunctionalSpec spec(2, 1, 1);
  const TruncationOrder order(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_fft_full(spec, order, 1));
}
BENCHMARK(BM_SeriesFftFull)->Arg(4)->Arg(8);

void BM_HermiteRule(benchmark::State& state) {
  const auto order = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_rule(order));
}
BENCHMARK(BM_HermiteRule)->Arg(16)->Arg(64)->Arg(128);

void BM_DirectMonteCarlo(benchmark::State& state) {
  WienerMCConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  const auto f = [](std::span<const double> z) { return z[0] * z[0] * std::pow(z[1], 4); };
  for (auto _ : state) benchmark::DoNotOptimize(estimate_wiener_integral(f, 2, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DirectMonteCarlo)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_PathMonteCarlo(benchmark::State& state) {
  WienerMCConfig cfg;
  cfg.samples = 1000;
  cfg.mode = SamplingMode::kPathPwz;
  cfg.grid = static_cast<std::uint32_t>(state.range(0));
  const auto f = [](std::span<const double> z) { return std::pow(z[0], 4); };
  for (auto _ : state) benchmark::DoNotOptimize(estimate_wiener_integral(f, 1, cfg));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_PathMonteCarlo)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
