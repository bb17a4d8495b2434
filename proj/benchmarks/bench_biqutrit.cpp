/**
 * Copyright 2026 The biqutrit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "biqutrit/biphoton.hpp"
#include "biqutrit/experiment.hpp"
#include "biqutrit/orthogonality.hpp"

using namespace biqutrit;

static void BM_QutritFromPair(benchmark::State& state) {
  const JonesVector a = JonesVector::linear(20.0);
  const JonesVector b = jones_from_poincare({70.0, 130.0});
  for (auto _ : state) benchmark::DoNotOptimize(qutrit_from_pair(a, b));
}
BENCHMARK(BM_QutritFromPair);

static void BM_FactorQutrit(benchmark::State& state) {
  const BiphotonQutrit s = source_state({30.0, 180.0});
  for (auto _ : state) benchmark::DoNotOptimize(factor_qutrit(s));
}
BENCHMARK(BM_FactorQutrit);

static void BM_PairAmplitude(benchmark::State& state) {
  const JonesVector a = JonesVector::linear(10.0), b = JonesVector::linear(75.0);
  const JonesVector c = jones_from_poincare({40.0, 60.0}), d = JonesVector::vertical();
  for (auto _ : state) benchmark::DoNotOptimize(pair_amplitude(c, d, a, b));
}
BENCHMARK(BM_PairAmplitude);

static void BM_OrthogonalPartner(benchmark::State& state) {
  const PoincarePoint a{34.25, 37.62}, b{44.93, 7.69}, c{50.71, -76.61};
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_partner(a, b, c));
}
BENCHMARK(BM_OrthogonalPartner);

static void BM_SweepChi(benchmark::State& state) {
  const RateModel model;
  const auto grid = make_grid(0.0, 90.0, 90.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_chi(45.0, 60.0, 180.0, model, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK(BM_SweepChi)->Arg(180)->Arg(1800);

static void BM_SimulateCounts(benchmark::State& state) {
  const SweepResult sweep = sweep_chi(45.0, 60.0, 180.0, RateModel{}, make_grid(0.0, 90.0, 0.5));
  const NoiseOptions noise{1.0, 7, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(simulate_counts(sweep, noise));
}
BENCHMARK(BM_SimulateCounts);

BENCHMARK_MAIN();
