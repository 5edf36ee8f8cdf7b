// Copyright 2026 The obsdiam Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "obsdiam/compress.hpp"
#include "obsdiam/experiments.hpp"
#include "obsdiam/measure.hpp"
#include "obsdiam/observable_diameter.hpp"
#include "obsdiam/prokhorov.hpp"
#include "obsdiam/sampling.hpp"

namespace {

using namespace obsdiam;

void BM_PartialDiameter(benchmark::State& state) {
  Rng rng(1);
  std::vector<Rational> pos;
  for (int i = 0; i < state.range(0); ++i) pos.push_back(rng.uniform_rational(-100, 100, 16));
  const DiscreteMeasure mu = DiscreteMeasure::uniform(pos);
  const Rational alpha = ratio(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(partial_diameter(mu, alpha));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartialDiameter)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ClampConstruct(benchmark::State& state) {
  Rng rng(2);
  MeasureShape shape;
  shape.min_atoms = shape.max_atoms = static_cast<std::size_t>(state.range(0));
  const DiscreteMeasure mu = random_measure(rng, shape);
  for (auto _ : state) {
    benchmark::DoNotOptimize(clamp_construct(mu, ratio(1, 10), Rational(1)));
  }
}
BENCHMARK(BM_ClampConstruct)->Arg(4)->Arg(12)->Arg(48);

void BM_ObservableDiameterFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteMMSpace space = example_space(n, 1);
  const Screen screen = Screen::interval(-(n - 1), n - 1);
  const Rational kappa = family_default_kappa(n);
  std::uint64_t orders = 0;
  for (auto _ : state) {
    OdResult r = observable_diameter(space, screen, kappa);
    orders = r.orders_examined;
    benchmark::DoNotOptimize(r);
  }
  state.counters["orders"] = static_cast<double>(orders);
}
BENCHMARK(BM_ObservableDiameterFamily)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ObservableDiameterRandom(benchmark::State& state) {
  Rng rng(3);
  const FiniteMMSpace space = random_space(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        observable_diameter(space, Screen::interval(-1, 1), ratio(1, 2)));
  }
}
BENCHMARK(BM_ObservableDiameterRandom)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_GridOracle(benchmark::State& state) {
  const FiniteMMSpace space = example_space(2, 1);
  const Rational step = ratio(1, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        od_grid_oracle(space, Screen::interval(-1, 1), ratio(3, 5), step));
  }
}
BENCHMARK(BM_GridOracle)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Prokhorov(benchmark::State& state) {
  Rng rng(4);
  MeasureShape shape;
  shape.min_atoms = shape.max_atoms = static_cast<std::size_t>(state.range(0));
  const DiscreteMeasure mu = random_measure(rng, shape);
  const DiscreteMeasure nu = random_measure(rng, shape);
  for (auto _ : state) benchmark::DoNotOptimize(prokhorov_onesided(mu, nu));
}
BENCHMARK(BM_Prokhorov)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
