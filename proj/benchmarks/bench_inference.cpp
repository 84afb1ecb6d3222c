// Copyright 2026 The qbn Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "qbn/builtin.hpp"
#include "qbn/classical.hpp"
#include "qbn/phase_search.hpp"
#include "qbn/quantum.hpp"

namespace {

void BM_ClassicalBurglar(benchmark::State& state) {
  const auto net = qbn::builtin("burglar");
  const qbn::Evidence ev{{net.id("JohnCalls"), 0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbn::infer_classical(net, net.id("Burglar"), ev));
  }
}
BENCHMARK(BM_ClassicalBurglar);

void BM_QuantumQueryBuild(benchmark::State& state) {
  const auto net = qbn::builtin("burglar");
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbn::QuantumQuery(net, net.id("Burglar"), {}));
  }
}
BENCHMARK(BM_QuantumQueryBuild);

// One objective evaluation on a K = 8 query; the inner loop of every search.
void BM_QuantumEvaluate(benchmark::State& state) {
  const auto net = qbn::builtin("burglar");
  const qbn::QuantumQuery query(net, net.id("Burglar"), {});
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> phase(0.0, qbn::kTwoPi);
  std::vector<double> thetas(query.path_count());
  for (auto& t : thetas) t = phase(rng);
  const qbn::ThetaVector theta(thetas);
  for (auto _ : state) {
    benchmark::DoNotOptimize(query.probability(0, theta));
  }
}
BENCHMARK(BM_QuantumEvaluate);

void BM_GambleSweep(benchmark::State& state) {
  const auto net = qbn::builtin("gamble");
  const qbn::Evidence ev{{net.id("U"), 0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbn::sweep_shared_phase(net, net.id("G2"), ev, 1e-4));
  }
}
BENCHMARK(BM_GambleSweep)->Unit(benchmark::kMillisecond);

void BM_CoordinateAscent(benchmark::State& state) {
  const auto net = qbn::builtin("burglar");
  qbn::SearchOptions options;
  options.restarts = static_cast<std::size_t>(state.range(0));
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbn::grid_search(net, net.id("Burglar"), 0, {}, options));
  }
}
BENCHMARK(BM_CoordinateAscent)->Args({10, 1})->Args({100, 1})->Args({100, 4})->Unit(benchmark::kMillisecond);

void BM_ExhaustiveK4(benchmark::State& state) {
  const auto net = qbn::builtin("burglar");
  const qbn::Evidence ev{{net.id("Burglar"), 0}};
  qbn::SearchOptions options;
  options.strategy = qbn::SearchStrategy::Exhaustive;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbn::grid_search(net, net.id("MaryCalls"), 0, ev, options));
  }
}
BENCHMARK(BM_ExhaustiveK4)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
