// Copyright 2026 The sticksoup Authors
//
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

#include <cmath>

#include "sticksoup/errors.hpp"
#include "sticksoup/events.hpp"
#include "sticksoup/exploration.hpp"
#include "sticksoup/soup.hpp"

namespace sticksoup {
namespace {

void BM_SampleDisk(benchmark::State& state) {
  const double r_min = 1.0 / static_cast<double>(state.range(0));
  const SoupParams params{0.5, 2.0, 1};
  std::uint64_t i = 0;
  std::int64_t sticks = 0;
  for (auto _ : state) {
    const auto c = sample_configuration(params, {{0, 0}, 1.0}, r_min, trial_seed(1, i++));
    sticks += static_cast<std::int64_t>(c.sticks.size());
    benchmark::DoNotOptimize(c.sticks.data());
  }
  state.counters["sticks"] = benchmark::Counter(static_cast<double>(sticks), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_SampleDisk)->Arg(10)->Arg(100);

void BM_SampleCircleHits(benchmark::State& state) {
  const SoupParams params{1.0, 2.0, 1};
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto c = sample_circle_hits(params, {{0, 0}, 1.0}, 1e-3, trial_seed(2, i++));
    benchmark::DoNotOptimize(c.sticks.data());
  }
}
BENCHMARK(BM_SampleCircleHits);

void BM_Explore(benchmark::State& state) {
  const double u = static_cast<double>(state.range(0)) / 10.0;
  const Box box({0, 0}, {1, 1});
  std::uint64_t i = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const auto c = sample_configuration({u, 2.0, 1}, {{0.5, 0.5}, std::sqrt(0.5)}, 0.02, trial_seed(3, i++));
    state.ResumeTiming();
    try {
      const auto e = explore(c, box);
      benchmark::DoNotOptimize(e.result.path.size());
    } catch (const DegeneracyError&) {
    }
  }
}
BENCHMARK(BM_Explore)->Arg(3)->Arg(10);

void BM_ArmEvent(benchmark::State& state) {
  const Annulus annulus({0, 0}, 1, 8);
  std::uint64_t i = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const auto c = sample_configuration({0.1, 2.0, 1}, {{0, 0}, 8.0}, 0.05, trial_seed(4, i++));
    state.ResumeTiming();
    benchmark::DoNotOptimize(arm_event(c, annulus));
  }
}
BENCHMARK(BM_ArmEvent);

}  // namespace
}  // namespace sticksoup

BENCHMARK_MAIN();
