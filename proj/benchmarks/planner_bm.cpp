// Copyright 2026 The qsp Authors
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

#include "bench_targets.hpp"
#include "qsp/planner.hpp"

namespace qsp {
namespace {

void BM_PlanRandomTarget(benchmark::State &state) {
    const auto target = bench::random_target(static_cast<int>(state.range(0)));
    std::size_t steps = 0;
    for (auto _ : state) {
        auto plan = plan_reduce(target);
        steps = plan.steps.size();
        benchmark::DoNotOptimize(plan);
    }
    state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_PlanRandomTarget)->DenseRange(4, 24, 4);

void BM_PlanGhz(benchmark::State &state) {
    const auto target = bench::ghz_target(static_cast<int>(state.range(0)));
    std::size_t rpid = 0;
    for (auto _ : state) {
        auto plan = plan_reduce(target);
        rpid = plan.count<RpiD>();
        benchmark::DoNotOptimize(plan);
    }
    state.counters["rpid"] = static_cast<double>(rpid);
}
BENCHMARK(BM_PlanGhz)->DenseRange(4, 24, 4);

void BM_ReplayHalfClasses(benchmark::State &state) {
    const auto target = bench::random_target(static_cast<int>(state.range(0)));
    const auto plan = reverse_plan(plan_reduce(target));
    for (auto _ : state) {
        auto s = HalfClassState::uniform(plan.structure);
        for (const auto &step : plan.steps) s.apply(step, plan.direction);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_ReplayHalfClasses)->DenseRange(4, 24, 4);

}  // namespace
}  // namespace qsp
