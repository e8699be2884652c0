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
#include "qsp/compiler.hpp"
#include "qsp/statevector.hpp"

namespace qsp {
namespace {

void BM_CompilePlan(benchmark::State &state) {
    const auto plan = reverse_plan(plan_reduce(bench::random_target(static_cast<int>(state.range(0)))));
    std::size_t gates = 0;
    for (auto _ : state) {
        auto circuit = compile_plan(plan);
        gates = circuit.ops.size();
        benchmark::DoNotOptimize(circuit);
    }
    state.counters["gates"] = static_cast<double>(gates);
}
BENCHMARK(BM_CompilePlan)->DenseRange(4, 16, 4);

void BM_WriteCircuit(benchmark::State &state) {
    const auto circuit = compile_plan(reverse_plan(plan_reduce(bench::random_target(static_cast<int>(state.range(0))))));
    for (auto _ : state) {
        auto text = write_circuit(circuit);
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(BM_WriteCircuit)->DenseRange(4, 12, 4);

// The full gate-level simulation behind every end-to-end check.
void BM_SimulateCompiledTarget(benchmark::State &state) {
    const auto circuit = compile_plan(reverse_plan(plan_reduce(bench::random_target(static_cast<int>(state.range(0))))));
    for (auto _ : state) {
        Statevector s(circuit.layout.total());
        run_circuit(s, circuit);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.counters["qubits"] = circuit.layout.total();
    state.counters["gates"] = static_cast<double>(circuit.ops.size());
}
BENCHMARK(BM_SimulateCompiledTarget)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qsp
