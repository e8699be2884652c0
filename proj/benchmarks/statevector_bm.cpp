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

#include "qsp/statevector.hpp"

namespace qsp {
namespace {

void BM_ApplyHadamard(benchmark::State &state) {
    const int qubits = static_cast<int>(state.range(0));
    Statevector s(qubits);
    int q = 0;
    for (auto _ : state) {
        s.apply_gate(GateOp::h(q));
        q = (q + 1) % qubits;
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplyHadamard)->DenseRange(10, 20, 5);

void BM_ApplyToffoli(benchmark::State &state) {
    const int qubits = static_cast<int>(state.range(0));
    Statevector s(qubits);
    for (int q = 0; q < qubits; ++q) s.apply_gate(GateOp::h(q));
    int q = 0;
    for (auto _ : state) {
        s.apply_gate(GateOp::toffoli(q, (q + 1) % qubits, (q + 2) % qubits));
        q = (q + 1) % qubits;
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplyToffoli)->DenseRange(10, 20, 5);

void BM_ApplyRz(benchmark::State &state) {
    const int qubits = static_cast<int>(state.range(0));
    Statevector s(qubits);
    int q = 0;
    for (auto _ : state) {
        s.apply_gate(GateOp::rz(q, 0.1));
        q = (q + 1) % qubits;
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplyRz)->DenseRange(10, 20, 5);

void BM_InversionAboutAverage(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    Statevector s(n);
    s.apply_gate(GateOp::h(0));
    for (auto _ : state) {
        s.apply_inversion_about_average(n);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_InversionAboutAverage)->DenseRange(8, 20, 4);

}  // namespace
}  // namespace qsp
