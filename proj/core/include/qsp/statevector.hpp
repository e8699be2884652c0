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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qsp/circuit.hpp"
#include "qsp/class_model.hpp"

namespace qsp {

inline constexpr int kDefaultQubitCap = 22;

/// Dense state over q qubits; basis index bit q is qubit q.
class Statevector {
   public:
    /// |0...0>. Throws CapExceeded when qubits > cap.
    explicit Statevector(int qubits, int cap = kDefaultQubitCap);
    static Statevector from_amplitudes(std::vector<Complex> amplitudes, int cap = kDefaultQubitCap);

    int qubits() const { return qubits_; }
    std::uint64_t dimension() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t index) const { return amps_.at(index); }

    /// Throws IndexOutOfRange for qubits outside the state.
    void apply_gate(const GateOp &op);
    /// amps[x] *= e^{i theta} wherever selector(low n_main bits of x).
    void apply_diag_phase(int n_main, const std::function<bool(std::uint64_t)> &selector, double theta);
    /// amps <- 2 mean - amps over the low n_main qubits, separately for each
    /// configuration of the remaining qubits.
    void apply_inversion_about_average(int n_main);
    void apply_global_phase(double phase);

    double norm_squared() const;

   private:
    int qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Applies every gate, then the circuit's global phase. Throws
/// InvalidArgument when the layout is wider than the state.
void run_circuit(Statevector &state, const GateCircuit &circuit);

struct FidelityReport {
    /// |<target|P state>|^2 where P projects the non-main qubits onto |0>.
    double fidelity = 0.0;
    /// 1 - probability that every non-main qubit reads 0.
    double leakage = 0.0;
};

/// `target` holds 2^{n_main} amplitudes indexed by the main register.
FidelityReport fidelity(const Statevector &state, int n_main, std::span<const Complex> target);

/// Lines "bits re im" (qubit 0 leftmost) for every amplitude with
/// |amp| > threshold.
std::string dump_amplitudes(const Statevector &state, double threshold = 0.0);

/// Full 2^n amplitude vector of a symmetric or general target.
std::vector<Complex> target_amplitudes(const SymmetricTarget &target);
std::vector<Complex> target_amplitudes(const GeneralClassSpec &target);

}  // namespace qsp
