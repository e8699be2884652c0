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
#include <vector>

#include "qsp/circuit.hpp"
#include "qsp/class_model.hpp"

namespace qsp {

/// H on qubit 0, then CNOT(0, k) for k = 1..n-1.
GateCircuit build_ghz(int n);

/// S <- S + X_{x_index} (mod 2^m) with a ripple of carries that ends at |0>:
/// 2(m-1) Toffoli and m CNOT gates.
GateCircuit adder2(const RegisterLayout &layout, int x_index);

/// |x>|S> -> |x>|S + popcount(x)> as n adder-2 networks;
/// n(3m - 2) gates in total.
GateCircuit adder1_uf(const RegisterLayout &layout);
/// Gate-reversed adder1_uf, i.e. S <- S - popcount(x).
GateCircuit adder1_uf_inverse(const RegisterLayout &layout);

/// |x>|S> -> |x>|S xor code(f(x))> for a general class table, with
/// code(k, +) = k and code(k, -) = k + 2^{m-1}. One multi-controlled X per
/// set code bit per basis string; intended for small n.
GateCircuit lookup_uf(const RegisterLayout &layout, const ClassStructure &structure);

/// Sum-register code of (k, plus) in general mode.
std::uint64_t general_code(const RegisterLayout &layout, int k, bool plus);

/// Reversed gate list with Rz angles negated; blocks are dropped.
GateCircuit inverse_gates(const GateCircuit &circuit);

/// X on `target` when every control is |1>. `free` lists qubits that may be
/// borrowed in any state and are restored afterwards. Uses the linear
/// Toffoli chain (4(k-2) Toffolis) when k-2 borrowed qubits are available,
/// and otherwise splits the controls around one borrowed qubit.
/// Throws NoIdleQubit when k >= 3 and `free` is empty.
void append_mcx(GateCircuit &circuit, const std::vector<int> &controls, int target, const std::vector<int> &free);

/// First qubit of the layout, other than `busy`, in the order carries, sum
/// qubits, main qubits. Throws NoIdleQubit if every qubit is busy.
int idle_qubit(const RegisterLayout &layout, const std::vector<int> &busy);

/// Controlled R_z(alpha) on `target` with controls `controls`. For six or
/// more controls the network has exactly 8(2 n_c - 7) gates: two
/// Λ_{n_c-1}(σx) of 8(n_c-4) Toffolis each, and two Λ_1(R_z) of 4 gates.
/// Requires an idle qubit in the layout (NoIdleQubit otherwise).
GateCircuit lambda_n_rz(const RegisterLayout &layout, const std::vector<int> &controls, int target, double alpha);

/// Multiplies the amplitude of every basis state whose `controls` read
/// `pattern` (bit i of pattern for controls[i]) by e^{i theta}. X/I boxes
/// select the pattern around Λ_c(R_z(2 theta)) on the kickback qubit, which
/// must be |0>. Exactly 2(9c - 28) gates for c >= 6 controls.
GateCircuit selective_phase(const RegisterLayout &layout, const std::vector<int> &controls, std::uint64_t pattern,
                            double theta);
/// selective_phase over the sum register S_0..S_{m-1}.
GateCircuit selective_phase(const RegisterLayout &layout, std::uint64_t pattern, double theta);

/// W X Λ_n(R_z(2 pi)) X W on the main register, which equals -D; the
/// circuit records a global phase of pi. 4(5n - 14) gates for n >= 6.
GateCircuit grover_d_network(const RegisterLayout &layout);

/// Closed-form gate counts.
std::uint64_t adder1_count(int n, int m);
std::uint64_t lambda_rz_count(int n_controls);
std::uint64_t selective_phase_count(int m);
std::uint64_t grover_d_count(int n);

}  // namespace qsp
