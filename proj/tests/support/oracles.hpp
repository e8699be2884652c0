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

// Independent reference implementations used as test oracles. They favour
// obviousness over speed and share no code with the library's simulators.

#include <cstdint>
#include <random>
#include <vector>

#include "qsp/circuit.hpp"
#include "qsp/class_model.hpp"

namespace qsp::oracle {

/// Applies one gate by evaluating its definition at every output index.
std::vector<Complex> apply_gate(const GateOp &op, const std::vector<Complex> &in);

/// Runs the gates, then multiplies by e^{i global_phase}.
std::vector<Complex> run(const GateCircuit &circuit, std::vector<Complex> state);

/// Column-major 2^q x 2^q matrix of the circuit (including global phase).
std::vector<Complex> unitary(const GateCircuit &circuit, int qubits);

/// Largest |a_i - e^{i g} b_i| after choosing g from the largest entry of b.
double distance_up_to_phase(const std::vector<Complex> &a, const std::vector<Complex> &b);
double max_distance(const std::vector<Complex> &a, const std::vector<Complex> &b);

/// Diagonal of the controlled R_z(alpha): entries with every control set get
/// e^{+i alpha/2} or e^{-i alpha/2} by the target bit, the rest 1.
std::vector<Complex> controlled_rz_diagonal(int qubits, const std::vector<int> &controls, int target, double alpha);

/// Explicit matrix product with D_ij = 2/N - delta_ij on the low n qubits.
std::vector<Complex> grover_d(const std::vector<Complex> &in, int n);

/// Class of x by brute force: min(weight, n - weight).
int symmetric_class(std::uint64_t x, int n);

/// Random normalized target with nonnegative class values.
SymmetricTarget random_real_target(int n, std::mt19937_64 &rng);
SymmetricTarget random_complex_target(int n, std::mt19937_64 &rng);

/// Random classified state over the symmetric structure of n qubits.
ClassifiedState random_classified(int n, std::mt19937_64 &rng);

/// Classified state with `classes` classes of random even multiplicities
/// summing to 2^n and random positive values. With `skewed`, class 0 holds
/// at least 3/4 of the basis strings and the smallest value, the only
/// regime in which the merge condition can fail.
ClassifiedState random_partition_state(int n, int classes, bool skewed, std::mt19937_64 &rng);

/// Dense 2^n vector of a classified state with the classes laid out on
/// consecutive index blocks in class order.
std::vector<Complex> dense_blocks(const ClassifiedState &state);

/// Smallest and next-smallest class ids.
std::pair<int, int> min_pair(const ClassifiedState &state);

/// Random general class table with M + 1 classes over n qubits, 0 <= M <
/// 2^{n-1}: a random permutation of basis strings dealt into classes of
/// random even sizes.
std::vector<ClassLabel> random_class_table(int n, int M, std::mt19937_64 &rng);

}  // namespace qsp::oracle
