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

#include "qsp/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qsp/error.hpp"

namespace qsp {
namespace {

/// Spreads the bits of i around zero bits at the ascending positions `pos`.
inline std::uint64_t insert_zeros(std::uint64_t i, const int *pos, int count) {
    for (int k = 0; k < count; ++k) {
        const std::uint64_t low = i & ((std::uint64_t{1} << pos[k]) - 1);
        i = ((i >> pos[k]) << (pos[k] + 1)) | low;
    }
    return i;
}

void check_cap(int qubits, int cap) {
    if (qubits < 0) throw Error(ErrorCode::kInvalidArgument, "negative qubit count");
    if (qubits > cap) {
        throw Error(ErrorCode::kCapExceeded, std::to_string(qubits) + " qubits exceed the simulation cap of " +
                                                 std::to_string(cap));
    }
}

}  // namespace

Statevector::Statevector(int qubits, int cap) : qubits_(qubits) {
    check_cap(qubits, cap);
    amps_.assign(std::uint64_t{1} << qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes, int cap) {
    const auto size = amplitudes.size();
    if (size == 0 || (size & (size - 1)) != 0) {
        throw Error(ErrorCode::kInvalidArgument, "amplitude count must be a power of two");
    }
    int qubits = 0;
    while ((std::uint64_t{1} << qubits) < size) ++qubits;
    check_cap(qubits, cap);
    Statevector s(0, cap);
    s.qubits_ = qubits;
    s.amps_ = std::move(amplitudes);
    return s;
}

void Statevector::apply_gate(const GateOp &op) {
    const int arity = op.arity();
    for (int i = 0; i < arity; ++i) {
        if (op.qubits[i] < 0 || op.qubits[i] >= qubits_) {
            throw Error(ErrorCode::kIndexOutOfRange, std::string(gate_name(op.kind)) + " on qubit " +
                                                         std::to_string(op.qubits[i]) + " of a " +
                                                         std::to_string(qubits_) + "-qubit state");
        }
        for (int j = 0; j < i; ++j) {
            if (op.qubits[i] == op.qubits[j]) throw Error(ErrorCode::kInvalidArgument, "repeated qubit in a gate");
        }
    }

    Complex *a = amps_.data();
    const std::uint64_t dim = amps_.size();
    switch (op.kind) {
        case GateKind::kI:
            return;
        case GateKind::kH: {
            const int q = op.qubits[0];
            const std::uint64_t bit = std::uint64_t{1} << q;
            const double r = std::sqrt(0.5);
            for (std::uint64_t i = 0; i < dim / 2; ++i) {
                const std::uint64_t i0 = insert_zeros(i, &q, 1);
                const Complex u = a[i0], v = a[i0 | bit];
                a[i0] = r * (u + v);
                a[i0 | bit] = r * (u - v);
            }
            return;
        }
        case GateKind::kX: {
            const int q = op.qubits[0];
            const std::uint64_t bit = std::uint64_t{1} << q;
            for (std::uint64_t i = 0; i < dim / 2; ++i) {
                const std::uint64_t i0 = insert_zeros(i, &q, 1);
                std::swap(a[i0], a[i0 | bit]);
            }
            return;
        }
        case GateKind::kRz: {
            const std::uint64_t bit = std::uint64_t{1} << op.qubits[0];
            const Complex p0 = std::polar(1.0, op.angle / 2);
            const Complex p1 = std::conj(p0);
            for (std::uint64_t i = 0; i < dim; ++i) a[i] *= (i & bit) ? p1 : p0;
            return;
        }
        case GateKind::kCNot:
        case GateKind::kToffoli: {
            int pos[3];
            std::uint64_t control_mask = 0;
            for (int i = 0; i < arity; ++i) pos[i] = op.qubits[i];
            for (int i = 0; i < arity - 1; ++i) control_mask |= std::uint64_t{1} << op.qubits[i];
            const std::uint64_t tbit = std::uint64_t{1} << op.qubits[arity - 1];
            std::sort(pos, pos + arity);
            for (std::uint64_t i = 0; i < (dim >> arity); ++i) {
                const std::uint64_t base = insert_zeros(i, pos, arity) | control_mask;
                std::swap(a[base], a[base | tbit]);
            }
            return;
        }
    }
}

void Statevector::apply_diag_phase(int n_main, const std::function<bool(std::uint64_t)> &selector, double theta) {
    if (n_main < 0 || n_main > qubits_) throw Error(ErrorCode::kIndexOutOfRange, "main register wider than state");
    const std::uint64_t mask = (std::uint64_t{1} << n_main) - 1;
    const Complex phase = std::polar(1.0, theta);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (selector(i & mask)) amps_[i] *= phase;
    }
}

void Statevector::apply_inversion_about_average(int n_main) {
    if (n_main < 0 || n_main > qubits_) throw Error(ErrorCode::kIndexOutOfRange, "main register wider than state");
    const std::uint64_t block = std::uint64_t{1} << n_main;
    for (std::uint64_t start = 0; start < amps_.size(); start += block) {
        Complex sum = 0.0;
        for (std::uint64_t i = 0; i < block; ++i) sum += amps_[start + i];
        const Complex twice_mean = 2.0 * sum / static_cast<double>(block);
        for (std::uint64_t i = 0; i < block; ++i) amps_[start + i] = twice_mean - amps_[start + i];
    }
}

void Statevector::apply_global_phase(double phase) {
    const Complex p = std::polar(1.0, phase);
    for (auto &v : amps_) v *= p;
}

double Statevector::norm_squared() const {
    double s = 0.0;
    for (const auto &v : amps_) s += std::norm(v);
    return s;
}

void run_circuit(Statevector &state, const GateCircuit &circuit) {
    if (circuit.layout.total() > state.qubits()) {
        throw Error(ErrorCode::kInvalidArgument, "circuit layout has " + std::to_string(circuit.layout.total()) +
                                                     " qubits but the state has " + std::to_string(state.qubits()));
    }
    for (const auto &op : circuit.ops) state.apply_gate(op);
    if (circuit.global_phase != 0.0) state.apply_global_phase(circuit.global_phase);
}

FidelityReport fidelity(const Statevector &state, int n_main, std::span<const Complex> target) {
    if (n_main < 0 || n_main > state.qubits()) throw Error(ErrorCode::kIndexOutOfRange, "main register wider than state");
    const std::uint64_t block = std::uint64_t{1} << n_main;
    if (target.size() != block) throw Error(ErrorCode::kInvalidArgument, "target needs 2^n_main amplitudes");
    Complex inner = 0.0;
    double kept = 0.0;
    const auto amps = state.amplitudes();
    for (std::uint64_t x = 0; x < block; ++x) {
        inner += std::conj(target[x]) * amps[x];
        kept += std::norm(amps[x]);
    }
    FidelityReport r;
    // Rounding can push |<t|s>|^2 a few ulp past 1 for unit vectors.
    r.fidelity = std::min(1.0, std::norm(inner));
    r.leakage = std::max(0.0, state.norm_squared() - kept);
    return r;
}

std::string dump_amplitudes(const Statevector &state, double threshold) {
    std::ostringstream out;
    const auto amps = state.amplitudes();
    char buf[96];
    for (std::uint64_t x = 0; x < amps.size(); ++x) {
        if (std::abs(amps[x]) <= threshold && threshold > 0.0) continue;
        std::string bits(static_cast<std::size_t>(state.qubits()), '0');
        for (int q = 0; q < state.qubits(); ++q) {
            if ((x >> q) & 1) bits[q] = '1';
        }
        std::snprintf(buf, sizeof buf, " %.17g %.17g\n", amps[x].real(), amps[x].imag());
        out << bits << buf;
    }
    return out.str();
}

std::vector<Complex> target_amplitudes(const SymmetricTarget &target) {
    std::vector<Complex> out(std::uint64_t{1} << target.n);
    for (std::uint64_t x = 0; x < out.size(); ++x) out[x] = target.amplitude(x);
    return out;
}

std::vector<Complex> target_amplitudes(const GeneralClassSpec &target) {
    std::vector<Complex> out(std::uint64_t{1} << target.n);
    for (std::uint64_t x = 0; x < out.size(); ++x) out[x] = target.amplitude(x);
    return out;
}

}  // namespace qsp
