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

#include "qsp/networks.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "qsp/error.hpp"

namespace qsp {
namespace {

void check_qubit(const RegisterLayout &layout, int q) {
    if (q < 0 || q >= layout.total()) {
        throw Error(ErrorCode::kIndexOutOfRange, "qubit " + std::to_string(q) + " outside a layout of " +
                                                     std::to_string(layout.total()) + " qubits");
    }
}

void check_distinct(std::vector<int> qubits) {
    std::sort(qubits.begin(), qubits.end());
    if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
        throw Error(ErrorCode::kInvalidArgument, "a gate network was given the same qubit twice");
    }
}

/// Barenco et al. style linear chain on k >= 3 controls with k - 2 borrowed
/// qubits: 4(k - 2) Toffolis.
void append_chain(GateCircuit &c, const std::vector<int> &ctl, int target, const std::vector<int> &anc) {
    const int k = static_cast<int>(ctl.size());
    for (int pass = 0; pass < 2; ++pass) {
        c.add(GateOp::toffoli(ctl[k - 1], anc[k - 3], target));
        for (int i = k - 2; i >= 2; --i) c.add(GateOp::toffoli(ctl[i], anc[i - 2], anc[i - 1]));
        c.add(GateOp::toffoli(ctl[0], ctl[1], anc[0]));
        for (int i = 2; i <= k - 2; ++i) c.add(GateOp::toffoli(ctl[i], anc[i - 2], anc[i - 1]));
    }
}

void append_lambda1_rz(GateCircuit &c, int control, int target, double beta) {
    c.add(GateOp::rz(target, beta / 2));
    c.add(GateOp::cnot(control, target));
    c.add(GateOp::rz(target, -beta / 2));
    c.add(GateOp::cnot(control, target));
}

}  // namespace

std::uint64_t adder1_count(int n, int m) { return static_cast<std::uint64_t>(n) * (3 * m - 2); }
std::uint64_t lambda_rz_count(int n_controls) { return 8 * (2 * static_cast<std::uint64_t>(n_controls) - 7); }
std::uint64_t selective_phase_count(int m) { return 2 * (9 * static_cast<std::uint64_t>(m) - 28); }
std::uint64_t grover_d_count(int n) { return 4 * (5 * static_cast<std::uint64_t>(n) - 14); }

GateCircuit build_ghz(int n) {
    if (n < 2) throw Error(ErrorCode::kInvalidArgument, "GHZ needs n >= 2");
    GateCircuit c;
    c.layout = RegisterLayout::symmetric(n);
    c.add(GateOp::h(0));
    for (int k = 1; k < n; ++k) c.add(GateOp::cnot(0, k));
    c.close_block("ghz", 0, static_cast<std::uint64_t>(n));
    return c;
}

GateCircuit adder2(const RegisterLayout &layout, int x_index) {
    if (x_index < 0 || x_index >= layout.n_main) throw Error(ErrorCode::kIndexOutOfRange, "adder-2 main index");
    const int m = layout.m_sum;
    const int x = layout.main(x_index);
    GateCircuit c;
    c.layout = layout;
    if (m == 1) {
        c.add(GateOp::cnot(x, layout.sum(0)));
        c.close_block("adder2", 0, 1);
        return c;
    }
    // Carry C_j = X and S_0 and ... and S_{j-1}.
    c.add(GateOp::toffoli(layout.sum(0), x, layout.carry(1)));
    for (int j = 2; j <= m - 1; ++j) c.add(GateOp::toffoli(layout.carry(j - 1), layout.sum(j - 1), layout.carry(j)));
    // Flip the high bits top-down, uncomputing each carry before its input bit changes.
    for (int j = m - 1; j >= 2; --j) {
        c.add(GateOp::cnot(layout.carry(j), layout.sum(j)));
        c.add(GateOp::toffoli(layout.carry(j - 1), layout.sum(j - 1), layout.carry(j)));
    }
    c.add(GateOp::cnot(layout.carry(1), layout.sum(1)));
    c.add(GateOp::toffoli(layout.sum(0), x, layout.carry(1)));
    c.add(GateOp::cnot(x, layout.sum(0)));
    c.close_block("adder2", 0, static_cast<std::uint64_t>(3 * m - 2));
    return c;
}

GateCircuit adder1_uf(const RegisterLayout &layout) {
    GateCircuit c;
    c.layout = layout;
    for (int i = 0; i < layout.n_main; ++i) c.append(adder2(layout, i));
    c.close_block("adder1", 0, adder1_count(layout.n_main, layout.m_sum));
    return c;
}

GateCircuit adder1_uf_inverse(const RegisterLayout &layout) {
    GateCircuit c = inverse_gates(adder1_uf(layout));
    c.close_block("adder1-inverse", 0, adder1_count(layout.n_main, layout.m_sum));
    return c;
}

std::uint64_t general_code(const RegisterLayout &layout, int k, bool plus) {
    return static_cast<std::uint64_t>(k) + (plus ? 0 : std::uint64_t{1} << (layout.m_sum - 1));
}

GateCircuit lookup_uf(const RegisterLayout &layout, const ClassStructure &structure) {
    if (structure.n() != layout.n_main) throw Error(ErrorCode::kInvalidArgument, "class table and layout disagree on n");
    const int n = layout.n_main;
    GateCircuit c;
    c.layout = layout;
    std::vector<int> main(n);
    for (int i = 0; i < n; ++i) main[i] = layout.main(i);
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < dim; ++x) {
        auto code = general_code(layout, structure.class_of(x), structure.in_plus_half(x));
        if (code == 0) continue;
        for (int i = 0; i < n; ++i) {
            if (!((x >> i) & 1)) c.add(GateOp::x(layout.main(i)));
        }
        for (int j = 0; j < layout.m_sum; ++j) {
            if (!((code >> j) & 1)) continue;
            std::vector<int> free;
            for (int q = n; q < layout.total(); ++q) {
                if (q != layout.sum(j)) free.push_back(q);
            }
            append_mcx(c, main, layout.sum(j), free);
        }
        for (int i = 0; i < n; ++i) {
            if (!((x >> i) & 1)) c.add(GateOp::x(layout.main(i)));
        }
    }
    c.close_block("uf-lookup", 0);
    return c;
}

GateCircuit inverse_gates(const GateCircuit &circuit) {
    GateCircuit c;
    c.layout = circuit.layout;
    c.global_phase = -circuit.global_phase;
    c.ops.assign(circuit.ops.rbegin(), circuit.ops.rend());
    for (auto &op : c.ops) {
        if (op.kind == GateKind::kRz) op.angle = -op.angle;
    }
    return c;
}

void append_mcx(GateCircuit &circuit, const std::vector<int> &controls, int target, const std::vector<int> &free) {
    const int k = static_cast<int>(controls.size());
    if (k == 0) {
        circuit.add(GateOp::x(target));
        return;
    }
    if (k == 1) {
        circuit.add(GateOp::cnot(controls[0], target));
        return;
    }
    if (k == 2) {
        circuit.add(GateOp::toffoli(controls[0], controls[1], target));
        return;
    }
    if (static_cast<int>(free.size()) >= k - 2) {
        append_chain(circuit, controls, target, free);
        return;
    }
    if (free.empty()) throw Error(ErrorCode::kNoIdleQubit, "multi-controlled X needs a borrowed qubit");

    // Split around one borrowed qubit b:
    //   [Λ(g1 -> b), Λ(g2 + b -> t)] twice  ==  Λ(g1 + g2 -> t), b restored.
    const int b = free[0];
    const std::vector<int> others(free.begin() + 1, free.end());
    const int m1 = (k + 1) / 2;
    const std::vector<int> g1(controls.begin(), controls.begin() + m1);
    std::vector<int> g2(controls.begin() + m1, controls.end());

    std::vector<int> free1 = g2;
    free1.push_back(target);
    free1.insert(free1.end(), others.begin(), others.end());
    std::vector<int> ctl2 = g2;
    ctl2.push_back(b);
    std::vector<int> free2 = g1;
    free2.insert(free2.end(), others.begin(), others.end());

    for (int pass = 0; pass < 2; ++pass) {
        append_mcx(circuit, g1, b, free1);
        append_mcx(circuit, ctl2, target, free2);
    }
}

int idle_qubit(const RegisterLayout &layout, const std::vector<int> &busy) {
    auto is_busy = [&](int q) { return std::find(busy.begin(), busy.end(), q) != busy.end(); };
    for (int j = 1; j < layout.m_sum; ++j) {
        if (!is_busy(layout.carry(j))) return layout.carry(j);
    }
    for (int j = 0; j < layout.m_sum; ++j) {
        if (!is_busy(layout.sum(j))) return layout.sum(j);
    }
    for (int i = 0; i < layout.n_main; ++i) {
        if (!is_busy(layout.main(i))) return layout.main(i);
    }
    throw Error(ErrorCode::kNoIdleQubit, "every qubit of the layout is in use");
}

GateCircuit lambda_n_rz(const RegisterLayout &layout, const std::vector<int> &controls, int target, double alpha) {
    for (int q : controls) check_qubit(layout, q);
    check_qubit(layout, target);
    std::vector<int> busy = controls;
    busy.push_back(target);
    check_distinct(busy);
    const int idle = idle_qubit(layout, busy);

    const int nc = static_cast<int>(controls.size());
    GateCircuit c;
    c.layout = layout;
    if (nc == 0) {
        c.add(GateOp::rz(target, alpha));
    } else if (nc == 1) {
        append_lambda1_rz(c, controls[0], target, alpha);
    } else {
        // Λ_{n-1}(σx) . Λ_1(R_z(-α/2)) . Λ_{n-1}(σx) . Λ_1(R_z(α/2)), with the
        // last control borrowed as the spare qubit of the Λ_{n-1}(σx) networks.
        const std::vector<int> rest(controls.begin(), controls.end() - 1);
        const int last = controls.back();
        std::vector<int> free{last};
        if (nc < 6) free.push_back(idle);
        append_mcx(c, rest, target, free);
        append_lambda1_rz(c, last, target, -alpha / 2);
        append_mcx(c, rest, target, free);
        append_lambda1_rz(c, last, target, alpha / 2);
    }
    std::optional<std::uint64_t> expected;
    if (nc >= 6) expected = lambda_rz_count(nc);
    c.close_block("lambda-rz", 0, expected);
    return c;
}

GateCircuit selective_phase(const RegisterLayout &layout, const std::vector<int> &controls, std::uint64_t pattern,
                            double theta) {
    const int nc = static_cast<int>(controls.size());
    if (nc < 64 && (pattern >> nc) != 0) throw Error(ErrorCode::kInvalidArgument, "pattern wider than the controls");
    for (int q : controls) {
        if (q == layout.kickback()) throw Error(ErrorCode::kInvalidArgument, "the kickback qubit cannot be a control");
    }
    GateCircuit c;
    c.layout = layout;
    auto boxes = [&] {
        for (int i = 0; i < nc; ++i) {
            c.add((pattern >> i) & 1 ? GateOp::id(controls[i]) : GateOp::x(controls[i]));
        }
    };
    boxes();
    c.append(lambda_n_rz(layout, controls, layout.kickback(), 2 * theta));
    boxes();
    std::optional<std::uint64_t> expected;
    if (nc >= 6) expected = selective_phase_count(nc);
    c.close_block("selective-phase", 0, expected);
    return c;
}

GateCircuit selective_phase(const RegisterLayout &layout, std::uint64_t pattern, double theta) {
    std::vector<int> controls;
    for (int j = 0; j < layout.m_sum; ++j) controls.push_back(layout.sum(j));
    return selective_phase(layout, controls, pattern, theta);
}

GateCircuit grover_d_network(const RegisterLayout &layout) {
    const int n = layout.n_main;
    GateCircuit c;
    c.layout = layout;
    std::vector<int> main(n);
    for (int i = 0; i < n; ++i) main[i] = layout.main(i);
    for (int q : main) c.add(GateOp::h(q));
    for (int q : main) c.add(GateOp::x(q));
    c.append(lambda_n_rz(layout, main, layout.kickback(), 2 * std::numbers::pi));
    for (int q : main) c.add(GateOp::x(q));
    for (int q : main) c.add(GateOp::h(q));
    c.global_phase += std::numbers::pi;
    std::optional<std::uint64_t> expected;
    if (n >= 6) expected = grover_d_count(n);
    c.close_block("grover-d", 0, expected);
    return c;
}

}  // namespace qsp
