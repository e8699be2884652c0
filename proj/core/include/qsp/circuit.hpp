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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsp {

enum class GateKind { kH, kX, kI, kRz, kCNot, kToffoli };

const char *gate_name(GateKind kind);

/// One elementary gate. Rz(angle) = diag(e^{i angle/2}, e^{-i angle/2}).
/// For CNot and Toffoli the last qubit is the target.
struct GateOp {
    GateKind kind = GateKind::kI;
    std::array<int, 3> qubits{-1, -1, -1};
    double angle = 0.0;

    int arity() const;

    static GateOp h(int q) { return {GateKind::kH, {q, -1, -1}, 0.0}; }
    static GateOp x(int q) { return {GateKind::kX, {q, -1, -1}, 0.0}; }
    static GateOp id(int q) { return {GateKind::kI, {q, -1, -1}, 0.0}; }
    static GateOp rz(int q, double angle) { return {GateKind::kRz, {q, -1, -1}, angle}; }
    static GateOp cnot(int c, int t) { return {GateKind::kCNot, {c, t, -1}, 0.0}; }
    static GateOp toffoli(int c1, int c2, int t) { return {GateKind::kToffoli, {c1, c2, t}, 0.0}; }

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// Qubit numbering: main X_1..X_n -> 0..n-1, sum S_0..S_{m-1} -> n..n+m-1,
/// carries C_1..C_{m-1} -> n+m..n+2m-2, kickback -> n+2m-1.
struct RegisterLayout {
    int n_main = 0;
    int m_sum = 0;

    /// m = ceil(log2(n + 1)).
    static RegisterLayout symmetric(int n);
    /// m = ceil(log2(M + 1)) + 1; (k, -) is encoded as k + 2^{m-1}.
    static RegisterLayout general(int n, int M);

    int main(int i) const { return i; }
    int sum(int j) const { return n_main + j; }
    /// j in 1..m-1.
    int carry(int j) const { return n_main + m_sum + j - 1; }
    int kickback() const { return n_main + 2 * m_sum - 1; }
    int total() const { return n_main + 2 * m_sum; }

    friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;
};

/// A named sub-network occupying ops[begin, end). `expected` is the closed
/// form gate count when one applies to this instance.
struct Block {
    std::string kind;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::optional<std::uint64_t> expected;

    std::uint64_t size() const { return end - begin; }
};

struct GateCircuit {
    RegisterLayout layout;
    std::vector<GateOp> ops;
    /// Nested blocks, recorded in closing order.
    std::vector<Block> blocks;
    /// Phase e^{i global_phase} that the gates omit (e.g. pi per -D network).
    double global_phase = 0.0;
    /// Free-form key/value metadata written to the circuit header.
    std::map<std::string, std::string> metadata;

    void add(const GateOp &op) { ops.push_back(op); }
    /// Appends `sub`, carrying over its blocks and global phase.
    void append(const GateCircuit &sub);
    /// Records a block spanning ops[begin, ops.size()).
    void close_block(std::string kind, std::size_t begin, std::optional<std::uint64_t> expected = std::nullopt);
};

struct GateTally {
    std::map<GateKind, std::uint64_t> by_kind;
    std::uint64_t total = 0;

    std::uint64_t count(GateKind k) const {
        auto it = by_kind.find(k);
        return it == by_kind.end() ? 0 : it->second;
    }
};

GateTally gate_count(const std::vector<GateOp> &ops);
GateTally gate_count(const GateCircuit &circuit);

/// Text form: '#' header lines carrying layout, global phase, metadata and
/// blocks, then one gate per line as "NAME q[,q[,q]][,angle]" with angles in
/// radians to 17 significant digits.
std::string write_circuit(const GateCircuit &circuit);
GateCircuit read_circuit(std::string_view text);

struct AuditRow {
    std::string variant;
    std::uint64_t instances = 0;
    std::uint64_t count = 0;
    std::optional<std::uint64_t> expected;

    /// Unset when no closed form applies.
    std::optional<bool> match() const;
};

/// Per-gate-kind totals, then one row per (block kind, size, expected) group.
std::vector<AuditRow> audit(const GateCircuit &circuit);
/// Tab-separated: variant, instances, count, expected, match.
std::string audit_table(const std::vector<AuditRow> &rows);

}  // namespace qsp
