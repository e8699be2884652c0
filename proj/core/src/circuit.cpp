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

#include "qsp/circuit.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "qsp/error.hpp"

namespace qsp {
namespace {

int ceil_log2(std::uint64_t v) {
    int bits = 0;
    while ((std::uint64_t{1} << bits) < v) ++bits;
    return bits;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void parse_fail(int line, const std::string &what) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

double parse_real(int line, const std::string &s) {
    char *end = nullptr;
    errno = 0;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) parse_fail(line, "bad number '" + s + "'");
    return v;
}

long parse_int(int line, const std::string &s) {
    char *end = nullptr;
    errno = 0;
    long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) parse_fail(line, "bad integer '" + s + "'");
    return v;
}

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH:
            return "H";
        case GateKind::kX:
            return "X";
        case GateKind::kI:
            return "I";
        case GateKind::kRz:
            return "RZ";
        case GateKind::kCNot:
            return "CNOT";
        case GateKind::kToffoli:
            return "TOFFOLI";
    }
    return "?";
}

int GateOp::arity() const {
    switch (kind) {
        case GateKind::kCNot:
            return 2;
        case GateKind::kToffoli:
            return 3;
        default:
            return 1;
    }
}

RegisterLayout RegisterLayout::symmetric(int n) {
    if (n < 2) throw Error(ErrorCode::kInvalidArgument, "layout needs n >= 2");
    return {n, ceil_log2(static_cast<std::uint64_t>(n) + 1)};
}

RegisterLayout RegisterLayout::general(int n, int M) {
    if (n < 2 || M < 0) throw Error(ErrorCode::kInvalidArgument, "layout needs n >= 2 and M >= 0");
    return {n, ceil_log2(static_cast<std::uint64_t>(M) + 1) + 1};
}

void GateCircuit::append(const GateCircuit &sub) {
    const std::size_t offset = ops.size();
    ops.insert(ops.end(), sub.ops.begin(), sub.ops.end());
    for (auto b : sub.blocks) {
        b.begin += offset;
        b.end += offset;
        blocks.push_back(std::move(b));
    }
    global_phase += sub.global_phase;
}

void GateCircuit::close_block(std::string kind, std::size_t begin, std::optional<std::uint64_t> expected) {
    blocks.push_back({std::move(kind), begin, ops.size(), expected});
}

GateTally gate_count(const std::vector<GateOp> &ops) {
    GateTally t;
    for (const auto &op : ops) ++t.by_kind[op.kind];
    t.total = ops.size();
    return t;
}

GateTally gate_count(const GateCircuit &circuit) { return gate_count(circuit.ops); }

std::string write_circuit(const GateCircuit &circuit) {
    std::ostringstream out;
    out << "# qsp-circuit 1\n";
    out << "# layout n=" << circuit.layout.n_main << " m=" << circuit.layout.m_sum << "\n";
    out << "# global_phase " << format_real(circuit.global_phase) << "\n";
    for (const auto &[key, value] : circuit.metadata) out << "# meta " << key << ' ' << value << "\n";
    for (const auto &b : circuit.blocks) {
        out << "# block " << b.kind << ' ' << b.begin << ' ' << b.end << ' ';
        if (b.expected) {
            out << *b.expected;
        } else {
            out << '-';
        }
        out << "\n";
    }
    for (const auto &op : circuit.ops) {
        out << gate_name(op.kind) << ' ';
        for (int i = 0; i < op.arity(); ++i) {
            if (i) out << ',';
            out << op.qubits[i];
        }
        if (op.kind == GateKind::kRz) out << ',' << format_real(op.angle);
        out << "\n";
    }
    return out.str();
}

GateCircuit read_circuit(std::string_view text) {
    GateCircuit c;
    bool have_layout = false;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "#") {
            std::string key;
            ls >> key;
            if (key == "layout") {
                std::string a, b;
                ls >> a >> b;
                if (a.rfind("n=", 0) != 0 || b.rfind("m=", 0) != 0) parse_fail(line_no, "expected 'layout n=<n> m=<m>'");
                c.layout.n_main = static_cast<int>(parse_int(line_no, a.substr(2)));
                c.layout.m_sum = static_cast<int>(parse_int(line_no, b.substr(2)));
                if (c.layout.n_main < 1 || c.layout.m_sum < 1) parse_fail(line_no, "layout sizes must be positive");
                have_layout = true;
            } else if (key == "global_phase") {
                std::string v;
                ls >> v;
                c.global_phase = parse_real(line_no, v);
            } else if (key == "meta") {
                std::string k, v;
                ls >> k;
                std::getline(ls >> std::ws, v);
                c.metadata[k] = v;
            } else if (key == "block") {
                std::string kind, begin, end, expected;
                ls >> kind >> begin >> end >> expected;
                Block b{kind, static_cast<std::size_t>(parse_int(line_no, begin)),
                        static_cast<std::size_t>(parse_int(line_no, end)), std::nullopt};
                if (expected.empty()) parse_fail(line_no, "block line needs kind, begin, end, expected");
                if (expected != "-") b.expected = static_cast<std::uint64_t>(parse_int(line_no, expected));
                c.blocks.push_back(std::move(b));
            }
            // Other comment lines are ignored.
            continue;
        }
        if (head.front() == '#') continue;
        if (!have_layout) parse_fail(line_no, "gate before the '# layout' header");

        std::string args;
        ls >> args;
        std::string extra;
        if (ls >> extra) parse_fail(line_no, "unexpected token '" + extra + "'");
        auto parts = split_commas(args);
        static const std::map<std::string, GateKind> kKinds = {
            {"H", GateKind::kH},    {"X", GateKind::kX},       {"I", GateKind::kI},
            {"RZ", GateKind::kRz}, {"CNOT", GateKind::kCNot}, {"TOFFOLI", GateKind::kToffoli}};
        auto kind = kKinds.find(head);
        if (kind == kKinds.end()) parse_fail(line_no, "unknown gate '" + head + "'");
        GateOp op;
        op.kind = kind->second;
        const auto qubits = static_cast<std::size_t>(op.arity());
        const std::size_t expected_parts = qubits + (op.kind == GateKind::kRz ? 1 : 0);
        if (parts.size() != expected_parts) parse_fail(line_no, "wrong operand count for " + head);
        for (std::size_t i = 0; i < qubits; ++i) {
            long q = parse_int(line_no, parts[i]);
            if (q < 0 || q >= c.layout.total()) parse_fail(line_no, "qubit " + parts[i] + " outside the layout");
            op.qubits[i] = static_cast<int>(q);
        }
        for (std::size_t i = 0; i < qubits; ++i) {
            for (std::size_t j = i + 1; j < qubits; ++j) {
                if (op.qubits[i] == op.qubits[j]) parse_fail(line_no, "repeated qubit in " + head);
            }
        }
        if (op.kind == GateKind::kRz) op.angle = parse_real(line_no, parts.back());
        c.ops.push_back(op);
    }
    if (!have_layout) throw Error(ErrorCode::kParse, "missing '# layout' header");
    for (const auto &b : c.blocks) {
        if (b.begin > b.end || b.end > c.ops.size()) throw Error(ErrorCode::kParse, "block range outside the circuit");
    }
    return c;
}

std::optional<bool> AuditRow::match() const {
    if (!expected) return std::nullopt;
    return *expected == count;
}

std::vector<AuditRow> audit(const GateCircuit &circuit) {
    std::vector<AuditRow> rows;
    auto tally = gate_count(circuit);
    for (const auto &[kind, count] : tally.by_kind) {
        rows.push_back({std::string("gate:") + gate_name(kind), count, count, std::nullopt});
    }
    rows.push_back({"total", 1, tally.total, std::nullopt});

    std::map<std::tuple<std::string, std::uint64_t, std::optional<std::uint64_t>>, std::uint64_t> groups;
    for (const auto &b : circuit.blocks) ++groups[{b.kind, b.size(), b.expected}];
    for (const auto &[key, instances] : groups) {
        rows.push_back({std::get<0>(key), instances, std::get<1>(key), std::get<2>(key)});
    }
    return rows;
}

std::string audit_table(const std::vector<AuditRow> &rows) {
    std::ostringstream out;
    out << "variant\tinstances\tcount\texpected\tmatch\n";
    for (const auto &r : rows) {
        out << r.variant << '\t' << r.instances << '\t' << r.count << '\t';
        if (r.expected) {
            out << *r.expected;
        } else {
            out << '-';
        }
        out << '\t';
        auto m = r.match();
        out << (m ? (*m ? "yes" : "no") : "-") << "\n";
    }
    return out.str();
}

}  // namespace qsp
