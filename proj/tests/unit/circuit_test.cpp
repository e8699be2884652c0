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

#include <gtest/gtest.h>

#include "qsp/circuit.hpp"
#include "qsp/error.hpp"
#include "qsp/networks.hpp"

using namespace qsp;

TEST(RegisterLayout, symmetric_widths_follow_log2) {
    auto l = RegisterLayout::symmetric(4);
    EXPECT_EQ(l.m_sum, 3);
    EXPECT_EQ(l.total(), 4 + 3 + 2 + 1);
    EXPECT_EQ(l.sum(0), 4);
    EXPECT_EQ(l.carry(1), 7);
    EXPECT_EQ(l.kickback(), 9);
    EXPECT_EQ(RegisterLayout::symmetric(8).m_sum, 4);
    EXPECT_EQ(RegisterLayout::symmetric(7).m_sum, 3);
    EXPECT_EQ(RegisterLayout::general(5, 2).m_sum, 3);
    EXPECT_EQ(RegisterLayout::general(5, 3).m_sum, 3);
    EXPECT_EQ(RegisterLayout::general(5, 4).m_sum, 4);
}

TEST(GateCount, tallies_by_kind) {
    auto c = build_ghz(5);
    auto t = gate_count(c);
    EXPECT_EQ(t.total, 5u);
    EXPECT_EQ(t.count(GateKind::kH), 1u);
    EXPECT_EQ(t.count(GateKind::kCNot), 4u);
    EXPECT_EQ(t.count(GateKind::kToffoli), 0u);
    EXPECT_EQ(gate_count(adder1_uf(RegisterLayout::symmetric(8))).total, 80u);
}

TEST(CircuitText, round_trip_preserves_everything) {
    auto layout = RegisterLayout::symmetric(6);
    GateCircuit c;
    c.layout = layout;
    c.append(selective_phase(layout, 0b101, 0.123456789012345678));
    c.append(grover_d_network(layout));
    c.metadata["note"] = "two words";
    auto text = write_circuit(c);
    auto back = read_circuit(text);
    EXPECT_EQ(back.layout, c.layout);
    EXPECT_EQ(back.ops, c.ops);
    EXPECT_EQ(back.global_phase, c.global_phase);
    EXPECT_EQ(back.metadata, c.metadata);
    ASSERT_EQ(back.blocks.size(), c.blocks.size());
    EXPECT_EQ(write_circuit(back), text);
}

TEST(CircuitText, one_gate_per_line) {
    auto text = write_circuit(build_ghz(2));
    EXPECT_NE(text.find("\nH 0\nCNOT 0,1\n"), std::string::npos);
    GateCircuit c;
    c.layout = RegisterLayout::symmetric(2);
    c.add(GateOp::rz(1, -0.5));
    EXPECT_NE(write_circuit(c).find("RZ 1,-0.5\n"), std::string::npos);
}

TEST(CircuitText, rejects_malformed_lines) {
    const std::string header = "# layout n=2 m=2\n";
    EXPECT_THROW(read_circuit(header + "CNOT 0\n"), Error);
    EXPECT_THROW(read_circuit(header + "FOO 0\n"), Error);
    EXPECT_THROW(read_circuit(header + "X 99\n"), Error);
    EXPECT_THROW(read_circuit(header + "TOFFOLI 1,1,2\n"), Error);
    EXPECT_THROW(read_circuit("X 0\n"), Error);
    try {
        read_circuit(header + "H 0\nRZ 0,abc\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(Audit, rows_compare_blocks_with_closed_forms) {
    auto layout = RegisterLayout::symmetric(8);
    GateCircuit c;
    c.layout = layout;
    c.append(adder1_uf(layout));
    c.append(grover_d_network(layout));
    auto rows = audit(c);
    bool saw_adder = false, saw_d = false;
    for (const auto &r : rows) {
        if (r.variant == "adder1") {
            saw_adder = true;
            EXPECT_EQ(r.count, 80u);
            EXPECT_EQ(r.match(), true);
        }
        if (r.variant == "grover-d") {
            saw_d = true;
            EXPECT_EQ(r.count, 4u * (5 * 8 - 14));
            EXPECT_EQ(r.match(), true);
        }
    }
    EXPECT_TRUE(saw_adder);
    EXPECT_TRUE(saw_d);
    auto table = audit_table(rows);
    EXPECT_EQ(table.rfind("variant\tinstances\tcount\texpected\tmatch\n", 0), 0u);
    EXPECT_NE(table.find("adder1\t1\t80\t80\tyes\n"), std::string::npos);
}
