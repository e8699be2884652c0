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

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsp/error.hpp"
#include "qsp/networks.hpp"
#include "qsp/statevector.hpp"

using namespace qsp;

namespace {

constexpr double kPi = std::numbers::pi;
const double kHalfRoot = 1 / std::sqrt(2.0);

Statevector basis(int qubits, std::uint64_t index) {
    std::vector<Complex> a(std::uint64_t{1} << qubits, 0.0);
    a[index] = 1.0;
    return Statevector::from_amplitudes(std::move(a));
}

std::vector<Complex> random_state(int qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::uint64_t{1} << qubits);
    double norm = 0.0;
    for (auto &x : a) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : a) x /= std::sqrt(norm);
    return a;
}

std::vector<Complex> to_vector(const Statevector &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

GateOp random_gate(int qubits, std::mt19937_64 &rng) {
    std::vector<int> q(qubits);
    for (int i = 0; i < qubits; ++i) q[i] = i;
    std::shuffle(q.begin(), q.end(), rng);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    switch (rng() % 6) {
        case 0: return GateOp::h(q[0]);
        case 1: return GateOp::x(q[0]);
        case 2: return GateOp::id(q[0]);
        case 3: return GateOp::rz(q[0], angle(rng));
        case 4: return GateOp::cnot(q[0], q[1]);
        default: return GateOp::toffoli(q[0], q[1], q[2]);
    }
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Statevector, starts_in_all_zero) {
    Statevector s(3);
    EXPECT_EQ(s.dimension(), 8u);
    EXPECT_EQ(s.amplitude(0), Complex(1.0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(Statevector, hadamard_on_zero) {
    Statevector s(1);
    s.apply_gate(GateOp::h(0));
    EXPECT_NEAR(std::abs(s.amplitude(0) - kHalfRoot), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(1) - kHalfRoot), 0.0, 1e-15);
}

TEST(Statevector, cnot_on_one_zero) {
    // Qubit 0 = 1, qubit 1 = 0 is index 1; the result |11> is index 3.
    auto s = basis(2, 1);
    s.apply_gate(GateOp::cnot(0, 1));
    EXPECT_EQ(s.amplitude(3), Complex(1.0));
    EXPECT_EQ(s.amplitude(1), Complex(0.0));
}

TEST(Statevector, toffoli_truth_table) {
    for (std::uint64_t x = 0; x < 8; ++x) {
        auto s = basis(3, x);
        s.apply_gate(GateOp::toffoli(0, 1, 2));
        const std::uint64_t want = (x & 3) == 3 ? x ^ 4 : x;
        EXPECT_EQ(s.amplitude(want), Complex(1.0)) << "input " << x;
    }
}

TEST(Statevector, rz_and_identity_definitions) {
    auto s = Statevector::from_amplitudes({kHalfRoot, kHalfRoot});
    s.apply_gate(GateOp::rz(0, kPi / 3));
    s.apply_gate(GateOp::id(0));
    EXPECT_NEAR(std::abs(s.amplitude(0) - kHalfRoot * std::polar(1.0, kPi / 6)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(1) - kHalfRoot * std::polar(1.0, -kPi / 6)), 0.0, 1e-15);
}

TEST(Statevector, gates_match_the_reference_on_random_states) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto amps = random_state(5, rng);
        auto op = random_gate(5, rng);
        auto s = Statevector::from_amplitudes(amps);
        s.apply_gate(op);
        EXPECT_LT(oracle::max_distance(to_vector(s), oracle::apply_gate(op, amps)), 1e-14);
    }
}

TEST(Statevector, norm_survives_ten_thousand_gates) {
    std::mt19937_64 rng(23);
    auto s = Statevector::from_amplitudes(random_state(8, rng));
    for (int i = 0; i < 10000; ++i) {
        auto op = random_gate(8, rng);
        const double before = s.norm_squared();
        s.apply_gate(op);
        ASSERT_NEAR(s.norm_squared(), before, 1e-12);
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
}

TEST(Statevector, cap_and_range_errors) {
    EXPECT_EQ(code_of([] { Statevector s(kDefaultQubitCap + 1); }), ErrorCode::kCapExceeded);
    EXPECT_EQ(code_of([] { Statevector s(5, 4); }), ErrorCode::kCapExceeded);
    EXPECT_EQ(code_of([] {
                  Statevector s(3);
                  s.apply_gate(GateOp::h(3));
              }),
              ErrorCode::kIndexOutOfRange);
    EXPECT_EQ(code_of([] {
                  Statevector s(3);
                  s.apply_gate(GateOp::cnot(0, -1));
              }),
              ErrorCode::kIndexOutOfRange);
}

TEST(DiagPhase, zero_angle_is_identity) {
    std::mt19937_64 rng(1);
    auto amps = random_state(4, rng);
    auto s = Statevector::from_amplitudes(amps);
    s.apply_diag_phase(4, [](std::uint64_t x) { return x % 3 == 0; }, 0.0);
    EXPECT_LT(oracle::max_distance(to_vector(s), amps), 1e-15);
}

TEST(DiagPhase, selecting_everything_is_a_global_phase) {
    std::mt19937_64 rng(2);
    auto amps = random_state(4, rng);
    auto s = Statevector::from_amplitudes(amps);
    s.apply_diag_phase(4, [](std::uint64_t) { return true; }, 1.234);
    EXPECT_NEAR(fidelity(s, 4, amps).fidelity, 1.0, 1e-14);
}

TEST(DiagPhase, two_qubit_merge_walkthrough) {
    // a0 = 0, a1 = 1/sqrt(2): shift the halves of class 1 by +/- pi/4, invert
    // about the average, then remove the hi phase 3 pi/2 half by half.
    const auto structure = ClassStructure::symmetric(2);
    auto s = Statevector::from_amplitudes({0.0, kHalfRoot, kHalfRoot, 0.0});
    auto in_hi = [&](bool plus) {
        return [&, plus](std::uint64_t x) { return structure.class_of(x) == 1 && structure.in_plus_half(x) == plus; };
    };
    s.apply_diag_phase(2, in_hi(true), kPi / 4);
    s.apply_diag_phase(2, in_hi(false), -kPi / 4);
    s.apply_inversion_about_average(2);
    EXPECT_NEAR(std::abs(s.amplitude(0) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(1) - Complex(0, 0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(2) - Complex(0, -0.5)), 0.0, 1e-15);
    s.apply_diag_phase(2, in_hi(true), -3 * kPi / 2);
    s.apply_diag_phase(2, in_hi(false), 3 * kPi / 2);
    for (std::uint64_t x = 0; x < 4; ++x) EXPECT_NEAR(std::abs(s.amplitude(x) - 0.5), 0.0, 1e-15) << x;
}

TEST(Inversion, fixes_the_uniform_state) {
    auto s = Statevector::from_amplitudes(std::vector<Complex>(8, 1 / std::sqrt(8.0)));
    s.apply_inversion_about_average(3);
    for (std::uint64_t x = 0; x < 8; ++x) EXPECT_NEAR(std::abs(s.amplitude(x) - 1 / std::sqrt(8.0)), 0.0, 1e-15);
}

TEST(Inversion, two_qubit_row) {
    auto s = basis(2, 0);
    s.apply_inversion_about_average(2);
    const std::vector<Complex> want{-0.5, 0.5, 0.5, 0.5};
    EXPECT_LT(oracle::max_distance(to_vector(s), want), 1e-15);
}

TEST(Inversion, matches_the_explicit_matrix) {
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 6; ++n) {
        auto amps = random_state(n, rng);
        auto s = Statevector::from_amplitudes(amps);
        s.apply_inversion_about_average(n);
        EXPECT_LT(oracle::max_distance(to_vector(s), oracle::grover_d(amps, n)), 1e-14) << "n=" << n;
    }
}

TEST(Inversion, acts_per_configuration_of_the_other_qubits) {
    std::mt19937_64 rng(43);
    auto amps = random_state(5, rng);
    auto s = Statevector::from_amplitudes(amps);
    s.apply_inversion_about_average(3);
    EXPECT_LT(oracle::max_distance(to_vector(s), oracle::grover_d(amps, 3)), 1e-14);
}

TEST(RunCircuit, ghz_of_three) {
    const auto ghz = build_ghz(3);
    Statevector s(ghz.layout.total());
    run_circuit(s, ghz);
    for (std::uint64_t x = 0; x < s.dimension(); ++x) {
        const double want = (x == 0 || x == 7) ? kHalfRoot : 0.0;
        EXPECT_NEAR(std::abs(s.amplitude(x) - want), 0.0, 1e-15) << x;
    }
}

TEST(RunCircuit, adder_one_counts_ones) {
    const auto layout = RegisterLayout::symmetric(5);
    const auto uf = adder1_uf(layout);
    for (std::uint64_t x = 0; x < 32; ++x) {
        Statevector s(layout.total());
        for (int q = 0; q < 5; ++q) {
            if ((x >> q) & 1) s.apply_gate(GateOp::x(q));
        }
        run_circuit(s, uf);
        const std::uint64_t want = x | (static_cast<std::uint64_t>(std::popcount(x)) << 5);
        EXPECT_NEAR(std::abs(s.amplitude(want)), 1.0, 1e-15) << "x=" << x;
    }
}

TEST(RunCircuit, applies_the_global_phase) {
    GateCircuit c;
    c.layout = RegisterLayout::symmetric(2);
    c.global_phase = kPi;
    Statevector s(c.layout.total());
    run_circuit(s, c);
    EXPECT_NEAR(std::abs(s.amplitude(0) + 1.0), 0.0, 1e-15);
}

TEST(RunCircuit, rejects_a_wider_layout) {
    Statevector s(2);
    EXPECT_EQ(code_of([&] { run_circuit(s, adder1_uf(RegisterLayout::symmetric(4))); }), ErrorCode::kInvalidArgument);
}

TEST(Fidelity, of_a_state_with_itself_is_one) {
    std::mt19937_64 rng(4);
    auto amps = random_state(4, rng);
    auto r = fidelity(Statevector::from_amplitudes(amps), 4, amps);
    EXPECT_NEAR(r.fidelity, 1.0, 1e-14);
    EXPECT_LE(r.fidelity, 1.0);
    EXPECT_NEAR(r.leakage, 0.0, 1e-15);
}

TEST(Fidelity, orthogonal_basis_states_give_zero) {
    std::vector<Complex> one{0.0, 1.0};
    EXPECT_EQ(fidelity(basis(1, 0), 1, one).fidelity, 0.0);
}

TEST(Fidelity, ghz_against_uniform_is_one_half) {
    const auto ghz = build_ghz(2);
    Statevector s(ghz.layout.total());
    run_circuit(s, ghz);
    std::vector<Complex> uniform(4, 0.5);
    EXPECT_NEAR(fidelity(s, 2, uniform).fidelity, 0.5, 1e-15);
}

TEST(Fidelity, reports_ancilla_leakage) {
    // Main register of one qubit, one ancilla in (|0> + |1>)/sqrt(2).
    Statevector s(2);
    s.apply_gate(GateOp::h(1));
    auto r = fidelity(s, 1, std::vector<Complex>{1.0, 0.0});
    EXPECT_NEAR(r.fidelity, 0.5, 1e-15);
    EXPECT_NEAR(r.leakage, 0.5, 1e-15);
}

TEST(Dump, one_line_per_amplitude_with_qubit_zero_first) {
    auto s = basis(3, 1);
    s.apply_gate(GateOp::h(2));
    std::istringstream in(dump_amplitudes(s, 1e-12));
    std::string bits;
    double re = 0, im = 0;
    ASSERT_TRUE(in >> bits >> re >> im);
    EXPECT_EQ(bits, "100");
    EXPECT_NEAR(re, kHalfRoot, 1e-15);
    EXPECT_EQ(im, 0.0);
    ASSERT_TRUE(in >> bits >> re >> im);
    EXPECT_EQ(bits, "101");
    EXPECT_FALSE(in >> bits);

    std::istringstream all(dump_amplitudes(s));
    int lines = 0;
    for (std::string line; std::getline(all, line);) ++lines;
    EXPECT_EQ(lines, 8);
}

TEST(TargetAmplitudes, symmetric_classes_share_values) {
    SymmetricTarget t{3, {Complex(0.1, 0.2), 0.3}};
    auto a = target_amplitudes(t);
    ASSERT_EQ(a.size(), 8u);
    for (std::uint64_t x = 0; x < 8; ++x) {
        EXPECT_EQ(a[x], t.coeffs[oracle::symmetric_class(x, 3)]) << x;
    }
}
