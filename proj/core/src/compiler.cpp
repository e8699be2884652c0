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

#include "qsp/compiler.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsp/error.hpp"
#include "qsp/networks.hpp"

namespace qsp {
namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kZeroAngle = 1e-14;

double wrap(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0) w += kTwoPi;
    return w;
}

bool is_zero_angle(double angle) {
    double w = wrap(angle);
    return w < kZeroAngle || kTwoPi - w < kZeroAngle;
}

/// Diagonal phases per (base class, half) awaiting emission.
class PhaseLayer {
   public:
    PhaseLayer(const ClassStructure &structure, const RegisterLayout &layout)
        : structure_(structure), layout_(layout), angles_(2 * structure.base_class_count(), 0.0) {}

    void add(int k, bool plus, double angle) { angles_.at(2 * k + (plus ? 0 : 1)) += angle; }
    void add(const IdSet &ids, double angle) {
        for (int k : ids) {
            add(k, true, angle);
            add(k, false, angle);
        }
    }

    void flush(GateCircuit &circuit) {
        std::vector<GateCircuit> phases;
        const int kcount = structure_.base_class_count();
        const bool symmetric = structure_.mode() == ClassMode::kSymmetric;
        const int n = structure_.n();
        for (int k = 0; k < kcount; ++k) {
            const double plus = wrap(angles_[2 * k]);
            const double minus = wrap(angles_[2 * k + 1]);
            if (symmetric && 2 * k == n) {
                // Both halves share sum value n/2; qubit 0 tells them apart.
                if (is_zero_angle(plus - minus)) {
                    if (!is_zero_angle(plus)) phases.push_back(selective_phase(layout_, k, plus));
                } else {
                    std::vector<int> controls;
                    for (int j = 0; j < layout_.m_sum; ++j) controls.push_back(layout_.sum(j));
                    controls.push_back(layout_.main(0));
                    const std::uint64_t x1 = std::uint64_t{1} << layout_.m_sum;
                    if (!is_zero_angle(plus)) phases.push_back(selective_phase(layout_, controls, k, plus));
                    if (!is_zero_angle(minus)) phases.push_back(selective_phase(layout_, controls, k | x1, minus));
                }
                continue;
            }
            const std::uint64_t code_plus = symmetric ? k : general_code(layout_, k, true);
            const std::uint64_t code_minus = symmetric ? n - k : general_code(layout_, k, false);
            if (!is_zero_angle(plus)) phases.push_back(selective_phase(layout_, code_plus, plus));
            if (!is_zero_angle(minus)) phases.push_back(selective_phase(layout_, code_minus, minus));
        }
        std::fill(angles_.begin(), angles_.end(), 0.0);
        if (phases.empty()) return;

        const std::size_t begin = circuit.ops.size();
        if (symmetric) {
            circuit.append(adder1_uf(layout_));
        } else {
            circuit.append(lookup_uf(layout_, structure_));
        }
        for (const auto &p : phases) circuit.append(p);
        if (symmetric) {
            circuit.append(adder1_uf_inverse(layout_));
        } else {
            GateCircuit undo = inverse_gates(lookup_uf(layout_, structure_));
            undo.close_block("uf-lookup-inverse", 0);
            circuit.append(undo);
        }
        circuit.close_block("phase-layer", begin);
    }

   private:
    const ClassStructure &structure_;
    RegisterLayout layout_;
    std::vector<double> angles_;
};

}  // namespace

RegisterLayout layout_for(const ClassStructure &structure) {
    if (structure.mode() == ClassMode::kSymmetric) return RegisterLayout::symmetric(structure.n());
    return RegisterLayout::general(structure.n(), structure.base_class_count() - 1);
}

GateCircuit compile_plan(const Plan &plan) {
    if (plan.direction != Direction::kBuild) {
        throw Error(ErrorCode::kDirectionMismatch, "compile needs a build-direction plan; reverse the reduce plan first");
    }
    const auto layout = layout_for(plan.structure);
    GateCircuit circuit;
    circuit.layout = layout;

    for (int i = 0; i < layout.n_main; ++i) circuit.add(GateOp::h(layout.main(i)));
    circuit.close_block("initial-h", 0, static_cast<std::uint64_t>(layout.n_main));

    PhaseLayer layer(plan.structure, layout);
    auto apply_d = [&] {
        layer.flush(circuit);
        circuit.append(grover_d_network(layout));
    };
    auto split = [&](const IdSet &hi, double angle) {
        for (int k : hi) {
            layer.add(k, true, angle);
            layer.add(k, false, -angle);
        }
    };

    for (const auto &step : plan.steps) {
        std::visit(
            [&](const auto &s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, RdrMerge>) {
                    split(s.hi, s.phi);
                    apply_d();
                    split(s.hi, -s.theta);
                } else if constexpr (std::is_same_v<T, RpiD>) {
                    for (const auto &ids : s.flips) layer.add(ids, std::numbers::pi);
                    apply_d();
                } else if constexpr (std::is_same_v<T, PiFlip>) {
                    for (const auto &ids : s.classes) layer.add(ids, std::numbers::pi);
                } else {
                    for (const auto &[k, angle] : s.phases) layer.add(IdSet{k}, -angle);
                }
            },
            step);
    }
    layer.flush(circuit);

    circuit.global_phase = wrap(circuit.global_phase);
    circuit.metadata["mode"] = plan.structure.mode() == ClassMode::kSymmetric ? "symmetric" : "general";
    circuit.metadata["plan.rdr"] = std::to_string(plan.count<RdrMerge>());
    circuit.metadata["plan.rpid"] = std::to_string(plan.count<RpiD>());
    circuit.metadata["plan.piflip"] = std::to_string(plan.count<PiFlip>());
    circuit.metadata["plan.phases"] = std::to_string(plan.count<ClassPhases>());
    return circuit;
}

}  // namespace qsp
