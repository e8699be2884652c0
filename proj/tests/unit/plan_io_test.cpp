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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsp/error.hpp"
#include "qsp/plan_io.hpp"

using namespace qsp;

namespace {

bool same_steps(const Plan &a, const Plan &b) {
    if (a.steps.size() != b.steps.size()) return false;
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        if (a.steps[i].index() != b.steps[i].index()) return false;
        bool equal = std::visit(
            [&](const auto &x) {
                using T = std::decay_t<decltype(x)>;
                const auto &y = std::get<T>(b.steps[i]);
                if constexpr (std::is_same_v<T, RdrMerge>) {
                    return x.lo == y.lo && x.hi == y.hi && x.theta == y.theta && x.phi == y.phi && x.flips == y.flips;
                } else if constexpr (std::is_same_v<T, RpiD>) {
                    return x.flips == y.flips;
                } else if constexpr (std::is_same_v<T, PiFlip>) {
                    return x.classes == y.classes;
                } else {
                    return x.phases == y.phases;
                }
            },
            a.steps[i]);
        if (!equal) return false;
    }
    return true;
}

std::string parse_error(const std::string &text) {
    try {
        read_plan(text);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kParse);
        return e.what();
    }
    ADD_FAILURE() << "expected a parse error";
    return {};
}

}  // namespace

TEST(Bitstring, qubit_zero_is_leftmost) {
    EXPECT_EQ(to_bitstring(0b0011, 4), "1100");
    EXPECT_EQ(parse_bitstring("1100"), 0b0011u);
    EXPECT_THROW(parse_bitstring("10a"), Error);
}

TEST(PlanIo, round_trip_is_bit_exact_for_random_plans) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 9;
        auto reduce = plan_reduce(oracle::random_complex_target(n, rng));
        for (const Plan &plan : {reduce, reverse_plan(reduce)}) {
            const auto text = write_plan(plan);
            auto back = read_plan(text);
            EXPECT_EQ(back.direction, plan.direction);
            EXPECT_EQ(back.n(), n);
            EXPECT_TRUE(same_steps(back, plan));
            EXPECT_EQ(write_plan(back), text);
        }
    }
}

TEST(PlanIo, general_mode_keeps_the_class_table) {
    std::mt19937_64 rng(5);
    GeneralClassSpec spec;
    spec.n = 4;
    spec.M = 2;
    spec.table = oracle::random_class_table(4, 2, rng);
    auto structure = ClassStructure::general(4, spec.table);
    double norm = 0;
    for (int k = 0; k <= 2; ++k) {
        spec.coeffs.push_back(0.1 * (k + 1));
        norm += structure.multiplicity(k) * 0.01 * (k + 1) * (k + 1);
    }
    for (auto &c : spec.coeffs) c /= std::sqrt(norm);
    auto plan = plan_reduce(spec);
    auto back = read_plan(write_plan(plan));
    EXPECT_EQ(back.structure.mode(), ClassMode::kGeneral);
    EXPECT_EQ(back.structure.table(), spec.table);
    EXPECT_TRUE(same_steps(back, plan));
}

TEST(PlanIo, errors_name_the_line) {
    EXPECT_NE(parse_error("qsp-plan 2\n").find("line 1"), std::string::npos);
    EXPECT_NE(parse_error("qsp-plan 1\nn 4\nmode symmetric\ndirection build\nstep rdr lo=0 hi=1 theta=zz phi=0 flips=\nend\n")
                  .find("line 5"),
              std::string::npos);
    EXPECT_NE(parse_error("qsp-plan 1\nn 4\nmode symmetric\ndirection build\nstep rpid flips=7\nend\n").find("line 5"),
              std::string::npos);
    EXPECT_NE(parse_error("qsp-plan 1\nn 4\nmode symmetric\ndirection build\n").find("missing 'end'"),
              std::string::npos);
}

TEST(PlanIo, trace_lists_every_snapshot) {
    auto plan = plan_reduce(SymmetricTarget{4, {1 / std::sqrt(2.0), 0.0, 0.0}});
    auto text = write_trace(plan);
    EXPECT_NE(text.find("snapshot 0"), std::string::npos);
    EXPECT_NE(text.find("snapshot 2"), std::string::npos);
    EXPECT_EQ(text.find("snapshot 3"), std::string::npos);
}
