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

#include <cmath>
#include <numbers>
#include <random>

#include "qsp/class_model.hpp"

namespace qsp::bench {

/// Fixed-seed normalized symmetric target with random magnitudes and phases.
inline SymmetricTarget random_target(int n, std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.05, 1.0), ph(0.0, 2 * std::numbers::pi);
    SymmetricTarget t;
    t.n = n;
    t.coeffs.resize(n / 2 + 1);
    double norm = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        t.coeffs[k] = std::polar(mag(rng), ph(rng));
        norm += static_cast<double>(SymmetricTarget::class_multiplicity(n, k)) * std::norm(t.coeffs[k]);
    }
    for (auto &a : t.coeffs) a /= std::sqrt(norm);
    return t;
}

/// (|0...0> + |1...1>)/sqrt(2), the target that needs the most R_pi D steps.
inline SymmetricTarget ghz_target(int n) {
    SymmetricTarget t;
    t.n = n;
    t.coeffs.assign(n / 2 + 1, 0.0);
    t.coeffs[0] = 1 / std::sqrt(2.0);
    return t;
}

}  // namespace qsp::bench
