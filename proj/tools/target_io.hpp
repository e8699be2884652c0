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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qsp/class_model.hpp"
#include "qsp/planner.hpp"

namespace qsp::cli {

/// Target spec file, one "key = value" per line, '#' starts a comment:
///
///   n = 4
///   mode = symmetric            (or general)
///   M = 2                       (general mode: number of classes minus one)
///   coeffs = 0.5 0.25,-0.1 ...  (a real "x" or complex "re,im" per class;
///                                repeated coeffs lines append)
///   normalize = yes             (optional: rescale to unit norm)
///   table 0110 1 +              (general mode: class and half of each
///                                basis string, qubit 0 leftmost)
struct TargetSpec {
    ClassMode mode = ClassMode::kSymmetric;
    SymmetricTarget symmetric;
    GeneralClassSpec general;

    int n() const { return mode == ClassMode::kSymmetric ? symmetric.n : general.n; }
    const std::vector<Complex> &coeffs() const {
        return mode == ClassMode::kSymmetric ? symmetric.coeffs : general.coeffs;
    }
    void validate() const;
    /// 2^n amplitudes of the target on the main register.
    std::vector<Complex> amplitudes() const;
    Plan plan(std::optional<std::int64_t> max_rpid = std::nullopt) const;
};

/// Throws Parse (with a line number) or NotNormalized.
TargetSpec parse_target(std::string_view text);
/// Canonical text form; coefficients written with 17 significant digits.
std::string write_target(const TargetSpec &spec);
/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string target_digest(const TargetSpec &spec);

/// Normalized symmetric target with class magnitudes uniform in (0, 1] and,
/// when `complex_phases`, phases uniform in [0, 2 pi).
TargetSpec random_symmetric_target(int n, std::mt19937_64 &rng, bool complex_phases);

/// a_0 = 1/sqrt(2), all other classes 0: (|0...0> + |1...1>)/sqrt(2).
TargetSpec ghz_target(int n);

}  // namespace qsp::cli
