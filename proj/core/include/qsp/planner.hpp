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
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "qsp/class_model.hpp"

namespace qsp {

// Every step stores the parameters of its reduce-direction operator
// (target -> uniform). A build-direction plan applies the inverse of each
// step, in reverse order.

/// R~_phi D R_theta on the hi class, equalizing it with the lo class.
/// `flips` records the base-id sets left negative; a PiFlip step follows
/// whenever it is nonempty.
struct RdrMerge {
    IdSet lo;
    IdSet hi;
    double theta = 0.0;
    double phi = 0.0;
    std::vector<IdSet> flips;
};

/// R_pi D: inversion about average, then a pi shift on `flips`.
struct RpiD {
    std::vector<IdSet> flips;
};

struct PiFlip {
    std::vector<IdSet> classes;
};

/// Multiplies base class k by e^{i angle} (both halves).
struct ClassPhases {
    std::vector<std::pair<int, double>> phases;
};

using PlanStep = std::variant<RdrMerge, RpiD, PiFlip, ClassPhases>;

enum class Direction { kReduce, kBuild };

struct Plan {
    ClassStructure structure;
    Direction direction = Direction::kReduce;
    std::vector<PlanStep> steps;
    /// Class magnitudes in application order: trace[0] is the input state and
    /// trace[i + 1] the state after steps[i].
    std::vector<ClassifiedState> trace;

    int n() const { return structure.n(); }

    template <class Step>
    std::size_t count() const {
        std::size_t c = 0;
        for (const auto &s : steps) c += std::holds_alternative<Step>(s) ? 1 : 0;
        return c;
    }
};

/// Smallest-value class and the next smallest, as canonical class ids.
/// Throws AlreadyUniform on a single-class state.
std::pair<int, int> find_min_pair(const ClassifiedState &state);

/// Root theta in [0, pi/2) of
///   f(theta) = (2l a_lo + 2m a_hi cos(theta) + C)(a_hi cos(theta) - a_lo)
///              - 2^{n-2} (a_hi^2 - a_lo^2),
/// solved as a quadratic in cos(theta); the larger admissible cosine wins.
double solve_theta(const ClassifiedState &state, int lo, int hi);

/// f(theta) above, exposed for residual checks.
double merge_residual(const ClassifiedState &state, int lo, int hi, double theta);

/// ceil(4 n 2^{n/2}).
std::int64_t default_max_rpid(int n);

/// Upper bound (n-2) ceil(sqrt(2^{n-3})) + 1 on the R_pi D steps needed to
/// restore the merge condition; 0 when the min pair already satisfies it.
std::int64_t rpid_bound(const ClassifiedState &state);

Plan plan_reduce(const SymmetricTarget &target, std::optional<std::int64_t> max_rpid = std::nullopt);
Plan plan_reduce(const GeneralClassSpec &target, std::optional<std::int64_t> max_rpid = std::nullopt);

Plan reverse_plan(const Plan &plan);

/// Closed-form R_pi D trajectory of a two-class state
/// [a_0 x (2^n - t), a_1 x t], a_0 = sin(alpha)/sqrt(2^n - t),
/// a_1 = cos(alpha)/sqrt(t), sin^2(grover_angle) = t / 2^n.
struct IterationForecast {
    int n = 0;
    std::uint64_t t = 0;
    double grover_angle = 0.0;
    double alpha = 0.0;
    double k_max = 0.0;

    double b0(std::int64_t k) const;
    double b1(std::int64_t k) const;
    /// cos(alpha + (2k + 3) grover_angle); the merge condition holds after k
    /// steps exactly when this is <= 0.
    double sign_functional(std::int64_t k) const;
    /// First k with sign_functional(k) <= 0.
    std::int64_t iterations_needed() const;
};

IterationForecast forecast_rpid(const ClassifiedState &state);

/// Complex amplitude per (base class, half). Every state a plan visits has
/// this form, so plans can be replayed exactly without 2^n storage.
class HalfClassState {
   public:
    static HalfClassState from_coefficients(const ClassStructure &structure, std::span<const Complex> coeffs);
    static HalfClassState from_classified(const ClassStructure &structure, const ClassifiedState &state);
    static HalfClassState uniform(const ClassStructure &structure);

    int n() const { return n_; }
    Complex amplitude(int k, bool plus) const { return amps_[2 * k + (plus ? 0 : 1)]; }

    void shift_phase(int k, bool plus, double angle);
    void shift_phase(const IdSet &ids, double angle);
    void invert_about_average();
    void apply(const PlanStep &step, Direction direction);

    double norm_squared() const;
    /// |<this|other>|^2.
    double overlap(const HalfClassState &other) const;
    /// Largest |amplitude - other amplitude| over all halves.
    double max_deviation(const HalfClassState &other) const;

   private:
    int n_ = 0;
    std::vector<std::uint64_t> half_size_;
    std::vector<Complex> amps_;
};

}  // namespace qsp
