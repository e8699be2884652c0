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

#include "qsp/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsp/error.hpp"

namespace qsp {
namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double angle) {
    double wrapped = std::fmod(angle, 2 * kPi);
    if (wrapped < 0) wrapped += 2 * kPi;
    return wrapped;
}

struct PairTerms {
    double a0;     // lo value
    double a1;     // hi value
    double two_l;  // lo multiplicity
    double two_m;  // hi multiplicity
    double rest;   // C, sum over all other coefficients
    double quarter;  // 2^{n-2}
};

PairTerms pair_terms(const ClassifiedState &state, int lo, int hi) {
    std::size_t ilo = state.index_of(lo);
    std::size_t ihi = state.index_of(hi);
    if (ilo == ihi) throw Error(ErrorCode::kInvalidArgument, "lo and hi must be distinct classes");
    PairTerms t{};
    t.a0 = state.classes[ilo].value;
    t.a1 = state.classes[ihi].value;
    t.two_l = static_cast<double>(state.classes[ilo].multiplicity);
    t.two_m = static_cast<double>(state.classes[ihi].multiplicity);
    for (std::size_t i = 0; i < state.classes.size(); ++i) {
        if (i == ilo || i == ihi) continue;
        t.rest += static_cast<double>(state.classes[i].multiplicity) * state.classes[i].value;
    }
    t.quarter = std::ldexp(1.0, state.n - 2);
    return t;
}

std::uint64_t ceil_sqrt_pow2(int exponent) {
    if (exponent <= 0) return 1;
    auto target = std::uint64_t{1} << exponent;
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(target)));
    while (s * s < target) ++s;
    while (s > 1 && (s - 1) * (s - 1) >= target) --s;
    return s;
}

Plan plan_reduce_impl(ClassStructure structure, std::span<const double> magnitudes, std::span<const double> phases,
                      std::optional<std::int64_t> max_rpid) {
    const int n = structure.n();
    const std::int64_t budget = max_rpid.value_or(default_max_rpid(n));

    Plan plan{std::move(structure), Direction::kReduce, {}, {}};
    ClassifiedState state = classify(plan.structure, magnitudes);
    plan.trace.push_back(state);

    ClassPhases canonical;
    for (std::size_t k = 0; k < phases.size(); ++k) {
        if (phases[k] != 0.0) canonical.phases.emplace_back(static_cast<int>(k), wrap_angle(-phases[k]));
    }
    if (!canonical.phases.empty()) {
        plan.steps.emplace_back(std::move(canonical));
        plan.trace.push_back(state);
    }

    std::int64_t rpid_steps = 0;
    while (!state.is_uniform()) {
        auto [lo, hi] = find_min_pair(state);
        if (sufficient_condition(state, lo, hi) >= 0.0) {
            double theta = solve_theta(state, lo, hi);
            auto outcome = apply_rdr_classes(state, lo, hi, theta);
            if (outcome.state.classes.size() >= state.classes.size()) {
                throw Error(ErrorCode::kNoRoot, "merge step failed to equalize the min pair");
            }
            plan.steps.emplace_back(RdrMerge{state.at(lo).ids, state.at(hi).ids, theta, outcome.phi, outcome.flips});
            plan.trace.push_back(outcome.state);
            if (!outcome.flips.empty()) {
                plan.steps.emplace_back(PiFlip{outcome.flips});
                plan.trace.push_back(outcome.state);
            }
            state = std::move(outcome.state);
        } else {
            if (++rpid_steps > budget) {
                std::ostringstream msg;
                msg << "more than " << budget << " R_pi D steps; the analytic bound is (n-2)*ceil(sqrt(2^(n-3)))+1 = "
                    << rpid_bound(state) << " per run, O(n 2^(n/2)) overall";
                throw Error(ErrorCode::kIterationBudgetExceeded, msg.str());
            }
            auto outcome = apply_rpid_classes(state);
            plan.steps.emplace_back(RpiD{outcome.flips});
            plan.trace.push_back(outcome.state);
            state = std::move(outcome.state);
        }
    }
    return plan;
}

std::vector<double> magnitudes_of(std::span<const Complex> coeffs) {
    std::vector<double> out;
    for (const auto &c : coeffs) out.push_back(c.real());
    return out;
}

}  // namespace

std::pair<int, int> find_min_pair(const ClassifiedState &state) {
    if (state.classes.size() < 2) throw Error(ErrorCode::kAlreadyUniform, "state has a single class");
    std::vector<const CoefficientClass *> order;
    for (const auto &c : state.classes) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const auto *a, const auto *b) {
        if (a->value != b->value) return a->value < b->value;
        return a->id() < b->id();
    });
    return {order[0]->id(), order[1]->id()};
}

double merge_residual(const ClassifiedState &state, int lo, int hi, double theta) {
    auto t = pair_terms(state, lo, hi);
    double c = std::cos(theta);
    return (t.two_l * t.a0 + t.two_m * t.a1 * c + t.rest) * (t.a1 * c - t.a0) -
           t.quarter * (t.a1 * t.a1 - t.a0 * t.a0);
}

double solve_theta(const ClassifiedState &state, int lo, int hi) {
    auto t = pair_terms(state, lo, hi);
    if (values_equal(t.a0, t.a1)) return 0.0;

    // f as a quadratic in c = cos(theta): qa c^2 + qb c + qc.
    const double qa = t.two_m * t.a1 * t.a1;
    const double qb = t.a1 * (t.two_l * t.a0 - t.two_m * t.a0 + t.rest);
    const double qc = -t.a0 * (t.two_l * t.a0 + t.rest) - t.quarter * (t.a1 * t.a1 - t.a0 * t.a0);

    std::vector<double> roots;
    if (qa == 0.0) {
        if (qb != 0.0) roots.push_back(-qc / qb);
    } else {
        double disc = qb * qb - 4 * qa * qc;
        double scale = qb * qb + std::abs(4 * qa * qc);
        if (disc < 0 && disc > -1e-14 * scale) disc = 0;
        if (disc >= 0) {
            double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
            if (q != 0.0) {
                roots.push_back(q / qa);
                roots.push_back(qc / q);
            } else {
                roots.push_back(0.0);
            }
        }
    }

    constexpr double kSlack = 1e-12;
    std::optional<double> best;
    for (double c : roots) {
        if (c > 0.0 - kSlack && c <= 1.0 + kSlack) {
            c = std::clamp(c, 0.0, 1.0);
            if (!best || c > *best) best = c;
        }
    }
    // cos(theta) = 0 would give theta = pi/2, outside the admissible range.
    if (!best || *best <= 0.0) {
        throw Error(ErrorCode::kNoRoot, "no cos(theta) in (0, 1] equalizes the pair; merge condition violated");
    }
    return std::acos(*best);
}

std::int64_t default_max_rpid(int n) {
    return static_cast<std::int64_t>(std::ceil(4.0 * n * std::pow(2.0, n / 2.0)));
}

std::int64_t rpid_bound(const ClassifiedState &state) {
    if (state.is_uniform()) return 0;
    auto [lo, hi] = find_min_pair(state);
    if (sufficient_condition(state, lo, hi) >= 0.0) return 0;
    const int n = state.n;
    return static_cast<std::int64_t>(n - 2) * static_cast<std::int64_t>(ceil_sqrt_pow2(n - 3)) + 1;
}

Plan plan_reduce(const SymmetricTarget &target, std::optional<std::int64_t> max_rpid) {
    target.validate();
    auto canonical = phase_canonicalize(target);
    auto magnitudes = magnitudes_of(canonical.target.coeffs);
    return plan_reduce_impl(ClassStructure::symmetric(target.n), magnitudes, canonical.phases, max_rpid);
}

Plan plan_reduce(const GeneralClassSpec &target, std::optional<std::int64_t> max_rpid) {
    target.validate();
    auto canonical = phase_canonicalize(target);
    auto magnitudes = magnitudes_of(canonical.target.coeffs);
    return plan_reduce_impl(ClassStructure::general(target.n, target.table), magnitudes, canonical.phases,
                            max_rpid);
}

Plan reverse_plan(const Plan &plan) {
    if (plan.direction != Direction::kReduce) {
        throw Error(ErrorCode::kDirectionMismatch, "only a reduce-direction plan can be reversed");
    }
    Plan out{plan.structure, Direction::kBuild, {plan.steps.rbegin(), plan.steps.rend()},
             {plan.trace.rbegin(), plan.trace.rend()}};
    return out;
}

double IterationForecast::b0(std::int64_t k) const {
    double rest = std::ldexp(1.0, n) - static_cast<double>(t);
    return std::sin(alpha + 2.0 * static_cast<double>(k) * grover_angle) / std::sqrt(rest);
}

double IterationForecast::b1(std::int64_t k) const {
    return std::cos(alpha + 2.0 * static_cast<double>(k) * grover_angle) / std::sqrt(static_cast<double>(t));
}

double IterationForecast::sign_functional(std::int64_t k) const {
    return std::cos(alpha + (2.0 * static_cast<double>(k) + 3.0) * grover_angle);
}

std::int64_t IterationForecast::iterations_needed() const {
    double k = std::ceil((kPi / 2 - alpha - 3 * grover_angle) / (2 * grover_angle));
    auto guess = std::max<std::int64_t>(0, static_cast<std::int64_t>(k));
    // Guard against rounding at the boundary.
    while (guess > 0 && sign_functional(guess - 1) <= 0) --guess;
    while (sign_functional(guess) > 0) ++guess;
    return guess;
}

IterationForecast forecast_rpid(const ClassifiedState &state) {
    if (state.classes.size() != 2) throw Error(ErrorCode::kNotTwoClass, "forecast needs exactly two classes");
    const auto &first = state.classes[0];
    const auto &second = state.classes[1];
    const auto &low = first.value < second.value ? first : second;
    const auto &high = first.value < second.value ? second : first;
    if (!(low.value < high.value)) throw Error(ErrorCode::kPreconditionViolated, "forecast needs a_0 < a_1");

    IterationForecast f;
    f.n = state.n;
    f.t = high.multiplicity;
    const double total = std::ldexp(1.0, state.n);
    const double t = static_cast<double>(f.t);
    f.grover_angle = std::asin(std::sqrt(t / total));
    f.alpha = std::atan2(low.value * std::sqrt(total - t), high.value * std::sqrt(t));
    f.k_max = (kPi / 2 - 3 * f.grover_angle) / (2 * f.grover_angle);
    return f;
}

HalfClassState HalfClassState::from_coefficients(const ClassStructure &structure, std::span<const Complex> coeffs) {
    if (static_cast<int>(coeffs.size()) != structure.base_class_count()) {
        throw Error(ErrorCode::kInvalidArgument, "one coefficient per base class required");
    }
    HalfClassState s;
    s.n_ = structure.n();
    for (int k = 0; k < structure.base_class_count(); ++k) {
        s.half_size_.push_back(structure.multiplicity(k) / 2);
        s.amps_.push_back(coeffs[k]);
        s.amps_.push_back(coeffs[k]);
    }
    return s;
}

HalfClassState HalfClassState::from_classified(const ClassStructure &structure, const ClassifiedState &state) {
    std::vector<Complex> coeffs(structure.base_class_count());
    for (const auto &c : state.classes) {
        for (int id : c.ids) coeffs.at(id) = c.value;
    }
    return from_coefficients(structure, coeffs);
}

HalfClassState HalfClassState::uniform(const ClassStructure &structure) {
    std::vector<Complex> coeffs(structure.base_class_count(), 1.0 / std::sqrt(std::ldexp(1.0, structure.n())));
    return from_coefficients(structure, coeffs);
}

void HalfClassState::shift_phase(int k, bool plus, double angle) {
    amps_.at(2 * k + (plus ? 0 : 1)) *= std::polar(1.0, angle);
}

void HalfClassState::shift_phase(const IdSet &ids, double angle) {
    for (int k : ids) {
        shift_phase(k, true, angle);
        shift_phase(k, false, angle);
    }
}

void HalfClassState::invert_about_average() {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < half_size_.size(); ++k) {
        sum += static_cast<double>(half_size_[k]) * (amps_[2 * k] + amps_[2 * k + 1]);
    }
    Complex twice_mean = sum / std::ldexp(1.0, n_ - 1);
    for (auto &a : amps_) a = twice_mean - a;
}

void HalfClassState::apply(const PlanStep &step, Direction direction) {
    const bool reduce = direction == Direction::kReduce;
    std::visit(
        [&](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, RdrMerge>) {
                auto split = [&](double angle) {
                    for (int k : s.hi) {
                        shift_phase(k, true, angle);
                        shift_phase(k, false, -angle);
                    }
                };
                if (reduce) {
                    split(s.theta);
                    invert_about_average();
                    split(-s.phi);
                } else {
                    split(s.phi);
                    invert_about_average();
                    split(-s.theta);
                }
            } else if constexpr (std::is_same_v<T, RpiD>) {
                if (!reduce) {
                    for (const auto &ids : s.flips) shift_phase(ids, kPi);
                }
                invert_about_average();
                if (reduce) {
                    for (const auto &ids : s.flips) shift_phase(ids, kPi);
                }
            } else if constexpr (std::is_same_v<T, PiFlip>) {
                for (const auto &ids : s.classes) shift_phase(ids, kPi);
            } else {
                for (const auto &[k, angle] : s.phases) shift_phase(IdSet{k}, reduce ? angle : -angle);
            }
        },
        step);
}

double HalfClassState::norm_squared() const {
    double s = 0.0;
    for (std::size_t k = 0; k < half_size_.size(); ++k) {
        s += static_cast<double>(half_size_[k]) * (std::norm(amps_[2 * k]) + std::norm(amps_[2 * k + 1]));
    }
    return s;
}

double HalfClassState::overlap(const HalfClassState &other) const {
    Complex inner = 0.0;
    for (std::size_t k = 0; k < half_size_.size(); ++k) {
        inner += static_cast<double>(half_size_[k]) *
                 (std::conj(amps_[2 * k]) * other.amps_[2 * k] + std::conj(amps_[2 * k + 1]) * other.amps_[2 * k + 1]);
    }
    return std::norm(inner);
}

double HalfClassState::max_deviation(const HalfClassState &other) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) worst = std::max(worst, std::abs(amps_[i] - other.amps_.at(i)));
    return worst;
}

}  // namespace qsp
