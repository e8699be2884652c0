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

#include "qsp/class_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsp/error.hpp"

namespace qsp {
namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

double wrap_angle(double angle) {
    double wrapped = std::fmod(angle, 2 * std::numbers::pi);
    if (wrapped < 0) wrapped += 2 * std::numbers::pi;
    return wrapped;
}

void require_normalized(double norm_squared) {
    if (std::abs(norm_squared - 1.0) > kTargetNormTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "squared norm is " << norm_squared;
        throw Error(ErrorCode::kNotNormalized, msg.str());
    }
}

void require_nonnegative_real(std::span<const Complex> coeffs) {
    for (const auto &c : coeffs) {
        if (c.imag() != 0.0 || c.real() < 0.0) {
            throw Error(ErrorCode::kPreconditionViolated,
                        "coefficients must be real and nonnegative; canonicalize phases first");
        }
    }
}

IdSet merged_ids(const IdSet &a, const IdSet &b) {
    IdSet out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool values_equal(double a, double b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= kMergeTolerance * scale;
}

std::uint64_t SymmetricTarget::class_multiplicity(int n, int k) {
    if (2 * k == n) return binomial(n, k);
    return 2 * binomial(n, k);
}

void SymmetricTarget::validate() const {
    if (n < 2) throw Error(ErrorCode::kInvalidArgument, "symmetric target needs n >= 2");
    if (n > 62) throw Error(ErrorCode::kInvalidArgument, "qubit count too large");
    if (static_cast<int>(coeffs.size()) != n / 2 + 1) {
        throw Error(ErrorCode::kInvalidArgument, "symmetric target needs floor(n/2)+1 coefficients");
    }
    double norm = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        norm += static_cast<double>(class_multiplicity(n, k)) * std::norm(coeffs[k]);
    }
    require_normalized(norm);
}

Complex SymmetricTarget::amplitude(std::uint64_t x) const {
    int w = std::popcount(x);
    return coeffs[std::min(w, n - w)];
}

void GeneralClassSpec::validate() const {
    if (n < 2) throw Error(ErrorCode::kInvalidArgument, "general target needs n >= 2");
    if (M < 0 || static_cast<int>(coeffs.size()) != M + 1) {
        throw Error(ErrorCode::kInvalidArgument, "general target needs M+1 coefficients");
    }
    // Builds the structure to check the table invariants.
    auto structure = ClassStructure::general(n, table);
    if (structure.base_class_count() != M + 1) {
        throw Error(ErrorCode::kInvalidArgument, "class table does not use exactly M+1 classes");
    }
    double norm = 0.0;
    for (int k = 0; k <= M; ++k) {
        norm += static_cast<double>(structure.multiplicity(k)) * std::norm(coeffs[k]);
    }
    require_normalized(norm);
}

ClassStructure ClassStructure::symmetric(int n) {
    if (n < 2 || n > 62) throw Error(ErrorCode::kInvalidArgument, "symmetric structure needs 2 <= n <= 62");
    ClassStructure s;
    s.mode_ = ClassMode::kSymmetric;
    s.n_ = n;
    for (int k = 0; k <= n / 2; ++k) s.multiplicity_.push_back(SymmetricTarget::class_multiplicity(n, k));
    return s;
}

ClassStructure ClassStructure::general(int n, std::vector<ClassLabel> table) {
    if (n < 2 || n > 30) throw Error(ErrorCode::kInvalidArgument, "general structure needs 2 <= n <= 30");
    if (table.size() != (std::uint64_t{1} << n)) {
        throw Error(ErrorCode::kInvalidArgument, "class table must list all 2^n basis vectors");
    }
    int max_k = -1;
    for (const auto &label : table) {
        if (label.k < 0) throw Error(ErrorCode::kInvalidArgument, "negative class label");
        max_k = std::max(max_k, label.k);
    }
    std::vector<std::uint64_t> plus(max_k + 1, 0), minus(max_k + 1, 0);
    for (const auto &label : table) (label.plus ? plus : minus)[label.k]++;
    for (int k = 0; k <= max_k; ++k) {
        if (plus[k] == 0 || plus[k] != minus[k]) {
            std::ostringstream msg;
            msg << "class " << k << " has " << plus[k] << " (+) and " << minus[k]
                << " (-) members; halves must be equal and nonempty";
            throw Error(ErrorCode::kInvalidArgument, msg.str());
        }
    }
    ClassStructure s;
    s.mode_ = ClassMode::kGeneral;
    s.n_ = n;
    s.table_ = std::move(table);
    for (int k = 0; k <= max_k; ++k) s.multiplicity_.push_back(2 * plus[k]);
    return s;
}

int ClassStructure::class_of(std::uint64_t x) const {
    if (mode_ == ClassMode::kGeneral) return table_[x].k;
    int w = std::popcount(x);
    return std::min(w, n_ - w);
}

bool ClassStructure::in_plus_half(std::uint64_t x) const {
    if (mode_ == ClassMode::kGeneral) return table_[x].plus;
    int w = std::popcount(x);
    if (2 * w == n_) return (x & 1u) == 0;
    return 2 * w < n_;
}

bool CoefficientClass::contains(int id) const { return std::binary_search(ids.begin(), ids.end(), id); }

double ClassifiedState::coefficient_sum() const {
    double s = 0.0;
    for (const auto &c : classes) s += static_cast<double>(c.multiplicity) * c.value;
    return s;
}

double ClassifiedState::norm_squared() const {
    double s = 0.0;
    for (const auto &c : classes) s += static_cast<double>(c.multiplicity) * c.value * c.value;
    return s;
}

std::uint64_t ClassifiedState::total_multiplicity() const {
    std::uint64_t s = 0;
    for (const auto &c : classes) s += c.multiplicity;
    return s;
}

std::size_t ClassifiedState::index_of(int id) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].contains(id)) return i;
    }
    throw Error(ErrorCode::kUnknownClass, "no class contains id " + std::to_string(id));
}

ClassifiedState merge_equal_classes(ClassifiedState state) {
    auto &cls = state.classes;
    std::sort(cls.begin(), cls.end(), [](const auto &a, const auto &b) { return a.value < b.value; });
    std::vector<CoefficientClass> merged;
    for (auto &c : cls) {
        if (!merged.empty() && values_equal(merged.back().value, c.value)) {
            auto &last = merged.back();
            double weight = static_cast<double>(last.multiplicity) * last.value * last.value +
                            static_cast<double>(c.multiplicity) * c.value * c.value;
            last.multiplicity += c.multiplicity;
            last.value = std::sqrt(weight / static_cast<double>(last.multiplicity));
            last.ids = merged_ids(last.ids, c.ids);
        } else {
            merged.push_back(std::move(c));
        }
    }
    std::sort(merged.begin(), merged.end(), [](const auto &a, const auto &b) { return a.id() < b.id(); });
    state.classes = std::move(merged);
    return state;
}

ClassifiedState classify(const ClassStructure &structure, std::span<const double> values) {
    if (static_cast<int>(values.size()) != structure.base_class_count()) {
        throw Error(ErrorCode::kInvalidArgument, "one value per base class required");
    }
    ClassifiedState state;
    state.n = structure.n();
    for (int k = 0; k < structure.base_class_count(); ++k) {
        if (values[k] < 0) throw Error(ErrorCode::kPreconditionViolated, "class values must be nonnegative");
        state.classes.push_back({values[k], structure.multiplicity(k), {k}});
    }
    return merge_equal_classes(std::move(state));
}

ClassifiedState classify_symmetric(const SymmetricTarget &target) {
    target.validate();
    require_nonnegative_real(target.coeffs);
    std::vector<double> values;
    for (const auto &c : target.coeffs) values.push_back(c.real());
    return classify(ClassStructure::symmetric(target.n), values);
}

ClassifiedState classify_general(const GeneralClassSpec &target) {
    target.validate();
    require_nonnegative_real(target.coeffs);
    std::vector<double> values;
    for (const auto &c : target.coeffs) values.push_back(c.real());
    return classify(ClassStructure::general(target.n, target.table), values);
}

namespace {

std::vector<double> canonicalize_coeffs(std::vector<Complex> &coeffs) {
    std::vector<double> phases;
    for (auto &c : coeffs) {
        double magnitude = std::abs(c);
        phases.push_back(magnitude == 0.0 ? 0.0 : wrap_angle(std::arg(c)));
        c = magnitude;
    }
    return phases;
}

}  // namespace

CanonicalTarget<SymmetricTarget> phase_canonicalize(const SymmetricTarget &target) {
    CanonicalTarget<SymmetricTarget> out{target, {}};
    out.phases = canonicalize_coeffs(out.target.coeffs);
    return out;
}

CanonicalTarget<GeneralClassSpec> phase_canonicalize(const GeneralClassSpec &target) {
    CanonicalTarget<GeneralClassSpec> out{target, {}};
    out.phases = canonicalize_coeffs(out.target.coeffs);
    return out;
}

double sufficient_condition(const ClassifiedState &state, int lo, int hi) {
    const auto &a = state.at(lo);
    const auto &b = state.at(hi);
    return state.coefficient_sum() - std::ldexp(a.value + b.value, state.n - 2);
}

RdrOutcome apply_rdr_classes(const ClassifiedState &state, int lo, int hi, double theta) {
    std::size_t ilo = state.index_of(lo);
    std::size_t ihi = state.index_of(hi);
    if (ilo == ihi) throw Error(ErrorCode::kInvalidArgument, "lo and hi must be distinct classes");
    if (!(theta >= 0.0 && theta < std::numbers::pi / 2)) {
        throw Error(ErrorCode::kInvalidArgument, "theta must lie in [0, pi/2)");
    }

    const double half = std::ldexp(1.0, state.n - 1);
    const auto &clo = state.classes[ilo];
    const auto &chi = state.classes[ihi];
    const double a0 = clo.value;
    const double a1 = chi.value;
    const double two_l = static_cast<double>(clo.multiplicity);
    const double m = static_cast<double>(chi.multiplicity) / 2;

    double rest = 0.0;  // C
    for (std::size_t i = 0; i < state.classes.size(); ++i) {
        if (i == ilo || i == ihi) continue;
        rest += static_cast<double>(state.classes[i].multiplicity) * state.classes[i].value;
    }
    // Sum of all coefficients after R_theta; it stays real since the hi halves
    // carry conjugate phases.
    const double shifted_sum = two_l * a0 + 2 * m * a1 * std::cos(theta) + rest;
    const Complex e_plus = std::polar(1.0, theta);

    RdrOutcome out;
    out.state.n = state.n;
    const double a_lo = (shifted_sum - half * a0) / half;
    const Complex a_hi = (two_l * a0 + (m - half) * a1 * e_plus + m * a1 * std::conj(e_plus) + rest) / half;

    out.lo_amplitude = a_lo;
    out.hi_magnitude = std::abs(a_hi);
    out.phi = out.hi_magnitude == 0.0 ? 0.0 : wrap_angle(std::arg(a_hi));

    for (std::size_t i = 0; i < state.classes.size(); ++i) {
        const auto &c = state.classes[i];
        double value;
        if (i == ilo) {
            value = a_lo;
        } else if (i == ihi) {
            value = out.hi_magnitude;
        } else {
            value = (shifted_sum - half * c.value) / half;
        }
        if (value < 0) out.flips.push_back(c.ids);
        out.state.classes.push_back({std::abs(value), c.multiplicity, c.ids});
    }
    out.state = merge_equal_classes(std::move(out.state));
    return out;
}

RpidOutcome apply_rpid_classes(const ClassifiedState &state) {
    if (state.classes.size() < 2) {
        throw Error(ErrorCode::kPreconditionViolated, "D fixes a uniform state; no R_pi D step applies");
    }
    const double half = std::ldexp(1.0, state.n - 1);
    const double sum = state.coefficient_sum();
    std::size_t ilo = 0;
    for (std::size_t i = 1; i < state.classes.size(); ++i) {
        if (state.classes[i].value < state.classes[ilo].value) ilo = i;
    }

    RpidOutcome out;
    out.state.n = state.n;
    for (std::size_t i = 0; i < state.classes.size(); ++i) {
        const auto &c = state.classes[i];
        double after_d = sum - half * c.value;  // 2^{n-1} times the coefficient after D
        bool sign_ok = (i == ilo) ? after_d > 0 : after_d < 0;
        if (!sign_ok) {
            throw Error(ErrorCode::kPreconditionViolated,
                        "sign pattern after D is not (+, -, ..., -); the state satisfies the merge condition");
        }
        if (i != ilo) out.flips.push_back(c.ids);
        out.state.classes.push_back({std::abs(after_d) / half, c.multiplicity, c.ids});
    }
    out.state = merge_equal_classes(std::move(out.state));
    return out;
}

}  // namespace qsp
