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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qsp {

using Complex = std::complex<double>;

/// Two class amplitudes a, b are the same class when
/// |a - b| <= kMergeTolerance * max(1, |a|, |b|).
inline constexpr double kMergeTolerance = 1e-9;

/// Allowed deviation of a target's squared norm from 1.
inline constexpr double kTargetNormTolerance = 1e-12;

bool values_equal(double a, double b);

/// sum_k a_k |k>_s where |k>_s is the equal superposition of all n-bit strings
/// with Hamming weight k or n - k. coeffs holds a_0 .. a_{floor(n/2)}.
struct SymmetricTarget {
    int n = 0;
    std::vector<Complex> coeffs;

    /// 2 C(n, k), or C(n, n/2) for the middle class of even n.
    static std::uint64_t class_multiplicity(int n, int k);

    void validate() const;
    Complex amplitude(std::uint64_t x) const;
};

/// Image (k, +) or (k, -) of one basis vector under the class function.
struct ClassLabel {
    int k = 0;
    bool plus = true;

    friend bool operator==(const ClassLabel &, const ClassLabel &) = default;
};

/// sum_k c_k sum_{x : f(x) = (k, +/-)} |x>, with f given as a full table.
/// table[x] is indexed by the basis integer x (qubit 0 is the least
/// significant bit).
struct GeneralClassSpec {
    int n = 0;
    int M = 0;
    std::vector<ClassLabel> table;
    std::vector<Complex> coeffs;

    void validate() const;
    Complex amplitude(std::uint64_t x) const { return coeffs[table[x].k]; }
};

enum class ClassMode { kSymmetric, kGeneral };

/// Partition of the 2^n basis vectors into base classes, each split into a
/// "+" half and a "-" half of equal size.
///
/// Symmetric mode: class k holds weights k and n - k; the + half is weight k
/// (for the middle class of even n, the strings with qubit 0 clear).
class ClassStructure {
   public:
    static ClassStructure symmetric(int n);
    static ClassStructure general(int n, std::vector<ClassLabel> table);

    ClassMode mode() const { return mode_; }
    int n() const { return n_; }
    int base_class_count() const { return static_cast<int>(multiplicity_.size()); }

    int class_of(std::uint64_t x) const;
    bool in_plus_half(std::uint64_t x) const;
    std::uint64_t multiplicity(int k) const { return multiplicity_.at(k); }

    /// Empty in symmetric mode.
    const std::vector<ClassLabel> &table() const { return table_; }

   private:
    ClassMode mode_ = ClassMode::kSymmetric;
    int n_ = 0;
    std::vector<ClassLabel> table_;
    std::vector<std::uint64_t> multiplicity_;
};

/// Sorted list of base class ids.
using IdSet = std::vector<int>;

struct CoefficientClass {
    double value = 0.0;
    std::uint64_t multiplicity = 0;
    IdSet ids;

    int id() const { return ids.front(); }
    bool contains(int id) const;
};

struct ClassifiedState {
    int n = 0;
    std::vector<CoefficientClass> classes;

    /// S, the plain sum of all 2^n coefficients.
    double coefficient_sum() const;
    double norm_squared() const;
    std::uint64_t total_multiplicity() const;
    bool is_uniform() const { return classes.size() == 1; }

    /// Position of the class that contains base id `id`; throws UnknownClass.
    std::size_t index_of(int id) const;
    const CoefficientClass &at(int id) const { return classes[index_of(id)]; }
};

/// Builds the classified state for nonnegative per-base-class values,
/// merging classes whose values agree within tolerance.
ClassifiedState classify(const ClassStructure &structure, std::span<const double> values);

ClassifiedState classify_symmetric(const SymmetricTarget &target);
ClassifiedState classify_general(const GeneralClassSpec &target);

/// Merges classes whose values agree within kMergeTolerance. The merged value
/// is the multiplicity-weighted RMS so the norm is unchanged.
ClassifiedState merge_equal_classes(ClassifiedState state);

template <class Target>
struct CanonicalTarget {
    Target target;
    /// a_k = |a_k| e^{i phases[k]}, phases in [0, 2pi).
    std::vector<double> phases;
};

CanonicalTarget<SymmetricTarget> phase_canonicalize(const SymmetricTarget &target);
CanonicalTarget<GeneralClassSpec> phase_canonicalize(const GeneralClassSpec &target);

/// S - 2^{n-2} (a_lo + a_hi).
double sufficient_condition(const ClassifiedState &state, int lo, int hi);

struct RdrOutcome {
    ClassifiedState state;
    /// e^{i phi} = A_hi / |A_hi|, in [0, 2pi); zero when A_hi vanishes.
    double phi = 0.0;
    /// Signed amplitude of the lo class after D.
    double lo_amplitude = 0.0;
    double hi_magnitude = 0.0;
    /// Base-id sets whose post-step coefficient is negative.
    std::vector<IdSet> flips;
};

/// Classical image of R~_theta D R_theta: the hi class is split into halves
/// shifted by +theta / -theta, D is applied, and the hi phase is removed.
RdrOutcome apply_rdr_classes(const ClassifiedState &state, int lo, int hi, double theta);

struct RpidOutcome {
    ClassifiedState state;
    std::vector<IdSet> flips;
};

/// Classical image of R_pi D; every class except the minimum one changes sign
/// under D and is flipped back.
RpidOutcome apply_rpid_classes(const ClassifiedState &state);

}  // namespace qsp
