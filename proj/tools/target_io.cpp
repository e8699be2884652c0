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

#include "target_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "qsp/error.hpp"
#include "qsp/plan_io.hpp"
#include "qsp/statevector.hpp"

namespace qsp::cli {
namespace {

[[noreturn]] void fail(int line, const std::string &what) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(int line, const std::string &s) {
    char *end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        fail(line, "malformed number '" + s + "'");
    }
    return v;
}

int parse_int(int line, const std::string &s) {
    char *end = nullptr;
    errno = 0;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || v < 0 || v > 1000000) {
        fail(line, "malformed integer '" + s + "'");
    }
    return static_cast<int>(v);
}

Complex parse_coefficient(int line, const std::string &token) {
    const auto comma = token.find(',');
    if (comma == std::string::npos) return {parse_real(line, token), 0.0};
    return {parse_real(line, token.substr(0, comma)), parse_real(line, token.substr(comma + 1))};
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> class_multiplicities(const TargetSpec &spec) {
    std::vector<double> out;
    if (spec.mode == ClassMode::kSymmetric) {
        for (int k = 0; k <= spec.symmetric.n / 2; ++k) {
            out.push_back(static_cast<double>(SymmetricTarget::class_multiplicity(spec.symmetric.n, k)));
        }
    } else {
        auto structure = ClassStructure::general(spec.general.n, spec.general.table);
        for (int k = 0; k < structure.base_class_count(); ++k) {
            out.push_back(static_cast<double>(structure.multiplicity(k)));
        }
    }
    return out;
}

}  // namespace

void TargetSpec::validate() const {
    if (mode == ClassMode::kSymmetric) {
        symmetric.validate();
    } else {
        general.validate();
    }
}

std::vector<Complex> TargetSpec::amplitudes() const {
    return mode == ClassMode::kSymmetric ? target_amplitudes(symmetric) : target_amplitudes(general);
}

Plan TargetSpec::plan(std::optional<std::int64_t> max_rpid) const {
    return mode == ClassMode::kSymmetric ? plan_reduce(symmetric, max_rpid) : plan_reduce(general, max_rpid);
}

TargetSpec parse_target(std::string_view text) {
    TargetSpec spec;
    std::optional<int> n;
    std::optional<int> M;
    std::optional<ClassMode> mode;
    bool normalize = false;
    std::vector<Complex> coeffs;
    int coeff_line = 0;
    std::vector<std::optional<ClassLabel>> table;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string content = trim(raw);
        if (content.empty()) continue;

        if (content.rfind("table", 0) == 0 && content.find('=') == std::string::npos) {
            std::istringstream ls(content);
            std::string kw, bits, k, sign, extra;
            ls >> kw >> bits >> k >> sign;
            if (kw != "table" || sign.empty() || (ls >> extra)) fail(line, "expected 'table <bits> <k> <+|->'");
            if (!n) fail(line, "table lines must follow 'n ='");
            if (mode != ClassMode::kGeneral) fail(line, "table lines need 'mode = general' first");
            if (static_cast<int>(bits.size()) != *n) fail(line, "bitstring length differs from n");
            std::uint64_t x;
            try {
                x = parse_bitstring(bits);
            } catch (const Error &e) {
                fail(line, e.what());
            }
            if (sign != "+" && sign != "-") fail(line, "sign must be + or -");
            if (table.empty()) table.resize(std::size_t{1} << *n);
            if (table[x]) fail(line, "duplicate table entry for " + bits);
            table[x] = ClassLabel{parse_int(line, k), sign == "+"};
            continue;
        }

        const auto eq = content.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value'");
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key == "n") {
            if (n) fail(line, "duplicate 'n'");
            n = parse_int(line, value);
            if (*n < 2 || *n > 62) fail(line, "n must lie in 2..62");
        } else if (key == "M") {
            if (M) fail(line, "duplicate 'M'");
            M = parse_int(line, value);
        } else if (key == "mode") {
            if (mode) fail(line, "duplicate 'mode'");
            if (value == "symmetric") {
                mode = ClassMode::kSymmetric;
            } else if (value == "general") {
                mode = ClassMode::kGeneral;
            } else {
                fail(line, "mode must be symmetric or general, got '" + value + "'");
            }
        } else if (key == "coeffs") {
            std::istringstream vs(value);
            std::string tok;
            bool any = false;
            while (vs >> tok) {
                coeffs.push_back(parse_coefficient(line, tok));
                any = true;
            }
            if (!any) fail(line, "empty coefficient list");
            coeff_line = line;
        } else if (key == "normalize") {
            if (value == "yes" || value == "true") {
                normalize = true;
            } else if (value == "no" || value == "false") {
                normalize = false;
            } else {
                fail(line, "normalize must be yes or no");
            }
        } else {
            fail(line, "unknown key '" + key + "'");
        }
    }

    if (!n) fail(line, "missing 'n'");
    spec.mode = mode.value_or(ClassMode::kSymmetric);
    if (coeffs.empty()) fail(line, "missing 'coeffs'");
    if (spec.mode == ClassMode::kSymmetric) {
        if (M) fail(line, "'M' is only valid in general mode");
        if (!table.empty()) fail(line, "table lines are only valid in general mode");
        if (static_cast<int>(coeffs.size()) != *n / 2 + 1) {
            fail(coeff_line, "expected " + std::to_string(*n / 2 + 1) + " coefficients for n = " + std::to_string(*n) +
                                 ", got " + std::to_string(coeffs.size()));
        }
        spec.symmetric = {*n, coeffs};
    } else {
        if (*n > 30) fail(line, "general mode supports n <= 30");
        if (!M) fail(line, "general mode needs 'M'");
        if (static_cast<int>(coeffs.size()) != *M + 1) {
            fail(coeff_line, "expected M+1 = " + std::to_string(*M + 1) + " coefficients, got " +
                                 std::to_string(coeffs.size()));
        }
        if (table.size() != (std::size_t{1} << *n)) fail(line, "class table is incomplete");
        std::vector<ClassLabel> labels;
        for (std::size_t x = 0; x < table.size(); ++x) {
            if (!table[x]) fail(line, "class table has no entry for " + to_bitstring(x, *n));
            labels.push_back(*table[x]);
        }
        spec.general = {*n, *M, std::move(labels), coeffs};
    }

    if (normalize) {
        auto mult = class_multiplicities(spec);
        auto &c = spec.mode == ClassMode::kSymmetric ? spec.symmetric.coeffs : spec.general.coeffs;
        if (mult.size() != c.size()) fail(line, "coefficient count does not match the class table");
        double norm = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) norm += mult[k] * std::norm(c[k]);
        if (norm <= 0.0) fail(coeff_line, "cannot normalize an all-zero target");
        for (auto &v : c) v /= std::sqrt(norm);
    }
    spec.validate();
    return spec;
}

std::string write_target(const TargetSpec &spec) {
    std::ostringstream out;
    out << "n = " << spec.n() << "\n";
    out << "mode = " << (spec.mode == ClassMode::kSymmetric ? "symmetric" : "general") << "\n";
    if (spec.mode == ClassMode::kGeneral) out << "M = " << spec.general.M << "\n";
    out << "coeffs =";
    for (const auto &c : spec.coeffs()) {
        out << ' ' << format_real(c.real());
        if (c.imag() != 0.0) out << ',' << format_real(c.imag());
    }
    out << "\n";
    if (spec.mode == ClassMode::kGeneral) {
        for (std::size_t x = 0; x < spec.general.table.size(); ++x) {
            const auto &l = spec.general.table[x];
            out << "table " << to_bitstring(x, spec.general.n) << ' ' << l.k << ' ' << (l.plus ? '+' : '-') << "\n";
        }
    }
    return out.str();
}

std::string target_digest(const TargetSpec &spec) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : write_target(spec)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

TargetSpec random_symmetric_target(int n, std::mt19937_64 &rng, bool complex_phases) {
    std::uniform_real_distribution<double> magnitude(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
    TargetSpec spec;
    spec.mode = ClassMode::kSymmetric;
    spec.symmetric.n = n;
    double norm = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        const double r = 1.0 - magnitude(rng);  // in (0, 1]
        const Complex c = complex_phases ? std::polar(r, phase(rng)) : Complex{r, 0.0};
        spec.symmetric.coeffs.push_back(c);
        norm += static_cast<double>(SymmetricTarget::class_multiplicity(n, k)) * r * r;
    }
    for (auto &c : spec.symmetric.coeffs) c /= std::sqrt(norm);
    return spec;
}

TargetSpec ghz_target(int n) {
    TargetSpec spec;
    spec.mode = ClassMode::kSymmetric;
    spec.symmetric.n = n;
    spec.symmetric.coeffs.assign(n / 2 + 1, Complex{0.0, 0.0});
    spec.symmetric.coeffs[0] = std::sqrt(0.5);
    return spec;
}

}  // namespace qsp::cli
