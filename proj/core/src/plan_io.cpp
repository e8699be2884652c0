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

#include "qsp/plan_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "qsp/error.hpp"

namespace qsp {
namespace {

std::string hex_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

std::string join_ids(const IdSet &ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string join_sets(const std::vector<IdSet> &sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += ';';
        out += join_ids(sets[i]);
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

class LineParser {
   public:
    explicit LineParser(int line) : line_(line) {}

    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_) + ": " + what);
    }

    double real(std::string_view s) const {
        std::string buf(s);
        char *end = nullptr;
        errno = 0;
        double v = std::strtod(buf.c_str(), &end);
        if (buf.empty() || end != buf.c_str() + buf.size() || errno == ERANGE) fail("bad number '" + buf + "'");
        return v;
    }

    long integer(std::string_view s) const {
        std::string buf(s);
        char *end = nullptr;
        errno = 0;
        long v = std::strtol(buf.c_str(), &end, 10);
        if (buf.empty() || end != buf.c_str() + buf.size() || errno == ERANGE) fail("bad integer '" + buf + "'");
        return v;
    }

    IdSet ids(std::string_view s) const {
        IdSet out;
        for (auto part : split(s, ',')) out.push_back(static_cast<int>(integer(part)));
        if (out.empty()) fail("empty class id set");
        return out;
    }

    std::vector<IdSet> id_sets(std::string_view s) const {
        std::vector<IdSet> out;
        for (auto part : split(s, ';')) out.push_back(ids(part));
        return out;
    }

    /// Value of `key=` in token `tok`.
    std::string_view field(std::string_view tok, std::string_view key) const {
        if (tok.size() <= key.size() || tok.substr(0, key.size()) != key || tok[key.size()] != '=') {
            fail("expected field '" + std::string(key) + "='");
        }
        return tok.substr(key.size() + 1);
    }

   private:
    int line_;
};

}  // namespace

std::string to_bitstring(std::uint64_t x, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((x >> q) & 1) out[q] = '1';
    }
    return out;
}

std::uint64_t parse_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > 63) throw Error(ErrorCode::kParse, "bitstring length out of range");
    std::uint64_t x = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            x |= std::uint64_t{1} << q;
        } else if (bits[q] != '0') {
            throw Error(ErrorCode::kParse, "bitstring '" + std::string(bits) + "' has a character other than 0/1");
        }
    }
    return x;
}

std::string write_plan(const Plan &plan) {
    std::ostringstream out;
    const auto &structure = plan.structure;
    out << "qsp-plan 1\n";
    out << "n " << structure.n() << "\n";
    out << "mode " << (structure.mode() == ClassMode::kSymmetric ? "symmetric" : "general") << "\n";
    out << "direction " << (plan.direction == Direction::kReduce ? "reduce" : "build") << "\n";
    if (structure.mode() == ClassMode::kGeneral) {
        const auto &table = structure.table();
        for (std::size_t x = 0; x < table.size(); ++x) {
            out << "table " << to_bitstring(x, structure.n()) << ' ' << table[x].k << ' ' << (table[x].plus ? '+' : '-')
                << "\n";
        }
    }
    for (const auto &step : plan.steps) {
        std::visit(
            [&](const auto &s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, RdrMerge>) {
                    out << "step rdr lo=" << join_ids(s.lo) << " hi=" << join_ids(s.hi) << " theta=" << hex_double(s.theta)
                        << " phi=" << hex_double(s.phi) << " flips=" << join_sets(s.flips) << "\n";
                } else if constexpr (std::is_same_v<T, RpiD>) {
                    out << "step rpid flips=" << join_sets(s.flips) << "\n";
                } else if constexpr (std::is_same_v<T, PiFlip>) {
                    out << "step piflip classes=" << join_sets(s.classes) << "\n";
                } else {
                    out << "step phases ";
                    for (std::size_t i = 0; i < s.phases.size(); ++i) {
                        if (i) out << ';';
                        out << s.phases[i].first << ':' << hex_double(s.phases[i].second);
                    }
                    out << "\n";
                }
            },
            step);
    }
    out << "end\n";
    return out.str();
}

Plan read_plan(std::string_view text) {
    std::optional<int> n;
    std::optional<ClassMode> mode;
    std::optional<Direction> direction;
    std::vector<std::optional<ClassLabel>> table;
    std::vector<PlanStep> steps;
    bool header = false;
    bool ended = false;
    std::optional<ClassStructure> structure;

    int line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        LineParser p(line_no);
        auto tok = tokens(raw);
        if (tok.empty() || tok[0].front() == '#') continue;
        if (ended) p.fail("content after 'end'");
        if (!header) {
            if (tok.size() != 2 || tok[0] != "qsp-plan" || tok[1] != "1") p.fail("expected header 'qsp-plan 1'");
            header = true;
            continue;
        }
        auto key = tok[0];
        auto ensure_structure = [&]() -> const ClassStructure & {
            if (!structure) {
                if (!n || !mode || !direction) p.fail("steps must follow the n, mode and direction lines");
                if (*mode == ClassMode::kSymmetric) {
                    structure = ClassStructure::symmetric(*n);
                } else {
                    std::vector<ClassLabel> labels;
                    if (table.size() != (std::size_t{1} << *n)) p.fail("general-mode table is incomplete");
                    for (const auto &l : table) {
                        if (!l) p.fail("general-mode table is incomplete");
                        labels.push_back(*l);
                    }
                    try {
                        structure = ClassStructure::general(*n, std::move(labels));
                    } catch (const Error &e) {
                        p.fail(e.what());
                    }
                }
            }
            return *structure;
        };

        if (key == "n") {
            if (tok.size() != 2 || n) p.fail("expected a single 'n <count>' line");
            long v = p.integer(tok[1]);
            if (v < 2 || v > 62) p.fail("n out of range");
            n = static_cast<int>(v);
        } else if (key == "mode") {
            if (tok.size() != 2 || mode) p.fail("expected a single 'mode' line");
            if (tok[1] == "symmetric") {
                mode = ClassMode::kSymmetric;
            } else if (tok[1] == "general") {
                mode = ClassMode::kGeneral;
            } else {
                p.fail("unknown mode '" + std::string(tok[1]) + "'");
            }
        } else if (key == "direction") {
            if (tok.size() != 2 || direction) p.fail("expected a single 'direction' line");
            if (tok[1] == "reduce") {
                direction = Direction::kReduce;
            } else if (tok[1] == "build") {
                direction = Direction::kBuild;
            } else {
                p.fail("unknown direction '" + std::string(tok[1]) + "'");
            }
        } else if (key == "table") {
            if (!n || mode != ClassMode::kGeneral) p.fail("table lines need 'n' and 'mode general' first");
            if (*n > 30) p.fail("general mode supports n <= 30");
            if (tok.size() != 4) p.fail("expected 'table <bits> <k> <+|->'");
            if (static_cast<int>(tok[1].size()) != *n) p.fail("bitstring length differs from n");
            std::uint64_t x;
            try {
                x = parse_bitstring(tok[1]);
            } catch (const Error &e) {
                p.fail(e.what());
            }
            if (table.empty()) table.resize(std::size_t{1} << *n);
            if (table[x]) p.fail("duplicate table entry");
            if (tok[3] != "+" && tok[3] != "-") p.fail("sign must be + or -");
            table[x] = ClassLabel{static_cast<int>(p.integer(tok[2])), tok[3] == "+"};
        } else if (key == "step") {
            const auto &s = ensure_structure();
            if (tok.size() < 2) p.fail("missing step kind");
            auto check_ids = [&](const IdSet &ids) {
                for (int id : ids) {
                    if (id < 0 || id >= s.base_class_count()) p.fail("class id " + std::to_string(id) + " out of range");
                }
            };
            auto check_sets = [&](const std::vector<IdSet> &sets) {
                for (const auto &ids : sets) check_ids(ids);
            };
            if (tok[1] == "rdr") {
                if (tok.size() != 7) p.fail("rdr step needs lo, hi, theta, phi, flips");
                RdrMerge m;
                m.lo = p.ids(p.field(tok[2], "lo"));
                m.hi = p.ids(p.field(tok[3], "hi"));
                m.theta = p.real(p.field(tok[4], "theta"));
                m.phi = p.real(p.field(tok[5], "phi"));
                m.flips = p.id_sets(p.field(tok[6], "flips"));
                check_ids(m.lo);
                check_ids(m.hi);
                check_sets(m.flips);
                steps.emplace_back(std::move(m));
            } else if (tok[1] == "rpid") {
                if (tok.size() != 3) p.fail("rpid step needs flips");
                RpiD r{p.id_sets(p.field(tok[2], "flips"))};
                check_sets(r.flips);
                steps.emplace_back(std::move(r));
            } else if (tok[1] == "piflip") {
                if (tok.size() != 3) p.fail("piflip step needs classes");
                PiFlip f{p.id_sets(p.field(tok[2], "classes"))};
                check_sets(f.classes);
                steps.emplace_back(std::move(f));
            } else if (tok[1] == "phases") {
                if (tok.size() != 3) p.fail("phases step needs one k:angle list");
                ClassPhases c;
                for (auto part : split(tok[2], ';')) {
                    auto colon = part.find(':');
                    if (colon == std::string_view::npos) p.fail("expected k:angle");
                    int k = static_cast<int>(p.integer(part.substr(0, colon)));
                    check_ids({k});
                    c.phases.emplace_back(k, p.real(part.substr(colon + 1)));
                }
                steps.emplace_back(std::move(c));
            } else {
                p.fail("unknown step kind '" + std::string(tok[1]) + "'");
            }
        } else if (key == "end") {
            if (tok.size() != 1) p.fail("unexpected tokens after 'end'");
            ensure_structure();
            ended = true;
        } else {
            p.fail("unknown keyword '" + std::string(key) + "'");
        }
    }
    if (!header) throw Error(ErrorCode::kParse, "line 1: missing 'qsp-plan 1' header");
    if (!ended) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": missing 'end'");
    return Plan{std::move(*structure), *direction, std::move(steps), {}};
}

std::string write_trace(const Plan &plan) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < plan.trace.size(); ++i) {
        const auto &state = plan.trace[i];
        out << "snapshot " << i << " classes=" << state.classes.size() << "\n";
        for (const auto &c : state.classes) {
            out << "  ids=" << join_ids(c.ids) << " multiplicity=" << c.multiplicity << " value=" << c.value << "\n";
        }
    }
    return out.str();
}

}  // namespace qsp
