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

#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsp/compiler.hpp"
#include "qsp/error.hpp"
#include "qsp/networks.hpp"
#include "qsp/plan_io.hpp"
#include "qsp/statevector.hpp"
#include "target_io.hpp"

namespace qsp::cli {
namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
    out << text;
    if (!out) throw Error(ErrorCode::kInvalidArgument, "failed writing '" + path + "'");
}

/// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::kIterationBudgetExceeded:
        case ErrorCode::kCapExceeded:
            return kExitBudgetExceeded;
        default:
            return kExitInputError;
    }
}

struct VerifyOptions {
    double threshold = 1.0 - 1e-8;
    int qubit_cap = kDefaultQubitCap;
    std::string dump_amps;
    std::string report;
};

/// Simulates `circuit` from |0...0> and fills the fidelity part of `report`.
void simulate_into(const TargetSpec &spec, const GateCircuit &circuit, const VerifyOptions &opts, RunReport &report,
                   std::ostream &out) {
    if (circuit.layout.n_main != spec.n()) {
        throw Error(ErrorCode::kInvalidArgument, "circuit acts on " + std::to_string(circuit.layout.n_main) +
                                                     " main qubits but the target has n = " + std::to_string(spec.n()));
    }
    Statevector state(circuit.layout.total(), opts.qubit_cap);
    run_circuit(state, circuit);
    auto target = spec.amplitudes();
    auto f = fidelity(state, spec.n(), target);
    report.fidelity = f.fidelity;
    report.leakage = f.leakage;
    report.fidelity_threshold = opts.threshold;
    report.passed = f.fidelity >= opts.threshold;
    if (!opts.dump_amps.empty()) emit(opts.dump_amps == "-" ? "" : opts.dump_amps, dump_amplitudes(state, 1e-15), out);
}

void fill_circuit_stats(const GateCircuit &circuit, RunReport &report) {
    report.gates = gate_count(circuit);
    report.audit = audit(circuit);
    if (auto it = circuit.metadata.find("plan.rdr"); it != circuit.metadata.end()) {
        report.rdr_steps = std::stoull(it->second);
    }
    if (auto it = circuit.metadata.find("plan.rpid"); it != circuit.metadata.end()) {
        report.rpid_steps = std::stoull(it->second);
    }
}

std::string plan_summary(const Plan &plan) {
    std::ostringstream s;
    s << "steps=" << plan.steps.size() << " rdr=" << plan.count<RdrMerge>() << " rpid=" << plan.count<RpiD>()
      << " piflip=" << plan.count<PiFlip>() << " phases=" << plan.count<ClassPhases>() << "\n";
    return s.str();
}

}  // namespace

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["target_digest"] = target_digest;
    j["n"] = n;
    j["mode"] = mode;
    nlohmann::ordered_json plan;
    if (rdr_steps) plan["rdr"] = *rdr_steps;
    if (rpid_steps) plan["rpid"] = *rpid_steps;
    j["plan"] = plan.is_null() ? nlohmann::ordered_json::object() : plan;
    nlohmann::ordered_json g;
    g["total"] = gates.total;
    for (const auto &[kind, count] : gates.by_kind) g["by_kind"][gate_name(kind)] = count;
    j["gates"] = g;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &r : audit) {
        nlohmann::ordered_json row;
        row["variant"] = r.variant;
        row["instances"] = r.instances;
        row["count"] = r.count;
        row["expected"] = r.expected ? nlohmann::ordered_json(*r.expected) : nlohmann::ordered_json(nullptr);
        auto m = r.match();
        row["match"] = m ? nlohmann::ordered_json(*m) : nlohmann::ordered_json(nullptr);
        rows.push_back(row);
    }
    j["audit"] = rows;
    if (fidelity) j["fidelity"] = *fidelity;
    if (leakage) j["ancilla_leakage"] = *leakage;
    j["fidelity_threshold"] = fidelity_threshold;
    j["passed"] = passed;
    j["wall_time_seconds"] = wall_time_seconds;
    return j.dump(2) + "\n";
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qsp: state preparation by amplitude amplification over coefficient classes"};
    app.require_subcommand(1);

    std::optional<std::int64_t> max_rpid;
    VerifyOptions verify_opts;
    auto add_verify_flags = [&](CLI::App *cmd) {
        cmd->add_option("--fidelity-threshold", verify_opts.threshold, "Minimum fidelity to pass")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--qubit-cap", verify_opts.qubit_cap, "Largest simulated register")->check(CLI::Range(1, 30));
        cmd->add_option("--dump-amps", verify_opts.dump_amps, "Write 'bits re im' amplitude lines ('-' for stdout)");
        cmd->add_option("--report", verify_opts.report, "Write the JSON report here instead of stdout");
    };

    std::string spec_path, plan_path, circuit_path, output, reduce_out, trace_out, audit_out, out_dir;
    int n = 0;
    std::uint64_t seed = 1;
    bool complex_phases = false;

    auto *plan_cmd = app.add_subcommand("plan", "Plan a target spec; writes the build-direction plan");
    plan_cmd->add_option("spec", spec_path, "Target spec file")->required();
    plan_cmd->add_option("-o,--output", output, "Build plan output (default stdout)");
    plan_cmd->add_option("--reduce-out", reduce_out, "Also write the reduce-direction plan");
    plan_cmd->add_option("--trace-out", trace_out, "Write the class snapshots of the reduce run");
    plan_cmd->add_option("--max-rpid", max_rpid, "Budget of R_pi D steps")->check(CLI::PositiveNumber);

    auto *compile_cmd = app.add_subcommand("compile", "Compile a build-direction plan to gates");
    compile_cmd->add_option("plan", plan_path, "Plan file")->required();
    compile_cmd->add_option("-o,--output", output, "Circuit output (default stdout)");
    compile_cmd->add_option("--audit", audit_out, "Gate-count audit table (default stdout when -o is given)");

    auto *verify_cmd = app.add_subcommand("verify", "Simulate a circuit and compare it with a target spec");
    verify_cmd->add_option("spec", spec_path, "Target spec file")->required();
    verify_cmd->add_option("circuit", circuit_path, "Circuit file")->required();
    add_verify_flags(verify_cmd);

    auto *run_cmd = app.add_subcommand("run", "Plan, compile and verify a target spec in one go");
    run_cmd->add_option("spec", spec_path, "Target spec file")->required();
    run_cmd->add_option("--out-dir", out_dir, "Directory for plan, circuit and audit files");
    run_cmd->add_option("--max-rpid", max_rpid, "Budget of R_pi D steps")->check(CLI::PositiveNumber);
    add_verify_flags(run_cmd);

    auto *random_cmd = app.add_subcommand("random-spec", "Write a random normalized symmetric target spec");
    random_cmd->add_option("-n", n, "Qubit count")->required()->check(CLI::Range(2, 62));
    random_cmd->add_option("--seed", seed, "Generator seed");
    random_cmd->add_flag("--complex", complex_phases, "Random complex phases");
    random_cmd->add_option("-o,--output", output, "Spec output (default stdout)");

    auto *ghz_cmd = app.add_subcommand("ghz", "Write the GHZ preparation circuit");
    ghz_cmd->add_option("-n", n, "Qubit count")->required()->check(CLI::Range(2, 62));
    ghz_cmd->add_option("-o,--output", output, "Circuit output (default stdout)");
    ghz_cmd->add_option("--spec-out", reduce_out, "Also write the matching target spec");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    try {
        if (*plan_cmd) {
            auto spec = parse_target(read_file(spec_path));
            auto reduce = spec.plan(max_rpid);
            auto build = reverse_plan(reduce);
            emit(output, write_plan(build), out);
            if (!reduce_out.empty()) write_file(reduce_out, write_plan(reduce));
            if (!trace_out.empty()) write_file(trace_out, write_trace(reduce));
            err << "plan: " << plan_summary(reduce);
            return kExitOk;
        }
        if (*compile_cmd) {
            auto plan = read_plan(read_file(plan_path));
            auto circuit = compile_plan(plan);
            emit(output, write_circuit(circuit), out);
            auto table = audit_table(audit(circuit));
            if (!audit_out.empty()) {
                write_file(audit_out, table);
            } else if (!output.empty()) {
                out << table;
            }
            return kExitOk;
        }
        if (*verify_cmd) {
            auto spec = parse_target(read_file(spec_path));
            auto circuit = read_circuit(read_file(circuit_path));
            RunReport report;
            report.target_digest = target_digest(spec);
            report.n = spec.n();
            report.mode = spec.mode == ClassMode::kSymmetric ? "symmetric" : "general";
            fill_circuit_stats(circuit, report);
            simulate_into(spec, circuit, verify_opts, report, out);
            report.wall_time_seconds = elapsed();
            emit(verify_opts.report, report.to_json(), out);
            if (!report.passed) {
                err << "verify: fidelity " << *report.fidelity << " below threshold " << verify_opts.threshold << "\n";
                return kExitVerificationFailed;
            }
            return kExitOk;
        }
        if (*run_cmd) {
            auto spec = parse_target(read_file(spec_path));
            auto reduce = spec.plan(max_rpid);
            auto build = reverse_plan(reduce);
            auto circuit = compile_plan(build);
            if (!out_dir.empty()) {
                write_file(out_dir + "/plan.txt", write_plan(build));
                write_file(out_dir + "/reduce-plan.txt", write_plan(reduce));
                write_file(out_dir + "/trace.txt", write_trace(reduce));
                write_file(out_dir + "/circuit.txt", write_circuit(circuit));
                write_file(out_dir + "/audit.tsv", audit_table(audit(circuit)));
            }
            RunReport report;
            report.target_digest = target_digest(spec);
            report.n = spec.n();
            report.mode = spec.mode == ClassMode::kSymmetric ? "symmetric" : "general";
            fill_circuit_stats(circuit, report);
            simulate_into(spec, circuit, verify_opts, report, out);
            report.wall_time_seconds = elapsed();
            emit(verify_opts.report, report.to_json(), out);
            if (!report.passed) {
                err << "run: fidelity " << *report.fidelity << " below threshold " << verify_opts.threshold << "\n";
                return kExitVerificationFailed;
            }
            return kExitOk;
        }
        if (*random_cmd) {
            std::mt19937_64 rng(seed);
            emit(output, write_target(random_symmetric_target(n, rng, complex_phases)), out);
            return kExitOk;
        }
        if (*ghz_cmd) {
            emit(output, write_circuit(build_ghz(n)), out);
            if (!reduce_out.empty()) write_file(reduce_out, write_target(ghz_target(n)));
            return kExitOk;
        }
    } catch (const Error &e) {
        err << "qsp: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kExitInputError;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"qsp"};
    for (const auto &a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qsp::cli
