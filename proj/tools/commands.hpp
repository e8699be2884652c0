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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsp/circuit.hpp"

namespace qsp::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInputError = 2,
    kExitBudgetExceeded = 3,
};

struct RunReport {
    std::string target_digest;
    int n = 0;
    std::string mode;
    std::optional<std::size_t> rdr_steps;
    std::optional<std::size_t> rpid_steps;
    GateTally gates;
    std::vector<AuditRow> audit;
    std::optional<double> fidelity;
    std::optional<double> leakage;
    double fidelity_threshold = 0.0;
    bool passed = false;
    double wall_time_seconds = 0.0;

    /// JSON object, pretty-printed.
    std::string to_json() const;
};

/// Entry point of the qsp tool; argv[0] is the program name. Output files are
/// written where the flags say; reports and tables go to `out`, diagnostics to
/// `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qsp::cli
