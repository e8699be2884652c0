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
#include <string>
#include <string_view>

#include "qsp/planner.hpp"

namespace qsp {

/// Bitstring of the low n bits of x with qubit 0 leftmost.
std::string to_bitstring(std::uint64_t x, int n);
/// Inverse of to_bitstring; throws Parse on characters other than 0/1.
std::uint64_t parse_bitstring(std::string_view bits);

/// Line-oriented plan format:
///
///   qsp-plan 1
///   n <n>
///   mode symmetric|general
///   direction reduce|build
///   table <bits> <k> <+|->            (general mode, one line per basis string)
///   step rdr lo=<ids> hi=<ids> theta=<hex> phi=<hex> flips=<ids>;<ids>...
///   step rpid flips=<ids>;...
///   step piflip classes=<ids>;...
///   step phases <k>:<hex>;...
///   end
///
/// Id sets are comma-separated base class ids; angles are hexadecimal floats
/// so that a round trip is bit-exact.
std::string write_plan(const Plan &plan);

/// Parses write_plan output. The trace is not stored in the file and is left
/// empty. Throws Parse with the offending line number.
Plan read_plan(std::string_view text);

/// Human-readable class snapshots, one block per trace entry.
std::string write_trace(const Plan &plan);

}  // namespace qsp
