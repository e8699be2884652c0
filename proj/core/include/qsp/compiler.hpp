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

#include "qsp/circuit.hpp"
#include "qsp/planner.hpp"

namespace qsp {

/// Register layout used for plans over `structure`.
RegisterLayout layout_for(const ClassStructure &structure);

/// Lowers a build-direction plan to gates: H on every main qubit, then for
/// each step the diagonal class phases (collected into layers of
/// U_f . selective phases . U_f^dagger) and the -D networks. Consecutive
/// diagonal operations are fused into one layer. Throws DirectionMismatch on
/// a reduce-direction plan.
GateCircuit compile_plan(const Plan &plan);

}  // namespace qsp
