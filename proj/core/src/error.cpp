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

#include "qsp/error.hpp"

namespace qsp {

const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNotNormalized:
            return "NotNormalized";
        case ErrorCode::kUnknownClass:
            return "UnknownClass";
        case ErrorCode::kPreconditionViolated:
            return "PreconditionViolated";
        case ErrorCode::kAlreadyUniform:
            return "AlreadyUniform";
        case ErrorCode::kNoRoot:
            return "NoRoot";
        case ErrorCode::kIterationBudgetExceeded:
            return "IterationBudgetExceeded";
        case ErrorCode::kNotTwoClass:
            return "NotTwoClass";
        case ErrorCode::kNoIdleQubit:
            return "NoIdleQubit";
        case ErrorCode::kIndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::kCapExceeded:
            return "CapExceeded";
        case ErrorCode::kParse:
            return "ParseError";
        case ErrorCode::kDirectionMismatch:
            return "DirectionMismatch";
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace qsp
