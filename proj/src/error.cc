// Copyright 2026 The wqsc Authors
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

#include "wqsc/error.h"

namespace wqsc {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::ZeroVector:
            return "ZeroVector";
        case ErrorCode::CapacityExceeded:
            return "CapacityExceeded";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::SameQubit:
            return "SameQubit";
        case ErrorCode::InvalidBasis:
            return "InvalidBasis";
        case ErrorCode::UnknownLabel:
            return "UnknownLabel";
        case ErrorCode::InvalidConfig:
            return "InvalidConfig";
        case ErrorCode::InvalidOutcome:
            return "InvalidOutcome";
        case ErrorCode::BasisMismatch:
            return "BasisMismatch";
        case ErrorCode::ArityMismatch:
            return "ArityMismatch";
        case ErrorCode::MissingTranscript:
            return "MissingTranscript";
        case ErrorCode::UnsupportedPair:
            return "UnsupportedPair";
        case ErrorCode::InvalidCounts:
            return "InvalidCounts";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace wqsc
