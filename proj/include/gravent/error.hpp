// Copyright 2026 The gravent Authors
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

#ifndef GRAVENT_ERROR_HPP
#define GRAVENT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gravent {

enum class ErrorCode {
    DimensionMismatch,
    NotHermitian,
    NotDensityMatrix,
    NotNormalized,
    NotConverged,
    OverlapOutOfRange,
    SingularGeometry,
    InvalidArgument,
    InvalidOutcome,
    InvalidK,
    HorizonTooShort,
    ParseError,
    ValidationError,
    UnknownFigure,
    IoError,
};

const char *error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace gravent

#endif  // GRAVENT_ERROR_HPP
